#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace curvedeg::testing {

namespace {

long long binom_ll(long long m, long long k) {
  long long c = 1;
  for (long long i = 1; i <= k; ++i) c = c * (m - i + 1) / i;
  return c;
}

long long pow_ll(long long b, long long e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void naive_scan(long long m, long long t, long long j, std::vector<long long>& e,
                std::vector<MonicIntPoly>& out) {
  if (j > m) {
    std::vector<mpz_class> coeffs(static_cast<size_t>(m) + 1);
    for (long long i = 0; i <= m; ++i) {
      long long ei = e[static_cast<size_t>(i)];
      coeffs[static_cast<size_t>(m - i)] =
          i % 2 == 0 ? mpz_class(static_cast<long>(ei))
                     : mpz_class(static_cast<long>(-ei));
    }
    MonicIntPoly p(std::move(coeffs));
    if (is_totally_positive(p)) out.push_back(std::move(p));
    return;
  }
  long long box = binom_ll(m, j) * pow_ll(t, j);
  for (long long v = -box; v <= box; ++v) {
    if (v < 1) continue;
    if (j == 2 && 2 * v > t * t) continue;
    if (j * v > t * e[static_cast<size_t>(j - 1)]) continue;
    e[static_cast<size_t>(j)] = v;
    naive_scan(m, t, j + 1, e, out);
  }
}

}  // namespace

std::vector<MonicIntPoly> naive_tp_enumerate(long long m, long long t) {
  std::vector<MonicIntPoly> out;
  if (m < 1) throw std::invalid_argument("naive_tp_enumerate: m >= 1 required");
  if (t < 1) return out;
  if (m == 1) {
    MonicIntPoly p = MonicIntPoly::linear(mpz_class(static_cast<long>(t)));
    if (is_totally_positive(p)) out.push_back(std::move(p));
    return out;
  }
  std::vector<long long> e(static_cast<size_t>(m) + 1);
  e[0] = 1;
  e[1] = t;
  naive_scan(m, t, 2, e, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Element of Z[A,B]/(A^2, B^n): grid[i][j] is the coefficient of A^i B^j.
struct RingElem {
  int n;
  std::vector<std::vector<mpz_class>> grid;

  explicit RingElem(int n)
      : n(n), grid(2, std::vector<mpz_class>(static_cast<size_t>(n))) {}
};

RingElem ring_mul(const RingElem& a, const RingElem& b) {
  RingElem r(a.n);
  for (int ia = 0; ia < 2; ++ia) {
    for (int ja = 0; ja < a.n; ++ja) {
      if (a.grid[ia][static_cast<size_t>(ja)] == 0) continue;
      for (int ib = 0; ib + ia < 2; ++ib) {
        for (int jb = 0; jb + ja < a.n; ++jb) {
          if (b.grid[ib][static_cast<size_t>(jb)] == 0) continue;
          r.grid[ia + ib][static_cast<size_t>(ja + jb)] +=
              a.grid[ia][static_cast<size_t>(ja)] *
              b.grid[ib][static_cast<size_t>(jb)];
        }
      }
    }
  }
  return r;
}

RingElem make_class(int n, const mpz_class& x, const mpz_class& y) {
  RingElem r(n);
  r.grid[1][0] = x;  // x * A
  r.grid[0][1] = y;  // y * B
  return r;
}

mpz_class factorial_z(long long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace

mpz_class top_intersection_oracle(int n, const mpz_class& deg_y,
                                  const mpz_class& x, const mpz_class& y) {
  RingElem acc = make_class(n, x, y);
  for (int i = 1; i < n; ++i) acc = ring_mul(acc, make_class(n, x, y));
  // Only A B^(n-1) evaluates to a nonzero number.
  mpz_class value = acc.grid[1][static_cast<size_t>(n - 1)] *
                    factorial_z(n - 1) * deg_y;
  mpz_class q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), value.get_mpz_t(),
              factorial_z(n).get_mpz_t());
  if (rem != 0) throw std::logic_error("top_intersection_oracle: not divisible by n!");
  return q;
}

mpz_class mixed_intersection_oracle(int n, const mpz_class& deg_y,
                                    const mpz_class& x1, const mpz_class& y1,
                                    const mpz_class& x2, const mpz_class& y2) {
  RingElem acc = make_class(n, x1, y1);
  for (int i = 1; i < n - 1; ++i) acc = ring_mul(acc, make_class(n, x1, y1));
  acc = ring_mul(acc, make_class(n, x2, y2));
  mpz_class value = acc.grid[1][static_cast<size_t>(n - 1)] *
                    factorial_z(n - 1) * deg_y;
  mpz_class q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), value.get_mpz_t(),
              factorial_z(n - 1).get_mpz_t());
  if (rem != 0) {
    throw std::logic_error("mixed_intersection_oracle: not divisible by (n-1)!");
  }
  return q;
}

// ---------------------------------------------------------------------------

namespace {

using FpPoly = std::vector<long long>;  // ascending, reduced mod p

FpPoly fp_trim(FpPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long long p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
  }
  return fp_trim(std::move(r));
}

FpPoly fp_mod(FpPoly a, const FpPoly& f, long long p) {
  // f monic mod p
  while (a.size() >= f.size()) {
    long long top = a.back();
    size_t shift = a.size() - f.size();
    if (top != 0) {
      for (size_t j = 0; j < f.size(); ++j) {
        a[shift + j] = ((a[shift + j] - top * f[j]) % p + p) % p;
      }
    }
    a.pop_back();
    a = fp_trim(std::move(a));
    if (a.size() < f.size()) break;
  }
  return a;
}

FpPoly fp_powmod_x(long long exp_base, int reps, const FpPoly& f, long long p) {
  // x^(p^reps) mod f by repeated squaring of the exponent p.
  FpPoly x = {0, 1};
  FpPoly acc = fp_mod(x, f, p);
  for (int r = 0; r < reps; ++r) {
    // acc = acc^p mod f
    FpPoly result = {1};
    FpPoly base = acc;
    long long e = exp_base;
    while (e > 0) {
      if (e & 1) result = fp_mod(fp_mul(result, base, p), f, p);
      base = fp_mod(fp_mul(base, base, p), f, p);
      e >>= 1;
    }
    acc = std::move(result);
  }
  return acc;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long long p) {
  auto inv = [p](long long v) {
    long long r = 1, base = ((v % p) + p) % p, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  while (!b.empty()) {
    long long scale = inv(b.back());
    FpPoly bm(b.size());
    for (size_t i = 0; i < b.size(); ++i) bm[i] = b[i] * scale % p;
    a = fp_mod(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

bool fp_irreducible(const MonicIntPoly& poly, long long p) {
  int n = poly.degree();
  FpPoly f(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    f[static_cast<size_t>(i)] =
        mpz_class(poly.coeff(i) % static_cast<long>(p) + static_cast<long>(p)).get_si() % p;
  }
  if (f.back() != 1) return false;  // p divides nothing here since monic, safe
  // f irreducible over F_p iff x^(p^n) = x mod f and gcd(x^(p^(n/q)) - x, f)
  // is constant for every prime q | n.
  FpPoly xq = fp_powmod_x(p, n, f, p);
  FpPoly x = {0, 1};
  FpPoly diff = fp_trim([&] {
    FpPoly d = xq;
    d.resize(std::max(d.size(), x.size()), 0);
    for (size_t i = 0; i < x.size(); ++i) d[i] = ((d[i] - x[i]) % p + p) % p;
    return d;
  }());
  if (!fp_mod(diff, f, p).empty()) return false;
  for (int q = 2; q <= n; ++q) {
    if (n % q != 0) continue;
    bool q_prime = true;
    for (int w = 2; w * w <= q; ++w) {
      if (q % w == 0) { q_prime = false; break; }
    }
    if (!q_prime) continue;
    FpPoly xr = fp_powmod_x(p, n / q, f, p);
    FpPoly d = xr;
    d.resize(std::max(d.size(), x.size()), 0);
    for (size_t i = 0; i < x.size(); ++i) d[i] = ((d[i] - x[i]) % p + p) % p;
    FpPoly g = fp_gcd(f, fp_trim(std::move(d)), p);
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace

bool irreducible_mod_p_certificate(const MonicIntPoly& p) {
  if (p.degree() < 1) return false;
  if (p.degree() == 1) return true;
  static const long long primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                     31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                                     73, 79, 83, 89, 97, 101, 103, 107, 109, 113};
  for (long long q : primes) {
    if (fp_irreducible(p, q)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(
    const MonicIntPoly& p, const mpq_class& lo, const mpq_class& hi,
    const mpq_class& eps) {
  std::vector<std::pair<mpq_class, mpq_class>> result;
  struct Item { mpq_class lo, hi; int count; };
  std::vector<Item> stack;
  int total = count_real_roots(p, Interval::open(lo, hi));
  if (total > 0) stack.push_back({lo, hi, total});
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    if (item.count == 1 && item.hi - item.lo < eps) {
      result.emplace_back(item.lo, item.hi);
      continue;
    }
    mpq_class mid = (item.lo + item.hi) / 2;
    // Nudge off a root: intervals are open, so count each half plus the
    // midpoint itself.
    int left = count_real_roots(p, Interval::open(item.lo, mid));
    bool mid_root = evaluate(p, mid) == 0;
    int right = item.count - left - (mid_root ? 1 : 0);
    if (mid_root) {
      result.emplace_back(mid, mid);
    }
    if (left > 0) stack.push_back({item.lo, mid, left});
    if (right > 0) stack.push_back({mid, item.hi, right});
  }
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return result;
}

}  // namespace curvedeg::testing
