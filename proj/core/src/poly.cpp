// Exact polynomial arithmetic and Sturm-sequence root counting over Z.

#include "curvedeg/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "curvedeg/errors.hpp"

namespace curvedeg {

namespace {

void strip_trailing_zeros(std::vector<mpz_class>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  strip_trailing_zeros(coeffs_);
}

IntPoly IntPoly::constant(mpz_class c) {
  std::vector<mpz_class> v;
  if (c != 0) v.push_back(std::move(c));
  return IntPoly(std::move(v));
}

mpz_class IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

mpq_class IntPoly::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + mpq_class(*it);
  }
  return acc;
}

mpz_class IntPoly::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

int IntPoly::sign_at(const mpq_class& x) const {
  return sgn(evaluate(x));
}

int IntPoly::sign_at_pos_infinity() const {
  if (is_zero()) return 0;
  return sgn(coeffs_.back());
}

int IntPoly::sign_at_neg_infinity() const {
  if (is_zero()) return 0;
  int s = sgn(coeffs_.back());
  return degree() % 2 == 0 ? s : -s;
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return *this;
  mpz_class g = content();
  if (g == 1) return *this;
  std::vector<mpz_class> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  std::vector<mpz_class> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) out[i] += b.coeffs_[i];
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  return a + (-b);
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(const mpz_class& c, const IntPoly& a) {
  if (c == 0) return IntPoly();
  std::vector<mpz_class> out(a.coeffs_.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = c * a.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder: zero divisor");
  int da = a.degree(), db = b.degree();
  if (da < db) return a;
  // Classical pseudo-division: each elimination step multiplies the running
  // remainder by lc(b), so the result equals lc(b)^(deg a - deg b + 1) * a
  // reduced mod b, entirely over Z.
  std::vector<mpz_class> r = a.coeffs();
  const auto& bc = b.coeffs();
  const mpz_class& lb = b.leading();
  int e = da - db + 1;
  while (true) {
    strip_trailing_zeros(r);
    int dr = static_cast<int>(r.size()) - 1;
    if (r.empty() || dr < db) break;
    mpz_class top = r.back();
    std::vector<mpz_class> next(static_cast<size_t>(dr));
    for (int i = 0; i < dr; ++i) {
      mpz_class v = lb * r[static_cast<size_t>(i)];
      int j = i - (dr - db);
      if (j >= 0) v -= top * bc[static_cast<size_t>(j)];
      next[static_cast<size_t>(i)] = std::move(v);
    }
    r = std::move(next);
    --e;
  }
  if (e > 0 && !r.empty()) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : r) c *= f;
  }
  return IntPoly(std::move(r));
}

IntPoly exact_divide_unit_lead(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero() || (b.leading() != 1 && b.leading() != -1)) {
    throw std::invalid_argument("exact_divide_unit_lead: divisor must have leading coefficient +-1");
  }
  if (a.is_zero()) return IntPoly();
  int da = a.degree(), db = b.degree();
  if (da < db) throw std::invalid_argument("exact_divide_unit_lead: divisor degree exceeds dividend");
  std::vector<mpz_class> rem = a.coeffs();
  std::vector<mpz_class> quot(static_cast<size_t>(da - db + 1));
  const auto& bc = b.coeffs();
  bool neg = b.leading() == -1;
  for (int i = da - db; i >= 0; --i) {
    mpz_class q = rem[static_cast<size_t>(i + db)];
    if (neg) q = -q;
    if (q != 0) {
      for (int j = 0; j <= db; ++j) {
        rem[static_cast<size_t>(i + j)] -= q * bc[static_cast<size_t>(j)];
      }
    }
    quot[static_cast<size_t>(i)] = std::move(q);
  }
  for (const auto& c : rem) {
    if (c != 0) throw std::invalid_argument("exact_divide_unit_lead: division is not exact");
  }
  return IntPoly(std::move(quot));
}

IntPoly integer_poly_gcd(IntPoly a, IntPoly b) {
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && sgn(a.leading()) < 0) a = -a;
  return a;
}

// ---------------------------------------------------------------------------

MonicIntPoly::MonicIntPoly(std::vector<mpz_class> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("MonicIntPoly: empty coefficient sequence");
  }
  if (coeffs_.back() != 1) {
    throw std::invalid_argument("MonicIntPoly: leading coefficient must be 1");
  }
}

MonicIntPoly MonicIntPoly::one() {
  return MonicIntPoly({mpz_class(1)});
}

MonicIntPoly MonicIntPoly::variable() {
  return MonicIntPoly({mpz_class(0), mpz_class(1)});
}

MonicIntPoly MonicIntPoly::linear(const mpz_class& root) {
  return MonicIntPoly({-root, mpz_class(1)});
}

MonicIntPoly MonicIntPoly::from_roots(const std::vector<mpz_class>& roots) {
  MonicIntPoly acc = one();
  for (const auto& r : roots) acc = acc * linear(r);
  return acc;
}

std::optional<MonicIntPoly> MonicIntPoly::from_int_poly(const IntPoly& p) {
  if (p.is_zero() || p.leading() != 1) return std::nullopt;
  return MonicIntPoly(p.coeffs());
}

MonicIntPoly MonicIntPoly::operator*(const MonicIntPoly& rhs) const {
  return MonicIntPoly((as_int_poly() * rhs.as_int_poly()).coeffs());
}

MonicIntPoly MonicIntPoly::pow(unsigned e) const {
  return MonicIntPoly(as_int_poly().pow(e).coeffs());
}

std::strong_ordering operator<=>(const MonicIntPoly& a, const MonicIntPoly& b) {
  if (a.degree() != b.degree()) {
    return a.degree() < b.degree() ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  }
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

Interval::Interval(std::optional<mpq_class> lo, std::optional<mpq_class> hi,
                   bool lo_open, bool hi_open)
    : lower(std::move(lo)), upper(std::move(hi)),
      lower_open(lo_open), upper_open(hi_open) {
  if (lower) lower->canonicalize();
  if (upper) upper->canonicalize();
  if (!lower) lower_open = true;
  if (!upper) upper_open = true;
  if (lower && upper && *lower >= *upper) {
    throw std::invalid_argument("Interval: lower bound must be below upper bound");
  }
}

Interval Interval::all() {
  return Interval(std::nullopt, std::nullopt, true, true);
}

Interval Interval::positive() {
  return Interval(mpq_class(0), std::nullopt, true, true);
}

Interval Interval::open(const mpq_class& a, const mpq_class& b) {
  return Interval(a, b, true, true);
}

Interval Interval::closed(const mpq_class& a, const mpq_class& b) {
  return Interval(a, b, false, false);
}

Interval Interval::at_most(const mpq_class& b) {
  return Interval(std::nullopt, b, true, false);
}

Interval Interval::greater_than(const mpq_class& a) {
  return Interval(a, std::nullopt, true, true);
}

// ---------------------------------------------------------------------------

mpq_class evaluate(const MonicIntPoly& p, const mpq_class& x) {
  return p.as_int_poly().evaluate(x);
}

IntPoly derivative(const MonicIntPoly& p) {
  if (p.degree() == 0) {
    throw std::invalid_argument("derivative: degree 0 polynomial has no formal derivative here");
  }
  std::vector<mpz_class> out(static_cast<size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) {
    out[static_cast<size_t>(i - 1)] = mpz_class(i) * p.coeff(i);
  }
  return IntPoly(std::move(out));
}

MonicIntPoly squarefree_part(const MonicIntPoly& p) {
  if (p.degree() == 0) return p;
  IntPoly g = integer_poly_gcd(p.as_int_poly(), derivative(p));
  if (g.degree() == 0) return p;
  IntPoly q = exact_divide_unit_lead(p.as_int_poly(), g);
  return *MonicIntPoly::from_int_poly(q);
}

namespace {

// Sturm chain with primitive pseudo-remainder steps.  Each pseudo-remainder
// is multiplied by lc^delta; when that factor is negative the sign must be
// flipped back before negating, otherwise the chain loses the Sturm
// property.  Content is stripped at every step, which only ever scales by a
// positive integer.
std::vector<IntPoly> sturm_chain(const IntPoly& p, const IntPoly& dp) {
  std::vector<IntPoly> chain;
  chain.push_back(p);
  chain.push_back(dp);
  while (!chain.back().is_zero()) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    if (b.degree() == 0) break;
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) {
      chain.push_back(IntPoly());
      break;
    }
    int delta = a.degree() - b.degree() + 1;
    bool flip = sgn(b.leading()) < 0 && (delta % 2 != 0);
    IntPoly next = (-r).primitive_part();
    if (flip) next = -next;
    chain.push_back(std::move(next));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

enum class Place { NegInf, Finite, PosInf };

int variations(const std::vector<IntPoly>& chain, Place place,
               const mpq_class* x) {
  int count = 0;
  int prev = 0;
  for (const auto& q : chain) {
    int s;
    switch (place) {
      case Place::NegInf: s = q.sign_at_neg_infinity(); break;
      case Place::PosInf: s = q.sign_at_pos_infinity(); break;
      default: s = q.sign_at(*x); break;
    }
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

// Distinct real roots of a squarefree chain[0] in (a, b], extended ends.
int count_roots_chain(const std::vector<IntPoly>& chain, const Interval& iv) {
  int va = iv.lower ? variations(chain, Place::Finite, &*iv.lower)
                    : variations(chain, Place::NegInf, nullptr);
  int vb = iv.upper ? variations(chain, Place::Finite, &*iv.upper)
                    : variations(chain, Place::PosInf, nullptr);
  int n = va - vb;
  // V(a) - V(b) counts roots in (a, b]; adjust for the requested openness.
  const IntPoly& p = chain.front();
  if (iv.lower && !iv.lower_open && p.sign_at(*iv.lower) == 0) ++n;
  if (iv.upper && iv.upper_open && p.sign_at(*iv.upper) == 0) --n;
  return n;
}

}  // namespace

int count_real_roots(const MonicIntPoly& p, const Interval& interval) {
  if (p.degree() == 0) return 0;
  if (p.degree() >= 1) {
    IntPoly g = integer_poly_gcd(p.as_int_poly(), derivative(p));
    if (g.degree() != 0) {
      throw contract_error("count_real_roots: polynomial is not squarefree (gcd(P, P') is non-constant)");
    }
  }
  auto chain = sturm_chain(p.as_int_poly(), derivative(p));
  return count_roots_chain(chain, interval);
}

bool is_totally_positive(const MonicIntPoly& p) {
  int m = p.degree();
  if (m == 0) return true;
  // Necessary sign pattern: if all roots are real positive then every
  // elementary symmetric value e_j = (-1)^j a_{m-j} is strictly positive.
  for (int i = 0; i < m; ++i) {
    int want = (m - i) % 2 == 0 ? 1 : -1;
    if (sgn(p.coeff(i)) != want) return false;
  }
  // Build the Sturm chain on p itself; when p has a repeated factor the
  // chain bottoms out at (a multiple of) gcd(p, p'), in which case we strip
  // it and rechain on the squarefree part.
  auto chain = sturm_chain(p.as_int_poly(), derivative(p));
  int target = m;
  if (chain.back().degree() > 0) {
    IntPoly g = chain.back().primitive_part();
    if (sgn(g.leading()) < 0) g = -g;
    IntPoly s = exact_divide_unit_lead(p.as_int_poly(), g);
    target = s.degree();
    MonicIntPoly sm = *MonicIntPoly::from_int_poly(s);
    chain = sturm_chain(s, derivative(sm));
  }
  // The sign pattern above already rules out roots <= 0, so p is totally
  // positive iff all `target` distinct roots lie in (0, +inf).  The sign of
  // a chain element at 0 is its constant coefficient and at +inf its
  // leading coefficient, so no evaluation is needed.
  int v0 = 0, vinf = 0, prev0 = 0, previnf = 0;
  for (const auto& q : chain) {
    int s0 = sgn(q.coeff(0));
    if (s0 != 0) {
      if (prev0 != 0 && s0 != prev0) ++v0;
      prev0 = s0;
    }
    int si = q.sign_at_pos_infinity();
    if (si != 0) {
      if (previnf != 0 && si != previnf) ++vinf;
      previnf = si;
    }
  }
  return v0 - vinf == target;
}

std::vector<mpz_class> power_sums(const MonicIntPoly& p, int k_max) {
  if (k_max < 1) throw std::invalid_argument("power_sums: k_max must be positive");
  int m = p.degree();
  // e[i] = i-th elementary symmetric value; e[i] = 0 for i > m.
  std::vector<mpz_class> e(static_cast<size_t>(k_max) + 1);
  e[0] = 1;
  for (int i = 1; i <= k_max && i <= m; ++i) {
    mpz_class v = p.coeff(m - i);
    e[static_cast<size_t>(i)] = i % 2 == 0 ? v : -v;
  }
  std::vector<mpz_class> ps(static_cast<size_t>(k_max) + 1);
  for (int k = 1; k <= k_max; ++k) {
    // Newton: p_k = sum_{i=1}^{k-1} (-1)^(i-1) e_i p_{k-i} + (-1)^(k-1) k e_k
    mpz_class acc = 0;
    for (int i = 1; i < k; ++i) {
      mpz_class term = e[static_cast<size_t>(i)] * ps[static_cast<size_t>(k - i)];
      if (i % 2 == 0) acc -= term; else acc += term;
    }
    mpz_class tail = mpz_class(k) * e[static_cast<size_t>(k)];
    if (k % 2 == 0) acc -= tail; else acc += tail;
    ps[static_cast<size_t>(k)] = std::move(acc);
  }
  return std::vector<mpz_class>(ps.begin() + 1, ps.end());
}

mpz_class trace(const MonicIntPoly& p) {
  int m = p.degree();
  if (m == 0) return 0;
  return -p.coeff(m - 1);
}

mpz_class norm(const MonicIntPoly& p) {
  int m = p.degree();
  if (m == 0) return 1;
  return m % 2 == 0 ? p.coeff(0) : -p.coeff(0);
}

std::optional<MonicIntPoly> divide_exact(const MonicIntPoly& p,
                                         const MonicIntPoly& d) {
  if (d.degree() > p.degree()) {
    throw std::invalid_argument("divide_exact: divisor degree exceeds dividend degree");
  }
  // Long division by a monic divisor stays in Z; divisibility is decided by
  // an exactly-zero remainder.
  std::vector<mpz_class> rem = p.coeffs();
  int dq = p.degree() - d.degree();
  std::vector<mpz_class> quot(static_cast<size_t>(dq) + 1);
  int db = d.degree();
  for (int i = dq; i >= 0; --i) {
    mpz_class q = rem[static_cast<size_t>(i + db)];
    if (q != 0) {
      for (int j = 0; j <= db; ++j) {
        rem[static_cast<size_t>(i + j)] -= q * d.coeff(j);
      }
    }
    quot[static_cast<size_t>(i)] = std::move(q);
  }
  for (int j = 0; j < db; ++j) {
    if (rem[static_cast<size_t>(j)] != 0) return std::nullopt;
  }
  return MonicIntPoly(std::move(quot));
}

}  // namespace curvedeg
