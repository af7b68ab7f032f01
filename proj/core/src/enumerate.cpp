// Exhaustive enumeration of totally positive monic integer polynomials of
// fixed degree and trace.
//
// Search layout: write the polynomial through its elementary symmetric
// values e_1..e_m with e_1 = t fixed.  Candidates for e_k are confined to
//   C(m,k) <= e_k   (Maclaurin chain against e_m >= 1), and
//   e_k^(k-1) C(m,k-1)^k <= e_(k-1)^k C(m,k)^(k-1)   (Maclaurin, upper), and
//   e_k C(m,k-1)^2 e_(k-2) <= e_(k-1)^2 C(m,k-2) C(m,k)   (Newton, upper).
// Every bound is a necessary condition for all-real positive roots, so the
// window never excludes a valid leaf; every surviving leaf is still verified
// by the full Sturm test.

#include "curvedeg/enumerate.hpp"

#include <atomic>
#include <algorithm>
#include <future>
#include <stdexcept>
#include <thread>
#include <utility>

#include "curvedeg/errors.hpp"
#include "curvedeg/poly_text.hpp"

namespace curvedeg {

const std::vector<TPEntry>* Catalog::find(CellKey key) const {
  auto it = cells_.find(key);
  return it == cells_.end() ? nullptr : &it->second;
}

void Catalog::insert_complete(CellKey key, std::vector<TPEntry> entries) {
  cells_.insert_or_assign(key, std::move(entries));
}

std::vector<CellKey> Catalog::complete_cells() const {
  std::vector<CellKey> keys;
  keys.reserve(cells_.size());
  for (const auto& [k, v] : cells_) keys.push_back(k);
  return keys;
}

size_t Catalog::entry_count() const {
  size_t n = 0;
  for (const auto& [k, v] : cells_) n += v.size();
  return n;
}

namespace {

struct Budget {
  explicit Budget(std::uint64_t limit) : limit(limit) {}

  void charge() {
    std::uint64_t seen = used.fetch_add(1, std::memory_order_relaxed) + 1;
    if (seen > limit) {
      throw resource_limit_error(
          "enumeration node budget exhausted (" + std::to_string(limit) +
              " nodes); rerun with a larger --budget",
          seen);
    }
  }

  std::atomic<std::uint64_t> used{0};
  std::uint64_t limit;
};

mpz_class mpz_pow(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::vector<mpz_class> binomial_row(long long m) {
  std::vector<mpz_class> c(static_cast<size_t>(m) + 1);
  c[0] = 1;
  for (long long k = 1; k <= m; ++k) {
    c[static_cast<size_t>(k)] =
        c[static_cast<size_t>(k - 1)] * static_cast<long>(m - k + 1) /
        static_cast<long>(k);
  }
  return c;
}

// Depth-first walk over e_2..e_m for one fixed degree/trace cell.  Besides
// the Maclaurin/Newton windows on the e_k themselves, the walker maintains
// the power sums p_1..p_k of the partial assignment (Newton's identities)
// and requires
//   p_(k-1)^2 <= p_(k-2) p_k   (Cauchy-Schwarz on positive roots) and
//   p_k <= t p_(k-1) - 1       (every root is strictly below t),
// which translate into a second window on e_k since p_k is linear in e_k.
struct CellWalker {
  long long m;
  const std::vector<mpz_class>& binom;
  Budget& budget;
  std::vector<mpz_class> e;   // e[0] = 1, e[1] = t
  std::vector<mpz_class> ps;  // ps[0] = m, ps[1] = t
  std::vector<MonicIntPoly> out;

  CellWalker(long long m, long long t, const std::vector<mpz_class>& binom,
             Budget& budget)
      : m(m), binom(binom), budget(budget),
        e(static_cast<size_t>(m) + 1), ps(static_cast<size_t>(m) + 1) {
    e[0] = 1;
    e[1] = static_cast<long>(t);
    ps[0] = static_cast<long>(m);
    ps[1] = static_cast<long>(t);
  }

  // Largest x with x^(k-1) * C(m,k-1)^k <= e_(k-1)^k * C(m,k)^(k-1).
  mpz_class maclaurin_upper(long long k) const {
    mpz_class rhs = mpz_pow(e[static_cast<size_t>(k - 1)],
                            static_cast<unsigned long>(k)) *
                    mpz_pow(binom[static_cast<size_t>(k)],
                            static_cast<unsigned long>(k - 1));
    mpz_class lhs_unit = mpz_pow(binom[static_cast<size_t>(k - 1)],
                                 static_cast<unsigned long>(k));
    mpz_class q = rhs / lhs_unit;
    mpz_class r;
    mpz_root(r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k - 1));
    while (mpz_pow(r + 1, static_cast<unsigned long>(k - 1)) * lhs_unit <= rhs) ++r;
    while (r > 0 && mpz_pow(r, static_cast<unsigned long>(k - 1)) * lhs_unit > rhs) --r;
    return r;
  }

  // Largest x with x * C(m,k-1)^2 * e_(k-2) <= e_(k-1)^2 * C(m,k-2) * C(m,k).
  mpz_class newton_upper(long long k) const {
    mpz_class num = e[static_cast<size_t>(k - 1)] *
                    e[static_cast<size_t>(k - 1)] *
                    binom[static_cast<size_t>(k - 2)] *
                    binom[static_cast<size_t>(k)];
    mpz_class den = binom[static_cast<size_t>(k - 1)] *
                    binom[static_cast<size_t>(k - 1)] *
                    e[static_cast<size_t>(k - 2)];
    return num / den;
  }

  // s_k = sum_{i=1}^{k-1} (-1)^(i-1) e_i p_(k-i), so that
  // p_k = s_k + (-1)^(k-1) k e_k.
  mpz_class newton_tail(long long k) const {
    mpz_class s = 0;
    for (long long i = 1; i < k; ++i) {
      mpz_class term = e[static_cast<size_t>(i)] * ps[static_cast<size_t>(k - i)];
      if (i % 2 == 0) s -= term; else s += term;
    }
    return s;
  }

  std::pair<mpz_class, mpz_class> window(long long k, const mpz_class& s) const {
    mpz_class lo = binom[static_cast<size_t>(k)];  // e_m >= 1 via Maclaurin
    mpz_class hi = maclaurin_upper(k);
    mpz_class nh = newton_upper(k);
    if (nh < hi) hi = nh;

    // Power-sum window: ceil(p_(k-1)^2 / p_(k-2)) <= p_k <= t p_(k-1) - 1.
    const mpz_class& prev = ps[static_cast<size_t>(k - 1)];
    const mpz_class& prev2 = ps[static_cast<size_t>(k - 2)];
    mpz_class p_lo;
    mpz_cdiv_q(p_lo.get_mpz_t(), mpz_class(prev * prev).get_mpz_t(),
               prev2.get_mpz_t());
    mpz_class p_hi = e[1] * prev - 1;
    mpz_class kk(static_cast<long>(k));
    mpz_class e_lo, e_hi;
    if (k % 2 == 1) {  // p_k = s + k e_k
      mpz_cdiv_q(e_lo.get_mpz_t(), mpz_class(p_lo - s).get_mpz_t(), kk.get_mpz_t());
      mpz_fdiv_q(e_hi.get_mpz_t(), mpz_class(p_hi - s).get_mpz_t(), kk.get_mpz_t());
    } else {           // p_k = s - k e_k
      mpz_cdiv_q(e_lo.get_mpz_t(), mpz_class(s - p_hi).get_mpz_t(), kk.get_mpz_t());
      mpz_fdiv_q(e_hi.get_mpz_t(), mpz_class(s - p_lo).get_mpz_t(), kk.get_mpz_t());
    }
    if (e_lo > lo) lo = e_lo;
    if (e_hi < hi) hi = e_hi;
    return {lo, hi};
  }

  void set_level(long long k, const mpz_class& v, const mpz_class& s) {
    e[static_cast<size_t>(k)] = v;
    mpz_class kv = mpz_class(static_cast<long>(k)) * v;
    ps[static_cast<size_t>(k)] = k % 2 == 1 ? mpz_class(s + kv) : mpz_class(s - kv);
  }

  void choose(long long k) {
    if (k > m) {
      emit_leaf();
      return;
    }
    mpz_class s = newton_tail(k);
    auto [lo, hi] = window(k, s);
    for (mpz_class v = lo; v <= hi; ++v) {
      budget.charge();
      set_level(k, v, s);
      choose(k + 1);
    }
  }

  // Continue the power sums past degree m and keep requiring the
  // Cauchy-Schwarz chain and the strict max-root bound.  Both stay valid for
  // positive real roots at every order, and leaves with complex root pairs
  // usually break one of them within a few steps, long before the Sturm
  // test would have to decide.
  bool extended_power_sum_check() const {
    const long long extra = m + 6;
    std::vector<mpz_class> q(ps.begin(), ps.end());
    q.resize(static_cast<size_t>(extra) + 1);
    for (long long k = m + 1; k <= extra; ++k) {
      mpz_class acc = 0;
      for (long long i = 1; i <= m; ++i) {
        mpz_class term = e[static_cast<size_t>(i)] * q[static_cast<size_t>(k - i)];
        if (i % 2 == 0) acc -= term; else acc += term;
      }
      if (acc * q[static_cast<size_t>(k - 2)] <
          q[static_cast<size_t>(k - 1)] * q[static_cast<size_t>(k - 1)]) {
        return false;
      }
      if (acc >= e[1] * q[static_cast<size_t>(k - 1)]) return false;
      q[static_cast<size_t>(k)] = std::move(acc);
    }
    return true;
  }

  void emit_leaf() {
    if (m >= 2 && !extended_power_sum_check()) return;
    std::vector<mpz_class> coeffs(static_cast<size_t>(m) + 1);
    for (long long j = 0; j <= m; ++j) {
      const mpz_class& ej = e[static_cast<size_t>(j)];
      coeffs[static_cast<size_t>(m - j)] = j % 2 == 0 ? ej : -ej;
    }
    MonicIntPoly p(std::move(coeffs));
    if (is_totally_positive(p)) out.push_back(std::move(p));
  }
};

std::vector<MonicIntPoly> dfs_enumerate(long long m, long long t,
                                        Budget& budget,
                                        const EnumLimits& limits) {
  std::vector<MonicIntPoly> found;
  if (t < m) return found;  // AM-GM: a totally positive poly has trace >= degree
  auto binom = binomial_row(m);
  if (m == 1) {
    budget.charge();
    MonicIntPoly p = MonicIntPoly::linear(mpz_class(static_cast<long>(t)));
    if (is_totally_positive(p)) found.push_back(std::move(p));
    return found;
  }

  CellWalker probe(m, t, binom, budget);
  const mpz_class s2 = probe.newton_tail(2);
  auto [lo2, hi2] = probe.window(2, s2);

  unsigned threads = limits.max_threads != 0
                         ? limits.max_threads
                         : std::max(1u, std::thread::hardware_concurrency());
  bool parallel = m >= 5 && threads > 1 && hi2 - lo2 + 1 >= 2;

  if (!parallel) {
    for (mpz_class v = lo2; v <= hi2; ++v) {
      budget.charge();
      probe.set_level(2, v, s2);
      probe.choose(3);
    }
    found = std::move(probe.out);
  } else {
    // Deal the (e_2, e_3) prefix pairs round-robin across workers; the
    // final canonical sort makes the output independent of the split.
    std::vector<std::future<std::vector<MonicIntPoly>>> futures;
    for (unsigned w = 0; w < threads; ++w) {
      futures.push_back(std::async(std::launch::async, [&, w] {
        CellWalker walker(m, t, binom, budget);
        std::uint64_t item = 0;
        for (mpz_class v2 = lo2; v2 <= hi2; ++v2) {
          walker.set_level(2, v2, s2);
          mpz_class s3 = walker.newton_tail(3);
          auto [lo3, hi3] = walker.window(3, s3);
          for (mpz_class v3 = lo3; v3 <= hi3; ++v3) {
            if (item++ % threads != w) continue;
            budget.charge();
            walker.set_level(3, v3, s3);
            walker.choose(4);
          }
        }
        return std::move(walker.out);
      }));
    }
    for (auto& f : futures) {
      auto part = f.get();
      found.insert(found.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
  }

  std::sort(found.begin(), found.end());
  return found;
}

std::vector<TPEntry::Factor> factor_against_cells(Catalog& catalog,
                                                  const MonicIntPoly& p,
                                                  Budget& budget,
                                                  const EnumLimits& limits);

const std::vector<TPEntry>& ensure_cell(Catalog& catalog, long long m,
                                        long long t, Budget& budget,
                                        const EnumLimits& limits) {
  CellKey key{m, t};
  if (const auto* c = catalog.find(key)) return *c;
  auto polys = dfs_enumerate(m, t, budget, limits);
  std::vector<TPEntry> entries;
  entries.reserve(polys.size());
  for (auto& poly : polys) {
    auto factors = factor_against_cells(catalog, poly, budget, limits);
    TPEntry entry{poly, poly.degree(), trace(poly), norm(poly), false,
                  std::move(factors)};
    entry.irreducible =
        entry.factors.size() == 1 && entry.factors.front().multiplicity == 1;
    entries.push_back(std::move(entry));
  }
  catalog.insert_complete(key, std::move(entries));
  return *catalog.find(key);
}

// Trial division against complete irreducible cells of strictly smaller
// degree.  Any monic factor of a totally positive polynomial is totally
// positive (its roots are a subset), and the complementary factor has trace
// at least its degree, which bounds the trace scan.  A reducible polynomial
// always has an irreducible factor of degree <= m/2, so the degree scan
// stops there; exhausting it certifies irreducibility.
std::vector<TPEntry::Factor> factor_against_cells(Catalog& catalog,
                                                  const MonicIntPoly& p,
                                                  Budget& budget,
                                                  const EnumLimits& limits) {
  int m = p.degree();
  if (m == 0) return {};
  mpz_class trace_z = trace(p);
  if (!trace_z.fits_slong_p()) {
    throw resource_limit_error("factor_tp: trace too large for a catalog scan",
                               budget.used.load());
  }
  long long t = trace_z.get_si();
  for (long long dp = 1; dp <= m / 2; ++dp) {
    for (long long tp = dp; tp <= t - (m - dp); ++tp) {
      const auto& cell = ensure_cell(catalog, dp, tp, budget, limits);
      for (const auto& candidate : cell) {
        if (!candidate.irreducible) continue;
        auto quotient = divide_exact(p, candidate.poly);
        if (!quotient) continue;
        int mult = 1;
        while (quotient->degree() >= candidate.poly.degree()) {
          auto next = divide_exact(*quotient, candidate.poly);
          if (!next) break;
          quotient = std::move(next);
          ++mult;
        }
        auto rest = factor_against_cells(catalog, *quotient, budget, limits);
        rest.push_back({candidate.poly, mult});
        std::sort(rest.begin(), rest.end(),
                  [](const TPEntry::Factor& a, const TPEntry::Factor& b) {
                    return a.poly < b.poly;
                  });
        return rest;
      }
    }
  }
  // No divisor of any smaller degree exists: irreducible by exhaustion.
  return {{p, 1}};
}

}  // namespace

std::vector<TPEntry> enumerate_tp(Catalog& catalog, long long m, long long t,
                                  const EnumLimits& limits) {
  if (m < 1) throw std::invalid_argument("enumerate_tp: degree must be >= 1");
  Budget budget(limits.node_budget);
  return ensure_cell(catalog, m, t, budget, limits);
}

std::vector<TPEntry> enumerate_tp_irreducible(Catalog& catalog, long long m,
                                              long long t,
                                              const EnumLimits& limits) {
  auto all = enumerate_tp(catalog, m, t, limits);
  std::erase_if(all, [](const TPEntry& e) { return !e.irreducible; });
  return all;
}

TPEntry factor_tp(Catalog& catalog, const MonicIntPoly& p,
                  const EnumLimits& limits) {
  if (!is_totally_positive(p)) {
    throw std::invalid_argument("factor_tp: polynomial is not totally positive: " +
                                render_poly(p));
  }
  Budget budget(limits.node_budget);
  auto factors = factor_against_cells(catalog, p, budget, limits);
  TPEntry entry{p, p.degree(), trace(p), norm(p), false, std::move(factors)};
  entry.irreducible =
      entry.factors.size() == 1 && entry.factors.front().multiplicity == 1 &&
      entry.degree >= 1;
  return entry;
}

MinTraceResult min_trace_irreducible(Catalog& catalog, long long m,
                                     const EnumLimits& limits) {
  if (m < 1) throw std::invalid_argument("min_trace_irreducible: degree must be >= 1");
  // 2m+2 comfortably covers the minimum for every degree this tool can
  // enumerate (the conjectural minimum is 2m-1); hitting the cap without a
  // witness is reported as a search-ceiling error, never as a result.
  const long long scan_cap = 2 * m + 2;
  for (long long t = m; t <= scan_cap; ++t) {
    auto witnesses = enumerate_tp_irreducible(catalog, m, t, limits);
    if (!witnesses.empty()) {
      return MinTraceResult{m, t, std::move(witnesses)};
    }
  }
  throw resource_limit_error(
      "min_trace_irreducible: no irreducible entry with trace <= 2m+2 for m = " +
          std::to_string(m),
      0);
}

ConjectureReport check_conjecture(Catalog& catalog, long long m,
                                  const EnumLimits& limits) {
  auto min_result = min_trace_irreducible(catalog, m, limits);
  ConjectureReport report;
  report.degree = m;
  report.min_trace = min_result.min_trace;
  report.holds_inequality = min_result.min_trace >= 2 * m - 1;
  if (min_result.min_trace <= 2 * m - 1) {
    report.equality_witnesses =
        min_result.min_trace == 2 * m - 1
            ? std::move(min_result.witnesses)
            : enumerate_tp_irreducible(catalog, m, 2 * m - 1, limits);
  }
  report.all_norm_one = std::all_of(
      report.equality_witnesses.begin(), report.equality_witnesses.end(),
      [](const TPEntry& e) { return e.norm_value == 1; });
  return report;
}

SmythScanReport smyth_threshold_scan(Catalog& catalog, long long m,
                                     long long ratio_num, long long ratio_den,
                                     const EnumLimits& limits) {
  if (m < 1) throw std::invalid_argument("smyth_threshold_scan: degree must be >= 1");
  if (ratio_num < 1 || ratio_den < 1) {
    throw std::invalid_argument("smyth_threshold_scan: ratio must be positive");
  }
  SmythScanReport report;
  report.degree = m;
  report.ratio_num = ratio_num;
  report.ratio_den = ratio_den;
  report.max_trace = (ratio_num * m) / ratio_den;  // largest t with t*den <= num*m
  for (long long t = m; t <= report.max_trace; ++t) {
    auto cell = enumerate_tp_irreducible(catalog, m, t, limits);
    for (auto& entry : cell) {
      if (entry.trace_value != static_cast<long>(2 * m - 1) ||
          entry.norm_value != 1) {
        report.violations.push_back(
            render_poly(entry.poly) + " has trace " +
            entry.trace_value.get_str() + " and norm " +
            entry.norm_value.get_str() + ", contradicting the threshold theorem");
      }
      report.entries.push_back(std::move(entry));
    }
  }
  report.consistent = report.violations.empty();
  return report;
}

}  // namespace curvedeg
