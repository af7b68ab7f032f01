// Degree bounds and the Q_C candidate model for polarized abelian-variety
// scenarios.

#include "curvedeg/feasibility.hpp"

#include <algorithm>
#include <stdexcept>

#include "curvedeg/errors.hpp"
#include "curvedeg/poly_text.hpp"

namespace curvedeg {

PolarizationType::PolarizationType(std::vector<long long> deltas)
    : deltas_(std::move(deltas)) {
  if (deltas_.empty()) {
    throw std::invalid_argument("PolarizationType: at least one delta required");
  }
  for (size_t i = 0; i < deltas_.size(); ++i) {
    if (deltas_[i] < 1) {
      throw std::invalid_argument("PolarizationType: deltas must be positive");
    }
    if (i > 0 && deltas_[i] % deltas_[i - 1] != 0) {
      throw std::invalid_argument(
          "PolarizationType: delta_" + std::to_string(i) +
          " must divide delta_" + std::to_string(i + 1) +
          " (divisibility chain violated)");
    }
  }
}

PolarizationType PolarizationType::principal(int n) {
  if (n < 1) throw std::invalid_argument("PolarizationType: dimension must be >= 1");
  return PolarizationType(std::vector<long long>(static_cast<size_t>(n), 1));
}

mpz_class PolarizationType::degree() const {
  mpz_class d = 1;
  for (long long v : deltas_) d *= static_cast<long>(v);
  return d;
}

bool PolarizationType::is_principal() const {
  return std::all_of(deltas_.begin(), deltas_.end(),
                     [](long long v) { return v == 1; });
}

std::string_view to_string(OutcomeTag tag) {
  switch (tag) {
    case OutcomeTag::SmoothJacobianCanonical: return "SmoothJacobianCanonical";
    case OutcomeTag::JacobianWithRM: return "JacobianWithRM";
    case OutcomeTag::Excluded: return "Excluded";
    case OutcomeTag::BiellipticQuotient: return "BiellipticQuotient";
    case OutcomeTag::IsogenyDegree2: return "IsogenyDegree2";
    case OutcomeTag::PrymBielliptic: return "PrymBielliptic";
    case OutcomeTag::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

namespace {

// (T-1)^k * f
MonicIntPoly ones_times(int k, const MonicIntPoly& f) {
  return MonicIntPoly::linear(1).pow(static_cast<unsigned>(k)) * f;
}

const MonicIntPoly& quad_4_2() {
  static const MonicIntPoly p({mpz_class(2), mpz_class(-4), mpz_class(1)});
  return p;  // T^2 - 4T + 2
}

// Smallest d >= 1 with d^n >= bound.
mpz_class ceil_nth_root(const mpz_class& bound, int n) {
  if (bound <= 1) return 1;
  mpz_class r;
  mpz_root(r.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_class rn;
  mpz_pow_ui(rn.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(n));
  if (rn < bound) ++r;
  return r;
}

mpz_class pow_ll(long long base, int e) {
  mpz_class r;
  mpz_class b(static_cast<long>(base));
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

std::vector<TPEntry> q_candidates(Catalog& catalog, const Scenario& s,
                                  const EnumLimits& limits) {
  if (s.dim < 1 || s.curve_degree < 1) {
    throw std::invalid_argument("q_candidates: dimension and degree must be >= 1");
  }
  if (!s.polarization.is_principal()) {
    throw std::invalid_argument(
        "q_candidates: the Q_C model is defined for principal polarizations only");
  }
  auto all = enumerate_tp(catalog, s.dim, s.curve_degree, limits);
  if (!s.simple) return all;
  // Simple abelian variety: Q_C is a pure power R^(n/m) of one irreducible
  // R whose degree m divides n.
  std::erase_if(all, [&](const TPEntry& e) {
    if (e.factors.size() != 1) return true;
    int m = e.factors.front().poly.degree();
    return s.dim % m != 0 ||
           e.factors.front().multiplicity != s.dim / m;
  });
  return all;
}

ClassificationOutcome classify(const Scenario& s, const TPEntry& q) {
  const int n = s.dim;
  const long long d = s.curve_degree;
  if (q.degree != n || q.trace_value != static_cast<long>(d)) {
    throw contract_error("classify: candidate degree/trace does not match the scenario");
  }

  ClassificationOutcome out;

  // (a) Unit norm: the pulled-back polarization is principal, so the curve
  // is smooth, X is its Jacobian and C is canonically embedded.  For
  // d = n+1 and d = n+2 the candidate itself is the real-multiplication
  // polynomial.
  if (q.norm_value == 1) {
    out.tag = OutcomeTag::SmoothJacobianCanonical;
    out.reason = "Prop 6.4";
    if (d == n + 1) {
      out.rm_polynomial = q.poly;
      out.reason = "Prop 6.7";
    } else if (d == n + 2) {
      out.rm_polynomial = q.poly;
      out.reason = "Prop 6.8 (i)";
    }
    return out;
  }

  // (b) d = n+1, (T-1)^(n-1)(T-2): excluded.
  if (d == static_cast<long long>(n) + 1 &&
      q.poly == ones_times(n - 1, MonicIntPoly::linear(2))) {
    out.tag = OutcomeTag::Excluded;
    out.reason = "Prop 6.7";
    return out;
  }

  // (c) d = n+2, n > 2; these rules need char(k) != 2, 3.
  if (d == static_cast<long long>(n) + 2 && n > 2) {
    bool char_ok = s.char_excluded.contains(2) && s.char_excluded.contains(3);
    const MonicIntPoly two_sq = ones_times(n - 2, MonicIntPoly::linear(2).pow(2));
    const MonicIntPoly three = ones_times(n - 1, MonicIntPoly::linear(3));
    const MonicIntPoly quad = ones_times(n - 2, quad_4_2());
    bool in_table = q.poly == two_sq || q.poly == three || q.poly == quad;
    if (in_table && !char_ok) {
      // The rules below assume char(k) != 2, 3; without that assertion the
      // candidate stays unclassified.
      out.tag = OutcomeTag::Unclassified;
      out.reason = "Prop 6.8 (not applied: char(k) != 2,3 not asserted)";
      return out;
    }
    if (q.poly == two_sq) {
      out.tag = OutcomeTag::Excluded;
      out.reason = "Prop 6.8";
      return out;
    }
    if (q.poly == three) {
      out.tag = OutcomeTag::BiellipticQuotient;
      out.reason = "Prop 6.8 (ii)";
      return out;
    }
    if (q.poly == quad) {
      out.tag = OutcomeTag::IsogenyDegree2;
      out.alt_tag = OutcomeTag::PrymBielliptic;
      out.rm_polynomial = q.poly;
      out.alt_rm_polynomial = MonicIntPoly::variable() * q.poly;
      out.reason = "Prop 6.8 (iii)/(iv)";
      return out;
    }
  }

  // (d) No rule applies.
  out.tag = OutcomeTag::Unclassified;
  out.reason = "";
  if (s.simple && d * 10000 <= 17719 * static_cast<long long>(n) &&
      q.norm_value != 1) {
    out.contradiction = true;
    out.reason = "Thm 6.6";
  }
  return out;
}

FeasibilityReport feasibility_report(Catalog& catalog, const Scenario& s,
                                     const EnumLimits& limits) {
  FeasibilityReport report{s, {}, {}, {}, true};
  const auto& type = s.polarization;

  mpz_class md = min_degree(s.dim, type);
  report.bounds.push_back({"min_degree", "Prop 4.1", md,
                           mpz_class(static_cast<long>(s.curve_degree)) >= md,
                           "requires C irreducible and generating"});

  bool separable = type.degree() == 1;
  if (!separable) {
    // The type is separable exactly when its degree is prime to char(k);
    // the caller asserts that through the excluded-characteristic set.
    mpz_class deg = type.degree();
    separable = true;
    for (long p = 2; mpz_class(p) * p <= deg && separable; ++p) {
      if (deg % p == 0) {
        if (!s.char_excluded.contains(p)) separable = false;
        while (deg % p == 0) deg /= p;
      }
    }
    if (separable && deg > 1) {
      separable = deg.fits_slong_p() && s.char_excluded.contains(deg.get_si());
    }
  }
  mpz_class modulus = generic_divisibility(s.dim, type, separable);
  report.bounds.push_back({"generic_divisibility", "(3.5)", modulus,
                           mpz_class(static_cast<long>(s.curve_degree)) % modulus == 0,
                           separable
                               ? "holds on a generic (X, lambda); separable type"
                               : "holds on a generic (X, lambda); separability not asserted"});

  if (!type.is_principal()) {
    report.notes.push_back(
        "the Q_C candidate model applies to principal polarizations only; "
        "no candidates computed for this type");
    return report;
  }

  auto candidates = q_candidates(catalog, s, limits);
  report.candidates.reserve(candidates.size());
  for (auto& cand : candidates) {
    ClassificationOutcome outcome = classify(s, cand);
    if (outcome.contradiction) report.consistent = false;
    report.candidates.emplace_back(std::move(cand), std::move(outcome));
  }
  return report;
}

mpz_class min_degree(int n, const PolarizationType& type) {
  if (n < 1) throw std::invalid_argument("min_degree: dimension must be >= 1");
  return ceil_nth_root(pow_ll(n, n) * type.degree(), n);
}

mpz_class min_degree_subcurve(int m, const PolarizationType& type) {
  if (m < 1 || m > type.dimension()) {
    throw std::invalid_argument("min_degree_subcurve: m must lie in 1..dim");
  }
  mpz_class partial = 1;
  for (int i = 0; i < m; ++i) partial *= static_cast<long>(type.delta(i));
  return ceil_nth_root(pow_ll(m, m) * partial, m);
}

mpz_class torsion_min_degree(int n, long long m) {
  if (n < 1 || m < 1) {
    throw std::invalid_argument("torsion_min_degree: n and m must be >= 1");
  }
  mpz_class bound = pow_ll(n, n);
  mpz_class mm(static_cast<long>(m));
  mpz_class mpow;
  mpz_pow_ui(mpow.get_mpz_t(), mm.get_mpz_t(), static_cast<unsigned long>(n - 1));
  return ceil_nth_root(bound * mpow, n);
}

mpz_class generic_divisibility(int n, const PolarizationType& type,
                               bool separable) {
  if (n < 1) throw std::invalid_argument("generic_divisibility: dimension must be >= 1");
  if (!separable) return n;
  return mpz_class(n) * static_cast<long>(type.deltas().back());
}

std::vector<long long> simple_degree_spectrum(int n, SpectrumCutoff cutoff,
                                              long long ratio_num,
                                              long long ratio_den) {
  if (n < 1) throw std::invalid_argument("simple_degree_spectrum: n must be >= 1");
  std::vector<long long> degrees;
  for (long long m = 1; m <= n; ++m) {
    if (n % m != 0) continue;
    long long d = 2 * static_cast<long long>(n) - m;
    bool admissible = cutoff == SpectrumCutoff::ConjectureStrict
                          ? d < 2 * static_cast<long long>(n)
                          : d * ratio_den <= ratio_num * n;
    if (admissible) degrees.push_back(d);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace curvedeg
