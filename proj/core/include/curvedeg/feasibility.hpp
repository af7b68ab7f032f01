#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curvedeg/enumerate.hpp"
#include "curvedeg/poly.hpp"

namespace curvedeg {

// Polarization type (delta_1 | ... | delta_n): a divisibility chain of
// positive integers whose product is the degree of the polarization.
class PolarizationType {
 public:
  // Throws std::invalid_argument when the chain is empty, has a
  // non-positive entry, or breaks divisibility.
  explicit PolarizationType(std::vector<long long> deltas);

  static PolarizationType principal(int n);

  const std::vector<long long>& deltas() const { return deltas_; }
  int dimension() const { return static_cast<int>(deltas_.size()); }
  mpz_class degree() const;
  bool is_principal() const;
  long long delta(int i) const { return deltas_[static_cast<size_t>(i)]; }

 private:
  std::vector<long long> deltas_;
};

struct Scenario {
  int dim = 1;                       // n
  long long curve_degree = 1;        // d = C . lambda
  bool simple = false;
  std::set<long long> char_excluded; // primes asserted != char(k)
  PolarizationType polarization = PolarizationType::principal(1);
};

enum class OutcomeTag {
  SmoothJacobianCanonical,
  JacobianWithRM,
  Excluded,
  BiellipticQuotient,
  IsogenyDegree2,
  PrymBielliptic,
  Unclassified,
};

std::string_view to_string(OutcomeTag tag);

struct ClassificationOutcome {
  OutcomeTag tag = OutcomeTag::Unclassified;
  // Set when the rule table yields a genuine disjunction of two geometric
  // realizations; the pair is reported, never resolved arbitrarily.
  std::optional<OutcomeTag> alt_tag;
  std::optional<MonicIntPoly> rm_polynomial;
  std::optional<MonicIntPoly> alt_rm_polynomial;
  std::string reason;  // citation label
  // Set when a simple scenario below the Smyth threshold produced a
  // candidate with norm != 1, which the threshold theorem forbids.
  bool contradiction = false;
};

struct BoundCheck {
  std::string name;
  std::string citation;
  mpz_class value;
  bool satisfied = false;
  std::string note;
};

struct FeasibilityReport {
  Scenario scenario;
  std::vector<std::pair<TPEntry, ClassificationOutcome>> candidates;
  std::vector<BoundCheck> bounds;
  std::vector<std::string> notes;
  bool consistent = true;
};

// All admissible Q_C candidates for the scenario: totally positive, degree
// n, trace d; restricted to pure powers of one irreducible when the
// scenario is simple.  Requires a principal polarization.
std::vector<TPEntry> q_candidates(Catalog& catalog, const Scenario& s,
                                  const EnumLimits& limits = {});

// Rule table for one candidate.  The candidate must belong to
// q_candidates(s) (degree and trace are checked).
ClassificationOutcome classify(const Scenario& s, const TPEntry& q);

FeasibilityReport feasibility_report(Catalog& catalog, const Scenario& s,
                                     const EnumLimits& limits = {});

// Smallest d with d^n >= n^n * deg(type).
mpz_class min_degree(int n, const PolarizationType& type);

// Smallest d with d^m >= m^m * delta_1...delta_m (separability assumed by
// the caller).  Throws when m is outside 1..dimension.
mpz_class min_degree_subcurve(int m, const PolarizationType& type);

// Smallest d with d^n >= n^n * m^(n-1), for a curve invariant under a
// translation of order m.
mpz_class torsion_min_degree(int n, long long m);

// Degree modulus on a generic polarized abelian variety: n * delta_n when
// the type is asserted separable, plain n otherwise.
mpz_class generic_divisibility(int n, const PolarizationType& type,
                               bool separable = true);

enum class SpectrumCutoff {
  SmythRatio,        // d * den <= num * n
  ConjectureStrict,  // d < 2n
};

// Admissible degrees { 2n - m : m | n } of a curve on a simple ppav under
// the active cutoff, ascending.
std::vector<long long> simple_degree_spectrum(
    int n, SpectrumCutoff cutoff = SpectrumCutoff::ConjectureStrict,
    long long ratio_num = 17719, long long ratio_den = 10000);

}  // namespace curvedeg
