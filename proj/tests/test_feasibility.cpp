#include <doctest.h>

#include "curvedeg/errors.hpp"
#include "curvedeg/feasibility.hpp"
#include "curvedeg/poly_text.hpp"

using namespace curvedeg;

namespace {

MonicIntPoly P(const std::string& text) { return parse_poly(text); }

MonicIntPoly ones(int k) { return MonicIntPoly::linear(1).pow(static_cast<unsigned>(k)); }

Scenario principal_scenario(int n, long long d, bool simple = false,
                            std::set<long long> char_not = {}) {
  return Scenario{n, d, simple, std::move(char_not), PolarizationType::principal(n)};
}

std::vector<MonicIntPoly> polys_of(const std::vector<TPEntry>& entries) {
  std::vector<MonicIntPoly> out;
  for (const auto& e : entries) out.push_back(e.poly);
  return out;
}

}  // namespace

TEST_CASE("polarization types validate the divisibility chain") {
  CHECK(PolarizationType({1, 2}).degree() == 2);
  CHECK(PolarizationType({1, 1, 2}).degree() == 2);
  CHECK(PolarizationType::principal(4).is_principal());
  CHECK(PolarizationType({2, 2}).degree() == 4);
  CHECK_THROWS_AS(PolarizationType({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(PolarizationType({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PolarizationType({}), std::invalid_argument);
}

TEST_CASE("q_candidates for the reference scenarios") {
  Catalog cat;
  auto c34 = q_candidates(cat, principal_scenario(3, 4));
  CHECK(polys_of(c34) == std::vector<MonicIntPoly>{
                             P("(T-1)^2*(T-2)"), P("(T-1)*(T^2-3*T+1)")});

  auto c22 = q_candidates(cat, principal_scenario(2, 2));
  CHECK(polys_of(c22) == std::vector<MonicIntPoly>{P("(T-1)^2")});

  auto c46s = q_candidates(cat, principal_scenario(4, 6, /*simple=*/true));
  CHECK(polys_of(c46s) == std::vector<MonicIntPoly>{P("(T^2-3*T+1)^2")});

  Scenario nonprincipal{2, 3, false, {}, PolarizationType({1, 2})};
  CHECK_THROWS_AS(q_candidates(cat, nonprincipal), std::invalid_argument);
}

TEST_CASE("simple-mode candidates are pure powers of one irreducible") {
  Catalog cat;
  for (int n : {2, 3, 4, 6}) {
    for (long long d = n; d < 2 * n; ++d) {
      auto cands = q_candidates(cat, principal_scenario(n, d, true));
      for (const auto& e : cands) {
        REQUIRE(e.factors.size() == 1);
        CHECK(n % e.factors[0].poly.degree() == 0);
        CHECK(e.factors[0].multiplicity == n / e.factors[0].poly.degree());
      }
    }
  }
}

TEST_CASE("classify: d = n+1 rule table") {
  Catalog cat;
  Scenario s = principal_scenario(3, 4);
  auto cands = q_candidates(cat, s);
  REQUIRE(cands.size() == 2);
  for (const auto& cand : cands) {
    auto outcome = classify(s, cand);
    if (cand.poly == P("(T-1)^2*(T-2)")) {
      CHECK(outcome.tag == OutcomeTag::Excluded);
      CHECK(outcome.reason == "Prop 6.7");
    } else {
      CHECK(cand.poly == P("(T-1)*(T^2-3*T+1)"));
      CHECK(outcome.tag == OutcomeTag::SmoothJacobianCanonical);
      REQUIRE(outcome.rm_polynomial.has_value());
      CHECK(*outcome.rm_polynomial == cand.poly);
    }
  }
}

TEST_CASE("classify: d = n+2 rule table with char(k) != 2,3") {
  Catalog cat;
  Scenario s = principal_scenario(4, 6, false, {2, 3});

  auto check_one = [&](const MonicIntPoly& poly, OutcomeTag want) {
    auto entry = factor_tp(cat, poly);
    auto outcome = classify(s, entry);
    CHECK(outcome.tag == want);
    return outcome;
  };

  check_one(P("(T-1)^2*(T-2)^2"), OutcomeTag::Excluded);
  check_one(P("(T-1)^3*(T-3)"), OutcomeTag::BiellipticQuotient);
  check_one(P("(T-1)*(T^3-5*T^2+6*T-1)"), OutcomeTag::SmoothJacobianCanonical);
  check_one(P("(T^2-3*T+1)^2"), OutcomeTag::SmoothJacobianCanonical);

  auto pair_outcome =
      check_one(P("(T-1)^2*(T^2-4*T+2)"), OutcomeTag::IsogenyDegree2);
  REQUIRE(pair_outcome.alt_tag.has_value());
  CHECK(*pair_outcome.alt_tag == OutcomeTag::PrymBielliptic);
  REQUIRE(pair_outcome.rm_polynomial.has_value());
  CHECK(*pair_outcome.rm_polynomial == P("(T-1)^2*(T^2-4*T+2)"));
  REQUIRE(pair_outcome.alt_rm_polynomial.has_value());
  CHECK(*pair_outcome.alt_rm_polynomial == P("T*(T-1)^2*(T^2-4*T+2)"));
}

TEST_CASE("classify: char rules are skipped without the assertion") {
  Catalog cat;
  Scenario s = principal_scenario(4, 6);  // no char-not
  auto entry = factor_tp(cat, P("(T-1)^3*(T-3)"));
  auto outcome = classify(s, entry);
  CHECK(outcome.tag == OutcomeTag::Unclassified);
  CHECK(outcome.reason.find("char") != std::string::npos);
}

TEST_CASE("classify: norm 1 if and only if SmoothJacobianCanonical") {
  Catalog cat;
  for (int n = 3; n <= 6; ++n) {
    for (long long d : {static_cast<long long>(n), static_cast<long long>(n) + 1,
                        static_cast<long long>(n) + 2}) {
      Scenario s = principal_scenario(n, d, false, {2, 3});
      for (const auto& cand : q_candidates(cat, s)) {
        auto outcome = classify(s, cand);
        CHECK((outcome.tag == OutcomeTag::SmoothJacobianCanonical) ==
              (cand.norm_value == 1));
      }
    }
  }
}

TEST_CASE("classify rejects a candidate/scenario mismatch") {
  Catalog cat;
  auto entry = factor_tp(cat, P("(T-1)^2"));
  CHECK_THROWS_AS(classify(principal_scenario(3, 4), entry), contract_error);
}

TEST_CASE("trace n+1 cells match the two-candidate list for n = 3..6") {
  Catalog cat;
  for (int n = 3; n <= 6; ++n) {
    Scenario s = principal_scenario(n, n + 1);
    auto report = feasibility_report(cat, s);
    REQUIRE(report.candidates.size() == 2);
    int excluded = 0, smooth = 0;
    for (const auto& [entry, outcome] : report.candidates) {
      if (outcome.tag == OutcomeTag::Excluded) {
        ++excluded;
        CHECK(entry.poly == ones(n - 1) * P("T-2"));
      }
      if (outcome.tag == OutcomeTag::SmoothJacobianCanonical) {
        ++smooth;
        CHECK(entry.poly == ones(n - 2) * P("T^2-3*T+1"));
      }
    }
    CHECK(excluded == 1);
    CHECK(smooth == 1);
    CHECK(report.consistent);
  }
}

// The trace-(n+2) cell contains seven polynomials, verified against the
// naive full-box oracle elsewhere: the five shapes the rule table names plus
// (T-1)^(n-2)(T^2-4T+1) (norm 1, hence case-(i) smooth) and the product
// (T-1)^(n-3)(T-2)(T^2-3T+1), which no rule covers.
TEST_CASE("trace n+2 cells: the rule-table five plus two more, n = 4..6") {
  Catalog cat;
  for (int n = 4; n <= 6; ++n) {
    Scenario s = principal_scenario(n, n + 2, false, {2, 3});
    auto report = feasibility_report(cat, s);
    CHECK(report.candidates.size() == 7);

    auto outcome_of = [&](const MonicIntPoly& poly) {
      for (const auto& [entry, outcome] : report.candidates) {
        if (entry.poly == poly) return outcome;
      }
      FAIL(("candidate not found: " + render_poly(poly)));
      return ClassificationOutcome{};
    };

    CHECK(outcome_of(ones(n - 2) * P("(T-2)^2")).tag == OutcomeTag::Excluded);
    CHECK(outcome_of(ones(n - 1) * P("T-3")).tag == OutcomeTag::BiellipticQuotient);
    CHECK(outcome_of(ones(n - 3) * P("T^3-5*T^2+6*T-1")).tag ==
          OutcomeTag::SmoothJacobianCanonical);
    CHECK(outcome_of(ones(n - 4) * P("(T^2-3*T+1)^2")).tag ==
          OutcomeTag::SmoothJacobianCanonical);
    auto pair = outcome_of(ones(n - 2) * P("T^2-4*T+2"));
    CHECK(pair.tag == OutcomeTag::IsogenyDegree2);
    CHECK(pair.alt_tag == OutcomeTag::PrymBielliptic);
    CHECK(outcome_of(ones(n - 2) * P("T^2-4*T+1")).tag ==
          OutcomeTag::SmoothJacobianCanonical);
    CHECK(outcome_of(ones(n - 3) * P("(T-2)*(T^2-3*T+1)")).tag ==
          OutcomeTag::Unclassified);
    CHECK(report.consistent);
  }
}

TEST_CASE("min_degree") {
  for (int n = 1; n <= 30; ++n) {
    CHECK(min_degree(n, PolarizationType::principal(n)) == n);
  }
  CHECK(min_degree(2, PolarizationType({1, 2})) == 3);
  CHECK(min_degree(3, PolarizationType({1, 1, 2})) == 4);
  // monotone in the polarization degree for fixed n
  for (int n = 2; n <= 6; ++n) {
    mpz_class prev = 0;
    for (long long delta = 1; delta <= 6; ++delta) {
      std::vector<long long> deltas(static_cast<size_t>(n), 1);
      deltas.back() = delta;
      mpz_class d = min_degree(n, PolarizationType(deltas));
      CHECK(d >= prev);
      prev = d;
    }
  }
}

TEST_CASE("min_degree_subcurve") {
  CHECK(min_degree_subcurve(1, PolarizationType({3, 6})) == 3);
  CHECK(min_degree_subcurve(2, PolarizationType({2, 2})) == 4);
  for (int m = 1; m <= 5; ++m) {
    CHECK(min_degree_subcurve(m, PolarizationType::principal(5)) == m);
  }
  CHECK_THROWS_AS(min_degree_subcurve(3, PolarizationType({1, 2})),
                  std::invalid_argument);
}

TEST_CASE("torsion_min_degree") {
  for (int n = 1; n <= 12; ++n) CHECK(torsion_min_degree(n, 1) == n);
  CHECK(torsion_min_degree(2, 2) == 3);
  CHECK(torsion_min_degree(3, 4) == 8);
}

TEST_CASE("generic_divisibility") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(generic_divisibility(n, PolarizationType::principal(n)) == n);
  }
  CHECK(generic_divisibility(4, PolarizationType({1, 1, 1, 3})) == 12);
  CHECK(generic_divisibility(1, PolarizationType({5})) == 5);
  CHECK(generic_divisibility(4, PolarizationType({1, 1, 1, 3}), false) == 4);
}

TEST_CASE("simple_degree_spectrum") {
  CHECK(simple_degree_spectrum(6) == std::vector<long long>{6, 9, 10, 11});
  for (int p : {2, 3, 5, 7, 11, 13}) {
    CHECK(simple_degree_spectrum(p) ==
          std::vector<long long>{p, 2 * static_cast<long long>(p) - 1});
  }
  CHECK(simple_degree_spectrum(1) == std::vector<long long>{1});
  CHECK(simple_degree_spectrum(6, SpectrumCutoff::SmythRatio) ==
        std::vector<long long>{6, 9, 10});
}

TEST_CASE("feasibility report for a non-principal type has bounds only") {
  Catalog cat;
  Scenario s{2, 4, false, {}, PolarizationType({1, 2})};
  auto report = feasibility_report(cat, s);
  CHECK(report.candidates.empty());
  REQUIRE(!report.notes.empty());
  CHECK(report.notes[0].find("principal") != std::string::npos);
  REQUIRE(report.bounds.size() >= 2);
  CHECK(report.bounds[0].name == "min_degree");
  CHECK(report.bounds[0].value == 3);
  CHECK(report.bounds[0].satisfied);
}

TEST_CASE("candidate traces and degrees always match the scenario") {
  Catalog cat;
  for (int n = 2; n <= 5; ++n) {
    for (long long d = n; d <= n + 2; ++d) {
      for (const auto& e : q_candidates(cat, principal_scenario(n, d))) {
        CHECK(e.degree == n);
        CHECK(e.trace_value == static_cast<long>(d));
      }
    }
  }
}
