#include <doctest.h>

#include <cmath>

#include "curvedeg/families.hpp"
#include "curvedeg/errors.hpp"
#include "curvedeg/poly_text.hpp"
#include "oracles.hpp"

using namespace curvedeg;

namespace {

MonicIntPoly P(const std::string& text) { return parse_poly(text); }

bool is_prime_ll(long long m) {
  if (m < 2) return false;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("half-trace polynomials") {
  CHECK(half_trace_poly(3) == P("T + 1"));
  CHECK(half_trace_poly(5) == P("T^2 + T - 1"));
  CHECK(half_trace_poly(7) == P("T^3 + T^2 - 2*T - 1"));
  CHECK_THROWS_AS(half_trace_poly(4), std::invalid_argument);
  CHECK_THROWS_AS(half_trace_poly(1), std::invalid_argument);
}

TEST_CASE("G_M for small M") {
  CHECK(g_poly(5) == P("T^2 - 3*T + 1"));
  CHECK(g_poly(7) == P("T^3 - 5*T^2 + 6*T - 1"));
  CHECK(g_poly(3) == P("T - 1"));
  CHECK(g_poly(4) == P("T^2 - 2*T"));
  CHECK(g_poly(6) == P("T*(T-1)*(T-3)"));
  CHECK(g_poly(8) == P("T*(T-2)*(T^2-4*T+2)"));
  CHECK(g_poly(12) == P("T*(T-1)*(T-2)*(T-3)*(T^2-4*T+1)"));
  CHECK_THROWS_AS(g_poly(2), std::invalid_argument);
}

TEST_CASE("mestre_check verifies the family claims") {
  Catalog cat;
  auto r5 = mestre_check(cat, 5);
  CHECK(r5.n == 2);
  CHECK(r5.trace_value == 3);
  CHECK(r5.norm_value == 1);
  CHECK(r5.implied_curve_degree == 3);
  CHECK(*r5.minimal_poly == P("T^2 - 3*T + 1"));

  auto r7 = mestre_check(cat, 7);
  CHECK(r7.n == 3);
  CHECK(r7.trace_value == 5);
  CHECK(r7.implied_curve_degree == 5);

  auto r11 = mestre_check(cat, 11);
  CHECK(r11.n == 5);
  CHECK(r11.trace_value == 9);
  CHECK(r11.norm_value == 1);

  CHECK_THROWS_AS(mestre_check(cat, 9), std::invalid_argument);   // composite
  CHECK_THROWS_AS(mestre_check(cat, 4), std::invalid_argument);   // even
  CHECK_THROWS_AS(mestre_check(cat, 3), std::invalid_argument);   // too small
}

TEST_CASE("family invariants for odd prime M <= 31") {
  Catalog cat;
  for (long long M = 5; M <= 31; M += 2) {
    if (!is_prime_ll(M)) continue;
    CAPTURE(M);
    MonicIntPoly g = g_poly(M);
    CHECK(is_totally_positive(g));
    CHECK(g.degree() == (M - 1) / 2);
    CHECK(trace(g) == static_cast<long>(M - 2));
    CHECK(norm(g) == 1);
    // excess identity: these witnesses populate every excess class
    CHECK(trace(g) - g.degree() == static_cast<long>((M - 3) / 2));
    // irreducibility: catalog trial division where the cells stay small,
    // a modular certificate (independent oracle) everywhere
    CHECK(curvedeg::testing::irreducible_mod_p_certificate(g));
    if (M <= 13) {
      CHECK(mestre_check(cat, M).irreducible);
    }
  }
}

TEST_CASE("family witnesses reach the minimum trace for M = 5, 7") {
  Catalog cat;
  for (long long M : {5, 7}) {
    long long m = (M - 1) / 2;
    auto result = min_trace_irreducible(cat, m);
    CHECK(result.min_trace == M - 2);
    bool found = false;
    for (const auto& w : result.witnesses) {
      if (w.poly == g_poly(M)) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("roots of G_M match 4cos^2(k pi / M) to 1e-6") {
  for (long long M : {5, 7, 9, 12, 15}) {
    CAPTURE(M);
    MonicIntPoly g = squarefree_part(g_poly(M));
    mpq_class eps(1, 2000000);  // isolate to width < 1e-6
    auto boxes = curvedeg::testing::isolate_real_roots(
        g, mpq_class(-1), mpq_class(5), eps);
    REQUIRE(static_cast<int>(boxes.size()) == g.degree());
    for (const auto& [lo, hi] : boxes) {
      double approx = (lo.get_d() + hi.get_d()) / 2;
      bool matched = false;
      for (long long k = 1; k <= M / 2; ++k) {
        double c = std::cos(static_cast<double>(k) * M_PI / static_cast<double>(M));
        if (std::abs(4 * c * c - approx) < 1e-6) matched = true;
      }
      CHECK(matched);
    }
  }
}

// The claims hold for the roots of G_M, not for the conjugates of
// 4cos^2(pi/2M): that algebraic integer has trace M and norm M.  Pinning
// both computations down documents which reading the library implements.
TEST_CASE("conjugates of 4cos^2(pi/2M) have trace M and norm M") {
  Catalog cat;
  for (long long M : {5, 7}) {
    CAPTURE(M);
    // 4cos^2(pi/2M) is the largest root of G_(2M) / T.
    MonicIntPoly g2m = g_poly(2 * M);
    auto without_zero = divide_exact(g2m, MonicIntPoly::variable());
    REQUIRE(without_zero.has_value());
    auto entry = factor_tp(cat, *without_zero);
    // the factor of degree (M-1)/2 containing the largest root
    const MonicIntPoly* minimal = nullptr;
    for (const auto& f : entry.factors) {
      if (f.poly.degree() == (M - 1) / 2 && norm(f.poly) == static_cast<long>(M)) {
        minimal = &f.poly;
      }
    }
    REQUIRE(minimal != nullptr);
    CHECK(trace(*minimal) == static_cast<long>(M));
    CHECK(norm(*minimal) == static_cast<long>(M));
    // and it really owns the largest root 4cos^2(pi/2M)
    double top = 4 * std::pow(std::cos(M_PI / (2.0 * static_cast<double>(M))), 2);
    mpq_class just_below(static_cast<long>(std::floor(top * 128)), 128);
    just_below.canonicalize();
    CHECK(count_real_roots(*minimal,
                           Interval::greater_than(just_below)) == 1);
  }
}
