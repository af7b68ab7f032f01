// Exact construction of the 4cos^2 family polynomials.
//
// Everything rests on the Laurent identity z^j + z^(-j) = V_j(z + 1/z) with
// V_0 = 2, V_1 = x, V_(j+1) = x V_j - V_(j-1).  Summing z-powers of the
// relevant cyclotomic quotient and substituting x = T - 2 (which maps
// 2 cos a to 4 cos^2(a/2)) produces G_M with integer arithmetic only.

#include "curvedeg/families.hpp"

#include <stdexcept>

#include "curvedeg/errors.hpp"
#include "curvedeg/poly_text.hpp"

namespace curvedeg {

namespace {

// V_0..V_k as integer polynomials in x.
std::vector<IntPoly> chebyshev_like(long long k) {
  std::vector<IntPoly> v;
  v.reserve(static_cast<size_t>(k) + 1);
  v.push_back(IntPoly::constant(2));
  if (k >= 1) v.push_back(IntPoly({mpz_class(0), mpz_class(1)}));
  const IntPoly x({mpz_class(0), mpz_class(1)});
  for (long long j = 2; j <= k; ++j) {
    v.push_back(x * v[static_cast<size_t>(j - 1)] - v[static_cast<size_t>(j - 2)]);
  }
  return v;
}

// p(T - 2), exact.
IntPoly shift_by_minus_two(const IntPoly& p) {
  const IntPoly t_minus_2({mpz_class(-2), mpz_class(1)});
  IntPoly acc;
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * t_minus_2 + IntPoly::constant(p.coeff(i));
  }
  return acc;
}

bool is_prime(long long m) {
  if (m < 2) return false;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p == 0) return false;
  }
  return true;
}

}  // namespace

MonicIntPoly half_trace_poly(long long M) {
  if (M < 3 || M % 2 == 0) {
    throw std::invalid_argument("half_trace_poly: M must be odd and >= 3");
  }
  long long h = (M - 1) / 2;
  auto v = chebyshev_like(h);
  // z^(-h) (1 + z + ... + z^(M-1)) = 1 + sum_{j=1..h} (z^j + z^(-j))
  IntPoly w = IntPoly::constant(1);
  for (long long j = 1; j <= h; ++j) w = w + v[static_cast<size_t>(j)];
  return *MonicIntPoly::from_int_poly(w);
}

MonicIntPoly g_poly(long long M) {
  if (M < 3) throw std::invalid_argument("g_poly: M must be >= 3");
  if (M % 2 == 1) {
    // Roots 4 cos^2(k pi / M) = 2 + 2 cos(2 k pi / M), k = 1..(M-1)/2, which
    // are exactly the roots of W_M shifted by 2.
    return *MonicIntPoly::from_int_poly(
        shift_by_minus_two(half_trace_poly(M).as_int_poly()));
  }
  // Even M: k = M/2 contributes the root 0; the remaining roots are
  // 2 + 2 cos(2 k pi / M) for k = 1..M/2-1, i.e. the x-images of the M-th
  // roots of unity other than +-1:
  //   sum_{i=0..M/2-1} z^(2i) = z^(M/2-1) * W~(z + 1/z).
  long long half = M / 2;
  long long top = half - 1;  // degree of W~
  auto v = chebyshev_like(top);
  IntPoly w;
  if (top % 2 == 0) {
    w = IntPoly::constant(1);
    for (long long j = 2; j <= top; j += 2) w = w + v[static_cast<size_t>(j)];
  } else {
    w = IntPoly();
    for (long long j = 1; j <= top; j += 2) w = w + v[static_cast<size_t>(j)];
  }
  IntPoly shifted = shift_by_minus_two(w);
  IntPoly with_zero_root = shifted * IntPoly({mpz_class(0), mpz_class(1)});
  return *MonicIntPoly::from_int_poly(with_zero_root);
}

FamilyReport mestre_check(Catalog& catalog, long long M,
                          const EnumLimits& limits) {
  if (M < 5 || M % 2 == 0 || !is_prime(M)) {
    throw std::invalid_argument(
        "mestre_check: M must be an odd prime >= 5 (for composite M the minimal "
        "polynomial differs from G_M)");
  }
  MonicIntPoly g = g_poly(M);
  TPEntry entry = factor_tp(catalog, g, limits);

  FamilyReport report{M,
                      g,
                      g,
                      (M - 1) / 2,
                      entry.trace_value,
                      entry.norm_value,
                      M - 2,
                      entry.irreducible,
                      is_totally_positive(g)};

  auto fail = [&](const std::string& what) {
    throw inconsistency_error("mestre_check: G_" + std::to_string(M) + " = " +
                              render_poly(g) + " " + what);
  };
  if (!report.totally_positive) fail("is not totally positive");
  if (!report.irreducible) fail("is not irreducible");
  if (g.degree() != report.n) fail("does not have degree (M-1)/2");
  if (report.trace_value != static_cast<long>(M - 2)) fail("does not have trace M-2");
  if (report.norm_value != 1) fail("does not have norm 1");
  if (report.trace_value != static_cast<long>(report.implied_curve_degree)) {
    fail("trace does not equal the implied curve degree 2n-1");
  }
  return report;
}

}  // namespace curvedeg
