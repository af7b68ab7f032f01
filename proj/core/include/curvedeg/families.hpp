#pragma once

#include <optional>

#include "curvedeg/enumerate.hpp"
#include "curvedeg/poly.hpp"

namespace curvedeg {

// The monic integer polynomial W_M of degree (M-1)/2 with
//   (z^M - 1)/(z - 1) = z^((M-1)/2) * W_M(z + 1/z);
// its roots are 2 cos(2 k pi / M).  Requires odd M >= 3.
MonicIntPoly half_trace_poly(long long M);

// G_M(T) = prod_{0 < k <= floor(M/2)} (T - 4 cos^2(k pi / M)), exactly.
// Requires M >= 3.
MonicIntPoly g_poly(long long M);

struct FamilyReport {
  long long M = 0;
  MonicIntPoly g;                          // G_M
  std::optional<MonicIntPoly> minimal_poly;  // = G_M when M is an odd prime
  long long n = 0;                         // (M-1)/2 for odd M
  mpz_class trace_value;
  mpz_class norm_value;
  long long implied_curve_degree = 0;      // 2n - 1
  bool irreducible = false;
  bool totally_positive = false;
};

// Verifies the family invariants for an odd prime M >= 5: G_M irreducible,
// totally positive, degree (M-1)/2, trace M-2, norm 1.  A failed check is an
// inconsistency_error, never a silently wrong report.
FamilyReport mestre_check(Catalog& catalog, long long M,
                          const EnumLimits& limits = {});

}  // namespace curvedeg
