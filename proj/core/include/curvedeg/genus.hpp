#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace curvedeg {

struct GenusBoundResult {
  mpz_class max_genus;
  std::string rule;     // which inequality produced the bound
  bool strict = false;  // true when the source inequality is strict
  bool conjectural = false;
  std::vector<std::string> assumptions;
};

// Castelnuovo bound for a degree-d' curve in P^r:
// m(d'-1) - m(m+1)(r-1)/2 with m = floor((d'-1)/(r-1)).  Requires r >= 2.
GenusBoundResult castelnuovo(long long d_prime, long long r);

// Largest g with 2(n-1) g < (2d-1)^2.  Requires n >= 2.
GenusBoundResult genus_upper_bound(long long n, long long d);

// Minimum over the small-degree refinements and the general bound, with the
// winning rule cited.
GenusBoundResult genus_bound_refined(long long n, long long d);

// Smallest positive c with (4c+1)^2 > 2n.
long long generic_min_class(long long n);

// Conjectural bound c*n + (c-1)^2 for curves of class c on a generic ppav.
GenusBoundResult conjectural_genus(long long n, long long c);

// The sharp bound 2n+1 for irreducible curves of twice the minimal class
// (degree 2n) in characteristic 0.
GenusBoundResult welters_info(long long n);

std::string genus_csv_header();
std::string genus_csv_row(long long n, long long d, const GenusBoundResult& r);

}  // namespace curvedeg
