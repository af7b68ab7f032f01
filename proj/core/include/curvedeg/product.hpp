#pragma once

#include <gmpxx.h>

namespace curvedeg {

// Numerical divisor classes x * pr1*(lambda_E) + y * pr2*(lambda_Y) on a
// product E x Y with dim E = 1, dim Y = n-1.  The complete evaluation
// semantics: A^2 = 0, B^n = 0, A B^(n-1) = (n-1)! * deg(lambda_Y).
struct ProductContext {
  int n = 2;             // total dimension, >= 2
  mpz_class deg_y = 1;   // degree of lambda_Y, >= 1
  friend bool operator==(const ProductContext&, const ProductContext&) = default;
};

struct ProductClass {
  mpz_class x;
  mpz_class y;
  ProductContext context;
};

// (xA + yB)^n / n! = x y^(n-1) deg(lambda_Y).
mpz_class top_intersection(const ProductClass& c);

// The same number before dividing by n!.
mpz_class top_intersection_raw(const ProductClass& c);

// (x1 A + y1 B)^(n-1)/(n-1)! . (x2 A + y2 B)
//   = (x2 y1^(n-1) + (n-1) x1 y1^(n-2) y2) * deg(lambda_Y).
// The two classes must share a context.
mpz_class mixed_intersection(const ProductClass& c1, const ProductClass& c2);

// Degree of the quotient curve q(C) with respect to the principal
// polarization theta: n + s - 1.  Requires s congruent to 1 mod r.
mpz_class quotient_curve_degree(long long n, long long r, long long s);

}  // namespace curvedeg
