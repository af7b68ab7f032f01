#pragma once

// Independent test oracles.  Nothing here shares search or pruning logic
// with the library implementation; that is the point.

#include <utility>
#include <vector>

#include "curvedeg/poly.hpp"

namespace curvedeg::testing {

// Full-box enumeration of the (degree, trace) cell: scans every coefficient
// vector with |e_j| <= C(m,j) t^j (e_j the elementary symmetric values,
// e_1 = t fixed) and filters by is_totally_positive.  Three one-line
// necessary conditions for positive real roots serve as loop guards:
//   e_j >= 1           (elementary symmetric values of positive reals),
//   2 e_2 <= t^2       (p_2 = sum of squared roots is nonnegative),
//   k e_k <= t e_(k-1) (every k-subset product appears k times in e_1 e_(k-1)).
// Unlike the production search there are no Maclaurin, Newton or power-sum
// windows and no DFS; survivors are decided one by one.
std::vector<MonicIntPoly> naive_tp_enumerate(long long m, long long t);

// Intersection numbers on E x Y by literal truncated-ring expansion: classes
// are elements of Z[A,B]/(A^2, B^n); a full product is evaluated through
// A B^(n-1) = (n-1)! * degY and every other top monomial = 0.
// Returns (x1 A + y1 B)^n / n!.
mpz_class top_intersection_oracle(int n, const mpz_class& deg_y,
                                  const mpz_class& x, const mpz_class& y);
// Returns (x1 A + y1 B)^(n-1)/(n-1)! . (x2 A + y2 B).
mpz_class mixed_intersection_oracle(int n, const mpz_class& deg_y,
                                    const mpz_class& x1, const mpz_class& y1,
                                    const mpz_class& x2, const mpz_class& y2);

// True iff p is irreducible over Z, certified by irreducibility modulo some
// prime (tried over the first few dozen primes).  Returns false when no
// modular certificate is found, so a `true` answer is a proof and a `false`
// answer is only "unknown"; callers combine it with other evidence.
bool irreducible_mod_p_certificate(const MonicIntPoly& p);

// Isolating intervals of width < eps for every real root of the squarefree
// polynomial p inside (lo, hi), by plain bisection on count_real_roots.
std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(
    const MonicIntPoly& p, const mpq_class& lo, const mpq_class& hi,
    const mpq_class& eps);

}  // namespace curvedeg::testing
