#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <utility>
#include <vector>

namespace curvedeg {

// Dense univariate polynomial over Z, coefficients in ascending order of
// power.  The zero polynomial is the empty vector; otherwise trailing zeros
// are stripped so the representation is canonical.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly constant(mpz_class c);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree, with deg 0 = -1 by the usual convention.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& leading() const { return coeffs_.back(); }
  mpz_class coeff(int i) const;

  mpq_class evaluate(const mpq_class& x) const;
  mpz_class evaluate(const mpz_class& x) const;
  int sign_at(const mpq_class& x) const;
  int sign_at_pos_infinity() const;
  int sign_at_neg_infinity() const;

  // gcd of all coefficients, non-negative; 0 for the zero polynomial.
  mpz_class content() const;
  IntPoly primitive_part() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const mpz_class& c, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  IntPoly pow(unsigned e) const;

 private:
  std::vector<mpz_class> coeffs_;
};

// Pseudo-remainder of a by b: the remainder of lc(b)^(deg a - deg b + 1) * a
// divided by b, computed entirely over Z.  Requires b != 0.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// Exact quotient a / b for b dividing a with unit leading coefficient.
IntPoly exact_divide_unit_lead(const IntPoly& a, const IntPoly& b);

// Primitive gcd over Z, normalized to positive leading coefficient.
IntPoly integer_poly_gcd(IntPoly a, IntPoly b);

// Monic polynomial with integer coefficients -- the carrier for every
// polynomial this project manipulates (Q_C candidates, minimal polynomials,
// the G_M family).  Invariants: leading coefficient exactly 1, degree >= 0.
class MonicIntPoly {
 public:
  // Throws std::invalid_argument unless coeffs is non-empty with last
  // element 1.
  explicit MonicIntPoly(std::vector<mpz_class> coeffs);

  static MonicIntPoly one();
  static MonicIntPoly variable();                      // T
  static MonicIntPoly linear(const mpz_class& root);   // T - root
  static MonicIntPoly from_roots(const std::vector<mpz_class>& roots);
  // nullopt when p is not monic of degree >= 0.
  static std::optional<MonicIntPoly> from_int_poly(const IntPoly& p);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }
  const IntPoly as_int_poly() const { return IntPoly(coeffs_); }

  MonicIntPoly operator*(const MonicIntPoly& rhs) const;
  MonicIntPoly pow(unsigned e) const;

  friend bool operator==(const MonicIntPoly& a, const MonicIntPoly& b) = default;
  // Canonical order: by degree, then coefficient-lexicographic from the
  // constant term up.  This is the order catalogs and reports use.
  friend std::strong_ordering operator<=>(const MonicIntPoly& a,
                                          const MonicIntPoly& b);

 private:
  std::vector<mpz_class> coeffs_;
};

// Interval of the real line with rational or infinite endpoints.  An absent
// endpoint means -inf / +inf and is always open.
struct Interval {
  std::optional<mpq_class> lower;  // nullopt = -inf
  std::optional<mpq_class> upper;  // nullopt = +inf
  bool lower_open = true;
  bool upper_open = true;

  Interval(std::optional<mpq_class> lo, std::optional<mpq_class> hi,
           bool lo_open, bool hi_open);

  static Interval all();                                   // (-inf, +inf)
  static Interval positive();                              // (0, +inf)
  static Interval open(const mpq_class& a, const mpq_class& b);
  static Interval closed(const mpq_class& a, const mpq_class& b);
  static Interval at_most(const mpq_class& b);             // (-inf, b]
  static Interval greater_than(const mpq_class& a);        // (a, +inf)
};

// Exact value of p at a rational point (Horner).
mpq_class evaluate(const MonicIntPoly& p, const mpq_class& x);

// Formal derivative.  Throws std::invalid_argument for degree 0.
IntPoly derivative(const MonicIntPoly& p);

// p / gcd(p, p'): same roots without multiplicity, monic.
MonicIntPoly squarefree_part(const MonicIntPoly& p);

// Number of distinct real roots of p in the interval, by a Sturm sequence
// with exact sign evaluation.  p must be squarefree; a repeated factor is a
// contract_error.
int count_real_roots(const MonicIntPoly& p, const Interval& interval);

// True iff every root of p (with multiplicity) is real and strictly
// positive.  Defined through the squarefree part, so repeated factors such
// as (T-1)^(n-1)(T-2) are handled.
bool is_totally_positive(const MonicIntPoly& p);

// Power sums p_1..p_k of the roots via Newton's identities.
std::vector<mpz_class> power_sums(const MonicIntPoly& p, int k_max);

// Sum of the roots = -(coefficient of T^(deg-1)); 0 for degree 0.
mpz_class trace(const MonicIntPoly& p);

// Product of the roots = (-1)^deg * constant term; 1 for degree 0.
mpz_class norm(const MonicIntPoly& p);

// Exact quotient p / d over Z, or nullopt when d does not divide p.
// Requires deg(d) <= deg(p).
std::optional<MonicIntPoly> divide_exact(const MonicIntPoly& p,
                                         const MonicIntPoly& d);

}  // namespace curvedeg
