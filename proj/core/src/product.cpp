#include "curvedeg/product.hpp"

#include <stdexcept>

#include "curvedeg/errors.hpp"

namespace curvedeg {

namespace {

void validate(const ProductContext& ctx) {
  if (ctx.n < 2) throw std::invalid_argument("product class: total dimension must be >= 2");
  if (ctx.deg_y < 1) throw std::invalid_argument("product class: deg(lambda_Y) must be >= 1");
}

mpz_class pow_z(const mpz_class& b, long long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

mpz_class factorial(long long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace

mpz_class top_intersection(const ProductClass& c) {
  validate(c.context);
  // Binomial expansion of (xA + yB)^n kills every term but n x y^(n-1) A B^(n-1).
  return c.x * pow_z(c.y, c.context.n - 1) * c.context.deg_y;
}

mpz_class top_intersection_raw(const ProductClass& c) {
  return top_intersection(c) * factorial(c.context.n);
}

mpz_class mixed_intersection(const ProductClass& c1, const ProductClass& c2) {
  validate(c1.context);
  if (!(c1.context == c2.context)) {
    throw contract_error("mixed_intersection: classes live on different products");
  }
  const int n = c1.context.n;
  mpz_class first = c2.x * pow_z(c1.y, n - 1);
  mpz_class second = mpz_class(n - 1) * c1.x * pow_z(c1.y, n - 2) * c2.y;
  return (first + second) * c1.context.deg_y;
}

mpz_class quotient_curve_degree(long long n, long long r, long long s) {
  if (n < 2) throw std::invalid_argument("quotient_curve_degree: dimension must be >= 2");
  if (r < 1 || s < 1) throw std::invalid_argument("quotient_curve_degree: r and s must be >= 1");
  if (s % r != 1 % r) {
    throw std::invalid_argument(
        "quotient_curve_degree: the construction needs s congruent to 1 mod r");
  }
  ProductContext ctx{static_cast<int>(n), mpz_class(static_cast<long>(r))};
  ProductClass pulled_theta{mpz_class(static_cast<long>(r)), 1, ctx};      // f* theta_C
  ProductClass pulled_q_theta{mpz_class(static_cast<long>(r)) * static_cast<long>(s), 1, ctx};  // f* q* theta
  mpz_class total = mixed_intersection(pulled_theta, pulled_q_theta);
  mpz_class deg_f = mpz_class(static_cast<long>(r)) * static_cast<long>(r);
  mpz_class q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), total.get_mpz_t(), deg_f.get_mpz_t());
  if (rem != 0) {
    throw inconsistency_error(
        "quotient_curve_degree: intersection number is not divisible by deg(f) = r^2");
  }
  return q;
}

}  // namespace curvedeg
