#include "curvedeg/genus.hpp"

#include <sstream>
#include <stdexcept>

namespace curvedeg {

namespace {

mpz_class z(long long v) { return mpz_class(static_cast<long>(v)); }

}  // namespace

GenusBoundResult castelnuovo(long long d_prime, long long r) {
  if (r < 2) throw std::invalid_argument("castelnuovo: projective dimension r must be >= 2");
  if (d_prime < 1) throw std::invalid_argument("castelnuovo: degree must be >= 1");
  mpz_class m = z(d_prime - 1) / z(r - 1);
  mpz_class g = m * z(d_prime - 1) - m * (m + 1) * z(r - 1) / 2;
  return {g, "Castelnuovo", false, false, {}};
}

GenusBoundResult genus_upper_bound(long long n, long long d) {
  if (n < 2) throw std::invalid_argument("genus_upper_bound: requires dimension n > 1");
  if (d < 1) throw std::invalid_argument("genus_upper_bound: degree must be >= 1");
  // (2d-1)^2 is odd and 2(n-1) is even, so the strict bound is never
  // attained and the floor is the answer.
  mpz_class num = z(2 * d - 1) * z(2 * d - 1);
  mpz_class g = num / z(2 * (n - 1));
  return {g, "Thm 5.1", true, false, {"separable polarization", "C generates X"}};
}

GenusBoundResult genus_bound_refined(long long n, long long d) {
  if (n < 2) throw std::invalid_argument("genus_bound_refined: requires dimension n > 1");
  if (d < 1) throw std::invalid_argument("genus_bound_refined: degree must be >= 1");
  std::vector<GenusBoundResult> applicable;
  const std::vector<std::string> complex_note = {"k = C"};
  if (d < 2 * n) {
    applicable.push_back({z(d), "Prop 5.3 (i)", false, false, complex_note});
  }
  if (d == 2 * n) {
    applicable.push_back({z(3 * n - 1), "Prop 5.3 (ii)", true, false, complex_note});
  }
  if (d <= 3 * n) {
    applicable.push_back({z(4 * d), "Prop 5.3 (iii)", false, false, complex_note});
  }
  if (d <= 4 * n) {
    applicable.push_back({z(6 * d), "Prop 5.3 (iv)", false, false, complex_note});
  }
  applicable.push_back(genus_upper_bound(n, d));
  GenusBoundResult best = applicable.front();
  for (const auto& r : applicable) {
    if (r.max_genus < best.max_genus) best = r;
  }
  return best;
}

long long generic_min_class(long long n) {
  if (n < 1) throw std::invalid_argument("generic_min_class: n must be >= 1");
  long long c = 1;
  while ((4 * c + 1) * (4 * c + 1) <= 2 * n) ++c;
  return c;
}

GenusBoundResult conjectural_genus(long long n, long long c) {
  if (n < 2) throw std::invalid_argument("conjectural_genus: requires dimension n > 1");
  if (c < 1) throw std::invalid_argument("conjectural_genus: class multiple c must be >= 1");
  mpz_class g = z(c) * z(n) + z(c - 1) * z(c - 1);
  return {g, "Conj (Sec 5)", false, true,
          {"generic ppav", "C numerically equivalent to c * theta_min^(n-1)"}};
}

GenusBoundResult welters_info(long long n) {
  if (n < 2) throw std::invalid_argument("welters_info: requires dimension n > 1");
  return {z(2 * n + 1), "Welters [W]", false, false,
          {"char(k) = 0", "C irreducible of twice the minimal class (d = 2n)"}};
}

std::string genus_csv_header() {
  return "n,d,rule,max_genus,strict,conjectural,assumptions";
}

std::string genus_csv_row(long long n, long long d, const GenusBoundResult& r) {
  std::ostringstream out;
  out << n << "," << d << "," << r.rule << "," << r.max_genus.get_str() << ","
      << (r.strict ? "true" : "false") << ","
      << (r.conjectural ? "true" : "false") << ",\"";
  for (size_t i = 0; i < r.assumptions.size(); ++i) {
    if (i) out << "; ";
    out << r.assumptions[i];
  }
  out << "\"";
  return out.str();
}

}  // namespace curvedeg
