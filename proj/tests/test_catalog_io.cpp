#include <doctest.h>

#include <sstream>

#include "curvedeg/enumerate.hpp"
#include "curvedeg/errors.hpp"
#include "curvedeg/poly_text.hpp"

using namespace curvedeg;

namespace {

Catalog sample_catalog() {
  Catalog cat;
  enumerate_tp(cat, 1, 1);
  enumerate_tp(cat, 2, 3);
  enumerate_tp(cat, 3, 5);
  return cat;
}

}  // namespace

TEST_CASE("save/load/save is byte-exact") {
  Catalog cat = sample_catalog();
  std::string first = catalog_to_string(cat);
  std::istringstream in(first);
  Catalog loaded = catalog_load(in);
  CHECK(catalog_to_string(loaded) == first);
  CHECK(loaded.cell_count() == cat.cell_count());
  CHECK(loaded.entry_count() == cat.entry_count());
}

TEST_CASE("the (2,3) cell round-trips with exactly two entries") {
  Catalog cat;
  enumerate_tp(cat, 2, 3);
  std::istringstream in(catalog_to_string(cat));
  Catalog loaded = catalog_load(in);
  const auto& cell = loaded.cell(CellKey{2, 3});
  REQUIRE(cell.size() == 2);
  CHECK(cell[0].poly == parse_poly("T^2-3*T+1"));
  CHECK(cell[1].poly == parse_poly("T^2-3*T+2"));
  CHECK(cell[0].irreducible);
  CHECK_FALSE(cell[1].irreducible);
}

TEST_CASE("empty catalog round-trips to empty") {
  Catalog cat;
  std::istringstream in(catalog_to_string(cat));
  Catalog loaded = catalog_load(in);
  CHECK(loaded.cell_count() == 0);
  CHECK(catalog_to_string(loaded) == catalog_to_string(cat));
}

TEST_CASE("a loaded catalog keeps working as a factorization cache") {
  Catalog cat = sample_catalog();
  std::istringstream in(catalog_to_string(cat));
  Catalog loaded = catalog_load(in);
  auto entry = factor_tp(loaded, parse_poly("(T-1)*(T^2-3*T+1)"));
  REQUIRE(entry.factors.size() == 2);
  CHECK(entry.factors[0].poly == parse_poly("T-1"));
  CHECK(entry.factors[1].poly == parse_poly("T^2-3*T+1"));
}

TEST_CASE("format errors carry the cell location") {
  SUBCASE("non-monic polynomial") {
    std::istringstream in(R"({
      "complete": [[1, 2]],
      "entries": [{"degree": 1, "trace": 2, "coeffs": [-2, 2],
                   "irreducible": true, "norm": 2, "factors": []}]
    })");
    CHECK_THROWS_WITH_AS(catalog_load(in),
                         doctest::Contains("non-monic"), format_error);
  }
  SUBCASE("entry in a cell that is not marked complete") {
    std::istringstream in(R"({
      "complete": [],
      "entries": [{"degree": 1, "trace": 2, "coeffs": [-2, 1],
                   "irreducible": true, "norm": 2,
                   "factors": [{"coeffs": [-2, 1], "mult": 1}]}]
    })");
    CHECK_THROWS_WITH_AS(catalog_load(in),
                         doctest::Contains("cell (1, 2)"), format_error);
  }
  SUBCASE("stored trace disagrees with the coefficients") {
    std::istringstream in(R"({
      "complete": [[1, 3]],
      "entries": [{"degree": 1, "trace": 3, "coeffs": [-2, 1],
                   "irreducible": true, "norm": 2,
                   "factors": [{"coeffs": [-2, 1], "mult": 1}]}]
    })");
    CHECK_THROWS_WITH_AS(catalog_load(in),
                         doctest::Contains("trace"), format_error);
  }
  SUBCASE("factors do not multiply back") {
    std::istringstream in(R"({
      "complete": [[2, 3]],
      "entries": [{"degree": 2, "trace": 3, "coeffs": [1, -3, 1],
                   "irreducible": false, "norm": 1,
                   "factors": [{"coeffs": [-1, 1], "mult": 2}]}]
    })");
    CHECK_THROWS_WITH_AS(catalog_load(in),
                         doctest::Contains("multiply back"), format_error);
  }
  SUBCASE("duplicate entries") {
    std::istringstream in(R"({
      "complete": [[1, 2]],
      "entries": [
        {"degree": 1, "trace": 2, "coeffs": [-2, 1], "irreducible": true,
         "norm": 2, "factors": [{"coeffs": [-2, 1], "mult": 1}]},
        {"degree": 1, "trace": 2, "coeffs": [-2, 1], "irreducible": true,
         "norm": 2, "factors": [{"coeffs": [-2, 1], "mult": 1}]}
      ]
    })");
    CHECK_THROWS_WITH_AS(catalog_load(in),
                         doctest::Contains("duplicate"), format_error);
  }
  SUBCASE("not JSON at all") {
    std::istringstream in("this is not json");
    CHECK_THROWS_AS(catalog_load(in), format_error);
  }
}
