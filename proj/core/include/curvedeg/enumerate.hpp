#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "curvedeg/poly.hpp"

namespace curvedeg {

// A certified totally positive polynomial together with the derived data
// catalogs and reports carry around.
struct TPEntry {
  struct Factor {
    MonicIntPoly poly;
    int multiplicity = 1;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  MonicIntPoly poly;
  int degree = 0;
  mpz_class trace_value;
  mpz_class norm_value;
  bool irreducible = false;
  // Irreducible totally positive factors in canonical order; their product
  // (with multiplicities) is poly.
  std::vector<Factor> factors;

  friend bool operator==(const TPEntry&, const TPEntry&) = default;
};

struct CellKey {
  long long degree = 0;
  long long trace = 0;
  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

// Complete (degree, trace) cells of totally positive polynomials.  A cell is
// stored only once fully enumerated, so readers never observe partial data.
class Catalog {
 public:
  bool is_complete(CellKey key) const { return cells_.contains(key); }
  // Throws std::out_of_range when the cell is absent.
  const std::vector<TPEntry>& cell(CellKey key) const { return cells_.at(key); }
  const std::vector<TPEntry>* find(CellKey key) const;
  void insert_complete(CellKey key, std::vector<TPEntry> entries);
  std::vector<CellKey> complete_cells() const;
  size_t cell_count() const { return cells_.size(); }
  size_t entry_count() const;

 private:
  std::map<CellKey, std::vector<TPEntry>> cells_;
};

struct EnumLimits {
  std::uint64_t node_budget = 1'000'000'000;
  // 0 = pick automatically; 1 = sequential.
  unsigned max_threads = 0;
};

// Every totally positive monic integer polynomial of degree m and trace t,
// in canonical order.  Results are cached in the catalog.  Empty when t < m.
std::vector<TPEntry> enumerate_tp(Catalog& catalog, long long m, long long t,
                                  const EnumLimits& limits = {});

std::vector<TPEntry> enumerate_tp_irreducible(Catalog& catalog, long long m,
                                              long long t,
                                              const EnumLimits& limits = {});

// Full factorization into irreducible totally positive factors, by trial
// division against catalog cells of smaller degree and trace.  The input
// must be totally positive.
TPEntry factor_tp(Catalog& catalog, const MonicIntPoly& p,
                  const EnumLimits& limits = {});

struct MinTraceResult {
  long long degree = 0;
  long long min_trace = 0;
  std::vector<TPEntry> witnesses;
};

// Smallest trace admitting an irreducible totally positive polynomial of
// the given degree, found by ascending scan from t = m.
MinTraceResult min_trace_irreducible(Catalog& catalog, long long m,
                                     const EnumLimits& limits = {});

struct ConjectureReport {
  long long degree = 0;
  long long min_trace = 0;
  bool holds_inequality = false;  // min_trace >= 2m-1
  std::vector<TPEntry> equality_witnesses;
  bool all_norm_one = false;
};

ConjectureReport check_conjecture(Catalog& catalog, long long m,
                                  const EnumLimits& limits = {});

struct SmythScanReport {
  long long degree = 0;
  long long ratio_num = 0;
  long long ratio_den = 0;
  long long max_trace = 0;  // largest t with t*den <= num*m
  std::vector<TPEntry> entries;
  // Entries below the threshold must have trace 2m-1 and norm 1; anything
  // else is listed here and makes the scan inconsistent.
  std::vector<std::string> violations;
  bool consistent = true;
};

SmythScanReport smyth_threshold_scan(Catalog& catalog, long long m,
                                     long long ratio_num = 17719,
                                     long long ratio_den = 10000,
                                     const EnumLimits& limits = {});

// Catalog persistence (JSON, canonical byte layout).
void catalog_save(const Catalog& catalog, std::ostream& out);
Catalog catalog_load(std::istream& in);
void catalog_save_file(const Catalog& catalog, const std::string& path);
Catalog catalog_load_file(const std::string& path);
std::string catalog_to_string(const Catalog& catalog);

}  // namespace curvedeg
