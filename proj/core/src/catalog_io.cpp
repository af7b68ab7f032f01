// Catalog persistence.  The on-disk layout is canonical: complete-cell
// markers sorted, entries sorted by (degree, trace, coefficients), fixed key
// order, two-space indentation.  Saving a loaded catalog reproduces the file
// byte for byte.

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "curvedeg/enumerate.hpp"
#include "curvedeg/errors.hpp"
#include "curvedeg/poly_text.hpp"

namespace curvedeg {

namespace {

using ordered_json = nlohmann::ordered_json;

long long to_int64(const mpz_class& v, const std::string& where) {
  if (!v.fits_slong_p()) {
    throw format_error("catalog: value out of integer range in " + where);
  }
  return v.get_si();
}

ordered_json coeffs_to_json(const MonicIntPoly& p, const std::string& where) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_int64(c, where));
  return arr;
}

MonicIntPoly coeffs_from_json(const ordered_json& arr,
                              const std::string& where) {
  if (!arr.is_array() || arr.empty()) {
    throw format_error("catalog: " + where + ": coeffs must be a non-empty array");
  }
  std::vector<mpz_class> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number_integer()) {
      throw format_error("catalog: " + where + ": non-integer coefficient");
    }
    coeffs.emplace_back(v.get<long>());
  }
  if (coeffs.back() != 1) {
    throw format_error("catalog: " + where + ": non-monic polynomial");
  }
  return MonicIntPoly(std::move(coeffs));
}

}  // namespace

void catalog_save(const Catalog& catalog, std::ostream& out) {
  ordered_json doc;
  ordered_json complete = ordered_json::array();
  for (const auto& key : catalog.complete_cells()) {
    complete.push_back(ordered_json::array({key.degree, key.trace}));
  }
  doc["complete"] = std::move(complete);

  ordered_json entries = ordered_json::array();
  for (const auto& key : catalog.complete_cells()) {
    for (const auto& e : catalog.cell(key)) {
      std::string where = "cell (" + std::to_string(key.degree) + ", " +
                          std::to_string(key.trace) + ")";
      ordered_json j;
      j["degree"] = e.degree;
      j["trace"] = to_int64(e.trace_value, where);
      j["coeffs"] = coeffs_to_json(e.poly, where);
      j["irreducible"] = e.irreducible;
      j["norm"] = to_int64(e.norm_value, where);
      ordered_json factors = ordered_json::array();
      for (const auto& f : e.factors) {
        ordered_json fj;
        fj["coeffs"] = coeffs_to_json(f.poly, where);
        fj["mult"] = f.multiplicity;
        factors.push_back(std::move(fj));
      }
      j["factors"] = std::move(factors);
      entries.push_back(std::move(j));
    }
  }
  doc["entries"] = std::move(entries);
  out << doc.dump(2) << "\n";
}

Catalog catalog_load(std::istream& in) {
  ordered_json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw format_error(std::string("catalog: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("complete") || !doc.contains("entries")) {
    throw format_error("catalog: document must contain 'complete' and 'entries'");
  }

  std::map<CellKey, std::vector<TPEntry>> cells;
  for (const auto& marker : doc["complete"]) {
    if (!marker.is_array() || marker.size() != 2 ||
        !marker[0].is_number_integer() || !marker[1].is_number_integer()) {
      throw format_error("catalog: malformed completeness marker");
    }
    CellKey key{marker[0].get<long long>(), marker[1].get<long long>()};
    cells.emplace(key, std::vector<TPEntry>{});
  }

  for (const auto& j : doc["entries"]) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("trace") ||
        !j.contains("coeffs") || !j.contains("irreducible") ||
        !j.contains("norm") || !j.contains("factors")) {
      throw format_error("catalog: entry is missing a required key");
    }
    CellKey key{j["degree"].get<long long>(), j["trace"].get<long long>()};
    std::string where = "cell (" + std::to_string(key.degree) + ", " +
                        std::to_string(key.trace) + ")";
    auto it = cells.find(key);
    if (it == cells.end()) {
      throw format_error("catalog: " + where +
                         ": entry present but cell is not marked complete");
    }
    MonicIntPoly poly = coeffs_from_json(j["coeffs"], where);
    if (poly.degree() != key.degree) {
      throw format_error("catalog: " + where + ": degree does not match coefficients");
    }
    if (trace(poly) != mpz_class(j["trace"].get<long>())) {
      throw format_error("catalog: " + where + ": stored trace is wrong for " +
                         render_poly(poly));
    }
    if (norm(poly) != mpz_class(j["norm"].get<long>())) {
      throw format_error("catalog: " + where + ": stored norm is wrong for " +
                         render_poly(poly));
    }
    std::vector<TPEntry::Factor> factors;
    MonicIntPoly product = MonicIntPoly::one();
    for (const auto& fj : j["factors"]) {
      if (!fj.is_object() || !fj.contains("coeffs") || !fj.contains("mult")) {
        throw format_error("catalog: " + where + ": malformed factor");
      }
      MonicIntPoly fp = coeffs_from_json(fj["coeffs"], where);
      int mult = fj["mult"].get<int>();
      if (mult < 1) throw format_error("catalog: " + where + ": factor multiplicity < 1");
      product = product * fp.pow(static_cast<unsigned>(mult));
      factors.push_back({std::move(fp), mult});
    }
    if (product != poly) {
      throw format_error("catalog: " + where +
                         ": factors do not multiply back to the polynomial " +
                         render_poly(poly));
    }
    TPEntry entry{std::move(poly), static_cast<int>(key.degree),
                  mpz_class(j["trace"].get<long>()),
                  mpz_class(j["norm"].get<long>()),
                  j["irreducible"].get<bool>(), std::move(factors)};
    it->second.push_back(std::move(entry));
  }

  Catalog catalog;
  for (auto& [key, entries] : cells) {
    std::sort(entries.begin(), entries.end(),
              [](const TPEntry& a, const TPEntry& b) { return a.poly < b.poly; });
    for (size_t i = 1; i < entries.size(); ++i) {
      if (entries[i].poly == entries[i - 1].poly) {
        throw format_error("catalog: duplicate entry in cell (" +
                           std::to_string(key.degree) + ", " +
                           std::to_string(key.trace) + ")");
      }
    }
    catalog.insert_complete(key, std::move(entries));
  }
  return catalog;
}

void catalog_save_file(const Catalog& catalog, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw format_error("catalog: cannot open for writing: " + path);
  catalog_save(catalog, out);
  if (!out) throw format_error("catalog: write failed: " + path);
}

Catalog catalog_load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw format_error("catalog: cannot open: " + path);
  return catalog_load(in);
}

std::string catalog_to_string(const Catalog& catalog) {
  std::ostringstream out;
  catalog_save(catalog, out);
  return out.str();
}

}  // namespace curvedeg
