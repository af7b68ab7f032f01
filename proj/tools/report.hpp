#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvedeg/enumerate.hpp"
#include "curvedeg/feasibility.hpp"
#include "curvedeg/genus.hpp"
#include "curvedeg/poly.hpp"

namespace curvedeg::cli {

using ordered_json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& name);

// Citation labels reports are allowed to carry.
const std::vector<std::string>& citation_whitelist();

struct ReportDocument {
  std::string command;
  ordered_json inputs = ordered_json::object();
  ordered_json results = ordered_json::object();
  std::vector<std::string> citations;
  std::vector<std::string> assumptions;
  std::optional<long long> elapsed_ms;  // absent in reproducible mode
  // Text and CSV renderings; JSON is assembled from the fields above.
  std::string text;
  std::optional<std::string> csv;
};

std::string to_json_string(const ReportDocument& doc);

// JSON helpers shared by the command handlers.
ordered_json poly_to_json(const MonicIntPoly& p);
ordered_json entry_to_json(const TPEntry& e);
ordered_json outcome_to_json(const ClassificationOutcome& o);
ordered_json bound_to_json(const BoundCheck& b);
ordered_json genus_to_json(long long n, long long d, const GenusBoundResult& r);

std::string entry_text_line(const TPEntry& e);

// Exclusive access to one catalog file: takes an advisory lock, loads the
// existing content, and saves back on request.  A second invocation on the
// same path fails fast.
class CatalogSession {
 public:
  // path empty = in-memory only.
  explicit CatalogSession(std::string path);
  ~CatalogSession();

  CatalogSession(const CatalogSession&) = delete;
  CatalogSession& operator=(const CatalogSession&) = delete;

  Catalog& catalog() { return catalog_; }
  const std::string& path() const { return path_; }
  bool persistent() const { return !path_.empty(); }
  void save();

 private:
  std::string path_;
  int lock_fd_ = -1;
  Catalog catalog_;
};

// --catalog flag > CURVEDEG_CATALOG > ~/.cache/curvedeg/catalog.json;
// the literal value "none" disables persistence.
std::string resolve_catalog_path(const std::string& flag_value);

}  // namespace curvedeg::cli
