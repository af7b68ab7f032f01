#include "report.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "curvedeg/errors.hpp"
#include "curvedeg/poly_text.hpp"
#include "curvedeg/version.hpp"

namespace curvedeg::cli {

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("--format must be one of text, json, csv (got '" +
                              name + "')");
}

const std::vector<std::string>& citation_whitelist() {
  static const std::vector<std::string> labels = {
      "Prop 4.1",  "Cor 4.2",  "Cor 4.3",        "Cor 4.4",
      "(3.5)",     "Thm 5.1",  "Cor 5.2",        "Prop 5.3",
      "Castelnuovo", "Conj (Sec 5)", "Welters [W]", "Sec 6 (i)-(iii)",
      "Thm 6.1",   "Conj 6.2", "(6.3)",          "Prop 6.4",
      "Thm 6.6",   "Prop 6.7", "Prop 6.8",       "Ex 6.11",
  };
  return labels;
}

std::string to_json_string(const ReportDocument& doc) {
  ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["command"] = doc.command;
  j["inputs"] = doc.inputs;
  j["results"] = doc.results;
  j["citations"] = doc.citations;
  j["assumptions"] = doc.assumptions;
  if (doc.elapsed_ms) j["elapsed_ms"] = *doc.elapsed_ms;
  return j.dump(2) + "\n";
}

ordered_json poly_to_json(const MonicIntPoly& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : p.coeffs()) {
    if (!c.fits_slong_p()) {
      throw format_error("report: coefficient out of integer range");
    }
    arr.push_back(c.get_si());
  }
  return arr;
}

namespace {

long long to_ll(const mpz_class& v) {
  if (!v.fits_slong_p()) throw format_error("report: value out of integer range");
  return v.get_si();
}

}  // namespace

ordered_json entry_to_json(const TPEntry& e) {
  ordered_json j;
  j["poly"] = poly_to_json(e.poly);
  j["text"] = render_poly(e.poly);
  j["degree"] = e.degree;
  j["trace"] = to_ll(e.trace_value);
  j["norm"] = to_ll(e.norm_value);
  j["irreducible"] = e.irreducible;
  ordered_json factors = ordered_json::array();
  std::vector<std::pair<MonicIntPoly, int>> pairs;
  for (const auto& f : e.factors) {
    ordered_json fj;
    fj["coeffs"] = poly_to_json(f.poly);
    fj["mult"] = f.multiplicity;
    factors.push_back(std::move(fj));
    pairs.emplace_back(f.poly, f.multiplicity);
  }
  j["factors"] = std::move(factors);
  j["factored"] = render_factored(pairs);
  return j;
}

ordered_json outcome_to_json(const ClassificationOutcome& o) {
  ordered_json j;
  j["outcome"] = std::string(to_string(o.tag));
  j["alt_outcome"] =
      o.alt_tag ? ordered_json(std::string(to_string(*o.alt_tag))) : nullptr;
  j["rm"] = o.rm_polynomial ? poly_to_json(*o.rm_polynomial) : ordered_json(nullptr);
  j["alt_rm"] =
      o.alt_rm_polynomial ? poly_to_json(*o.alt_rm_polynomial) : ordered_json(nullptr);
  j["reason"] = o.reason;
  j["contradiction"] = o.contradiction;
  return j;
}

ordered_json bound_to_json(const BoundCheck& b) {
  ordered_json j;
  j["name"] = b.name;
  j["citation"] = b.citation;
  j["value"] = to_ll(b.value);
  j["satisfied"] = b.satisfied;
  j["note"] = b.note;
  return j;
}

ordered_json genus_to_json(long long n, long long d, const GenusBoundResult& r) {
  ordered_json j;
  j["n"] = n;
  j["d"] = d;
  j["rule"] = r.rule;
  j["max_genus"] = to_ll(r.max_genus);
  j["strict"] = r.strict;
  j["conjectural"] = r.conjectural;
  j["assumptions"] = r.assumptions;
  return j;
}

std::string entry_text_line(const TPEntry& e) {
  std::ostringstream out;
  out << render_poly(e.poly) << "   trace " << e.trace_value.get_str()
      << "  norm " << e.norm_value.get_str();
  if (e.irreducible) {
    out << "  irreducible";
  } else {
    std::vector<std::pair<MonicIntPoly, int>> pairs;
    for (const auto& f : e.factors) pairs.emplace_back(f.poly, f.multiplicity);
    out << "  = " << render_factored(pairs);
  }
  return out.str();
}

// ---------------------------------------------------------------------------

std::string resolve_catalog_path(const std::string& flag_value) {
  std::string value = flag_value;
  if (value.empty()) {
    if (const char* env = std::getenv("CURVEDEG_CATALOG")) value = env;
  }
  if (value.empty()) {
    const char* home = std::getenv("HOME");
    if (home == nullptr || *home == '\0') return "";
    value = std::string(home) + "/.cache/curvedeg/catalog.json";
  }
  if (value == "none") return "";
  return value;
}

CatalogSession::CatalogSession(std::string path) : path_(std::move(path)) {
  if (path_.empty()) return;
  std::filesystem::path p(path_);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  lock_fd_ = ::open(path_.c_str(), O_RDWR | O_CREAT, 0644);
  if (lock_fd_ < 0) {
    throw format_error("catalog: cannot open " + path_);
  }
  if (::flock(lock_fd_, LOCK_EX | LOCK_NB) != 0) {
    ::close(lock_fd_);
    lock_fd_ = -1;
    throw std::invalid_argument(
        "catalog: " + path_ +
        " is in use by another invocation (advisory lock held); rerun later or "
        "pass a different --catalog");
  }
  struct stat st{};
  if (::fstat(lock_fd_, &st) == 0 && st.st_size > 0) {
    catalog_ = catalog_load_file(path_);
  }
}

CatalogSession::~CatalogSession() {
  if (lock_fd_ >= 0) {
    ::flock(lock_fd_, LOCK_UN);
    ::close(lock_fd_);
  }
}

void CatalogSession::save() {
  if (path_.empty()) return;
  // The advisory lock is on the inode, so rewriting through a fresh stream
  // on the same path keeps it held.
  catalog_save_file(catalog_, path_);
}

}  // namespace curvedeg::cli
