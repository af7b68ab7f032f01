// curvedeg: exact-arithmetic workbench for degrees of curves in polarized
// abelian varieties.  Every computation is integer/rational exact; reports
// are deterministic in --reproducible mode.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvedeg/enumerate.hpp"
#include "curvedeg/errors.hpp"
#include "curvedeg/families.hpp"
#include "curvedeg/feasibility.hpp"
#include "curvedeg/genus.hpp"
#include "curvedeg/poly_text.hpp"
#include "curvedeg/product.hpp"
#include "curvedeg/version.hpp"
#include "report.hpp"

namespace {

using namespace curvedeg;
using namespace curvedeg::cli;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitResource = 3;
constexpr int kExitInconsistent = 4;

struct CommonOpts {
  std::string format = "text";
  std::string catalog_flag;
  std::uint64_t budget = 1'000'000'000;
  bool reproducible = false;

  EnumLimits limits() const { return EnumLimits{budget, 0}; }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format: text, json or csv")
      ->default_val("text");
  cmd->add_option("--catalog", opts.catalog_flag,
                  "Catalog file path ('none' disables persistence; default "
                  "$CURVEDEG_CATALOG or ~/.cache/curvedeg/catalog.json)");
  cmd->add_option("--budget", opts.budget,
                  "Search node budget before aborting with a resource error")
      ->default_val(1'000'000'000ULL);
  cmd->add_flag("--reproducible", opts.reproducible,
                "Omit timing so identical inputs give byte-identical output");
}

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void check_citations(const std::vector<std::string>& citations) {
  const auto& allowed = citation_whitelist();
  for (const auto& c : citations) {
    if (std::find(allowed.begin(), allowed.end(), c) == allowed.end()) {
      throw std::logic_error("internal: citation label not in whitelist: " + c);
    }
  }
}

void emit(const ReportDocument& doc, Format format) {
  switch (format) {
    case Format::Json:
      std::cout << to_json_string(doc);
      break;
    case Format::Csv:
      if (!doc.csv) {
        throw std::invalid_argument("--format csv is not available for command '" +
                                    doc.command + "'");
      }
      std::cout << *doc.csv;
      break;
    case Format::Text:
      std::cout << doc.text;
      break;
  }
}

// ---------------------------------------------------------------------------
// enumerate

struct EnumerateArgs {
  long long degree = 0;
  long long trace = 0;
  bool irreducible_only = false;
};

ReportDocument run_enumerate(const EnumerateArgs& args, CatalogSession& session,
                             const CommonOpts& opts) {
  auto entries = args.irreducible_only
                     ? enumerate_tp_irreducible(session.catalog(), args.degree,
                                                args.trace, opts.limits())
                     : enumerate_tp(session.catalog(), args.degree, args.trace,
                                    opts.limits());
  ReportDocument doc;
  doc.command = "enumerate";
  doc.inputs["degree"] = args.degree;
  doc.inputs["trace"] = args.trace;
  doc.inputs["irreducible"] = args.irreducible_only;
  doc.results["count"] = entries.size();
  ordered_json arr = ordered_json::array();
  for (const auto& e : entries) arr.push_back(entry_to_json(e));
  doc.results["entries"] = std::move(arr);
  doc.citations = {"Sec 6 (i)-(iii)"};

  std::ostringstream text;
  text << "cell (degree " << args.degree << ", trace " << args.trace << "): "
       << entries.size() << (args.irreducible_only ? " irreducible" : "")
       << (entries.size() == 1 ? " entry\n" : " entries\n");
  for (const auto& e : entries) text << "  " << entry_text_line(e) << "\n";
  doc.text = text.str();

  std::ostringstream csv;
  csv << "degree,trace,poly,norm,irreducible,factored\n";
  for (const auto& e : entries) {
    std::vector<std::pair<MonicIntPoly, int>> pairs;
    for (const auto& f : e.factors) pairs.emplace_back(f.poly, f.multiplicity);
    csv << e.degree << "," << e.trace_value.get_str() << ",\""
        << render_poly(e.poly) << "\"," << e.norm_value.get_str() << ","
        << (e.irreducible ? "true" : "false") << ",\"" << render_factored(pairs)
        << "\"\n";
  }
  doc.csv = csv.str();
  return doc;
}

// ---------------------------------------------------------------------------
// min-trace / conjecture / smyth-scan

ReportDocument run_min_trace(long long degree, CatalogSession& session,
                             const CommonOpts& opts) {
  auto result = min_trace_irreducible(session.catalog(), degree, opts.limits());
  ReportDocument doc;
  doc.command = "min-trace";
  doc.inputs["degree"] = degree;
  doc.results["min_trace"] = result.min_trace;
  ordered_json arr = ordered_json::array();
  for (const auto& e : result.witnesses) arr.push_back(entry_to_json(e));
  doc.results["witnesses"] = std::move(arr);
  doc.citations = {"Conj 6.2"};

  std::ostringstream text;
  text << "degree " << degree << ": smallest trace of an irreducible totally "
       << "positive polynomial is " << result.min_trace << "\n";
  for (const auto& e : result.witnesses) text << "  " << entry_text_line(e) << "\n";
  doc.text = text.str();
  return doc;
}

ReportDocument run_conjecture(long long degree, CatalogSession& session,
                              const CommonOpts& opts) {
  auto report = check_conjecture(session.catalog(), degree, opts.limits());
  ReportDocument doc;
  doc.command = "conjecture";
  doc.inputs["degree"] = degree;
  doc.results["min_trace"] = report.min_trace;
  doc.results["holds_inequality"] = report.holds_inequality;
  ordered_json arr = ordered_json::array();
  for (const auto& e : report.equality_witnesses) arr.push_back(entry_to_json(e));
  doc.results["equality_witnesses"] = std::move(arr);
  doc.results["all_norm_one"] = report.all_norm_one;
  doc.citations = {"Conj 6.2", "(6.3)"};

  std::ostringstream text;
  text << "C_" << degree << ": min trace " << report.min_trace << " (needs >= "
       << 2 * degree - 1 << "): "
       << (report.holds_inequality ? "inequality holds" : "INEQUALITY FAILS")
       << "; " << report.equality_witnesses.size() << " equality witnesses, "
       << (report.all_norm_one ? "all of norm 1" : "NOT all of norm 1") << "\n";
  for (const auto& e : report.equality_witnesses) {
    text << "  " << entry_text_line(e) << "\n";
  }
  doc.text = text.str();
  return doc;
}

ReportDocument run_smyth_scan(long long degree, long long ratio_num,
                              long long ratio_den, CatalogSession& session,
                              const CommonOpts& opts, bool& inconsistent) {
  auto report = smyth_threshold_scan(session.catalog(), degree, ratio_num,
                                     ratio_den, opts.limits());
  inconsistent = !report.consistent;
  ReportDocument doc;
  doc.command = "smyth-scan";
  doc.inputs["degree"] = degree;
  doc.inputs["ratio_num"] = ratio_num;
  doc.inputs["ratio_den"] = ratio_den;
  doc.results["max_trace"] = report.max_trace;
  ordered_json arr = ordered_json::array();
  for (const auto& e : report.entries) arr.push_back(entry_to_json(e));
  doc.results["entries"] = std::move(arr);
  doc.results["violations"] = report.violations;
  doc.results["consistent"] = report.consistent;
  doc.citations = {"Thm 6.1"};

  std::ostringstream text;
  text << "degree " << degree << ": irreducible entries with trace*"
       << ratio_den << " <= " << ratio_num << "*" << degree << " (trace <= "
       << report.max_trace << "): " << report.entries.size() << "\n";
  for (const auto& e : report.entries) text << "  " << entry_text_line(e) << "\n";
  if (!report.consistent) {
    text << "INCONSISTENT with the threshold theorem:\n";
    for (const auto& v : report.violations) text << "  " << v << "\n";
  }
  doc.text = text.str();

  std::ostringstream csv;
  csv << "degree,trace,poly,norm,irreducible\n";
  for (const auto& e : report.entries) {
    csv << e.degree << "," << e.trace_value.get_str() << ",\""
        << render_poly(e.poly) << "\"," << e.norm_value.get_str() << ","
        << (e.irreducible ? "true" : "false") << "\n";
  }
  doc.csv = csv.str();
  return doc;
}

// ---------------------------------------------------------------------------
// feasibility

struct FeasibilityArgs {
  int dim = 0;
  long long degree = 0;
  bool simple = false;
  std::vector<long long> char_not;
  std::vector<long long> type;
};

ReportDocument run_feasibility(const FeasibilityArgs& args,
                               CatalogSession& session, const CommonOpts& opts,
                               bool& inconsistent) {
  PolarizationType type = args.type.empty()
                              ? PolarizationType::principal(args.dim)
                              : PolarizationType(args.type);
  if (!args.type.empty() && type.dimension() != args.dim) {
    throw std::invalid_argument(
        "feasibility: --type must list exactly --dim deltas");
  }
  Scenario scenario{args.dim, args.degree, args.simple,
                    std::set<long long>(args.char_not.begin(), args.char_not.end()),
                    type};
  auto report = feasibility_report(session.catalog(), scenario, opts.limits());
  inconsistent = !report.consistent;

  ReportDocument doc;
  doc.command = "feasibility";
  doc.inputs["dim"] = args.dim;
  doc.inputs["curve_degree"] = args.degree;
  doc.inputs["simple"] = args.simple;
  doc.inputs["char_not"] = std::vector<long long>(scenario.char_excluded.begin(),
                                                  scenario.char_excluded.end());
  doc.inputs["type"] = type.deltas();

  ordered_json scen;
  scen["dim"] = scenario.dim;
  scen["curve_degree"] = scenario.curve_degree;
  scen["simple"] = scenario.simple;
  scen["char_not"] = doc.inputs["char_not"];
  scen["type"] = type.deltas();
  doc.results["scenario"] = std::move(scen);

  ordered_json cands = ordered_json::array();
  std::vector<std::string> citations = {"Prop 4.1", "(3.5)", "Sec 6 (i)-(iii)"};
  for (const auto& [entry, outcome] : report.candidates) {
    ordered_json cj;
    cj["poly"] = poly_to_json(entry.poly);
    ordered_json oj = outcome_to_json(outcome);
    for (auto& [k, v] : oj.items()) cj[k] = v;
    cj["text"] = render_poly(entry.poly);
    cj["trace"] = entry.trace_value.get_si();
    cj["norm"] = entry.norm_value.get_si();
    cands.push_back(std::move(cj));
    std::string base = outcome.reason.substr(0, outcome.reason.find(" ("));
    base = base.substr(0, base.find(" (i"));
    if (!base.empty()) {
      // reasons carry case suffixes; the citation list keeps base labels
      if (base.rfind("Prop 6.8", 0) == 0) base = "Prop 6.8";
      citations.push_back(base);
    }
  }
  doc.results["candidates"] = std::move(cands);
  ordered_json bounds = ordered_json::array();
  for (const auto& b : report.bounds) bounds.push_back(bound_to_json(b));
  doc.results["bounds"] = std::move(bounds);
  doc.results["notes"] = report.notes;
  doc.results["consistent"] = report.consistent;
  if (scenario.simple) citations.push_back("Thm 6.6");
  doc.citations = sorted_unique(std::move(citations));
  doc.assumptions = report.notes;

  std::ostringstream text;
  text << "scenario: dim " << scenario.dim << ", curve degree "
       << scenario.curve_degree << (type.is_principal() ? ", principal" : "")
       << (scenario.simple ? ", simple" : "") << "\n";
  text << "bounds:\n";
  for (const auto& b : report.bounds) {
    text << "  " << b.name << " (" << b.citation << "): " << b.value.get_str()
         << (b.satisfied ? "  [ok]" : "  [violated]") << "\n";
  }
  for (const auto& n : report.notes) text << "note: " << n << "\n";
  text << "candidates (" << report.candidates.size() << "):\n";
  for (const auto& [entry, outcome] : report.candidates) {
    text << "  " << render_poly(entry.poly) << "  ->  "
         << to_string(outcome.tag);
    if (outcome.alt_tag) text << " or " << to_string(*outcome.alt_tag);
    if (outcome.rm_polynomial) {
      text << "  rm " << render_poly(*outcome.rm_polynomial);
    }
    if (outcome.alt_rm_polynomial) {
      text << " / " << render_poly(*outcome.alt_rm_polynomial);
    }
    if (!outcome.reason.empty()) text << "  [" << outcome.reason << "]";
    if (outcome.contradiction) text << "  !! contradicts Thm 6.6";
    text << "\n";
  }
  doc.text = text.str();
  return doc;
}

// ---------------------------------------------------------------------------
// bounds

struct BoundsArgs {
  int dim = 0;
  std::vector<long long> type;
  long long torsion_order = 0;  // 0 = not requested
  int subdim = 0;               // 0 = not requested
  bool separable = false;
};

ReportDocument run_bounds(const BoundsArgs& args) {
  PolarizationType type = args.type.empty()
                              ? PolarizationType::principal(args.dim)
                              : PolarizationType(args.type);
  if (type.dimension() != args.dim) {
    throw std::invalid_argument("bounds: --type must list exactly --dim deltas");
  }
  bool separable = args.separable || type.is_principal();

  ReportDocument doc;
  doc.command = "bounds";
  doc.inputs["dim"] = args.dim;
  doc.inputs["type"] = type.deltas();
  doc.inputs["separable"] = separable;

  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  std::ostringstream csv;
  csv << "name,citation,value\n";
  auto push = [&](const std::string& name, const std::string& citation,
                  const mpz_class& value) {
    ordered_json j;
    j["name"] = name;
    j["citation"] = citation;
    j["value"] = value.get_si();
    rows.push_back(std::move(j));
    text << "  " << name << " (" << citation << "): " << value.get_str() << "\n";
    csv << name << "," << citation << "," << value.get_str() << "\n";
  };

  text << "dim " << args.dim << ", type (";
  for (size_t i = 0; i < type.deltas().size(); ++i) {
    if (i) text << "|";
    text << type.deltas()[i];
  }
  text << "), degree " << type.degree().get_str() << "\n";

  push("min_degree", "Prop 4.1", min_degree(args.dim, type));
  if (args.subdim > 0) {
    push("min_degree_subcurve(m=" + std::to_string(args.subdim) + ")",
         "Cor 4.3", min_degree_subcurve(args.subdim, type));
  }
  if (args.torsion_order > 0) {
    push("torsion_min_degree(m=" + std::to_string(args.torsion_order) + ")",
         "Cor 4.4", torsion_min_degree(args.dim, args.torsion_order));
  }
  push("generic_divisibility", "(3.5)",
       generic_divisibility(args.dim, type, separable));
  push("generic_min_class", "Cor 5.2",
       mpz_class(static_cast<long>(generic_min_class(args.dim))));

  auto spectrum_json = [&](SpectrumCutoff cutoff, const std::string& key) {
    auto degrees = simple_degree_spectrum(args.dim, cutoff);
    doc.results[key] = degrees;
    text << "  " << key << " (Thm 6.6): ";
    for (size_t i = 0; i < degrees.size(); ++i) {
      if (i) text << ", ";
      text << degrees[i];
    }
    text << "\n";
  };

  doc.results["bounds"] = std::move(rows);
  spectrum_json(SpectrumCutoff::ConjectureStrict, "simple_degree_spectrum_conjecture");
  spectrum_json(SpectrumCutoff::SmythRatio, "simple_degree_spectrum_smyth");

  doc.citations = {"(3.5)", "Cor 4.3", "Cor 4.4", "Cor 5.2", "Prop 4.1", "Thm 6.6"};
  doc.assumptions = {separable ? "type asserted separable"
                               : "separability not asserted"};
  doc.text = text.str();
  doc.csv = csv.str();
  return doc;
}

// ---------------------------------------------------------------------------
// genus

struct GenusArgs {
  long long dim = 0;
  long long degree = 0;
  long long cls = 0;       // conjectural bound when > 0
  long long dprime = 0;    // castelnuovo when both set
  long long proj_r = 0;
};

ReportDocument run_genus(const GenusArgs& args) {
  if (args.dim == 0 && args.dprime == 0) {
    throw std::invalid_argument(
        "genus: pass --dim with --curve-degree, and/or --dprime with --proj-r");
  }
  ReportDocument doc;
  doc.command = "genus";
  std::vector<std::pair<std::pair<long long, long long>, GenusBoundResult>> rows;

  if (args.dim != 0) {
    if (args.degree == 0) {
      throw std::invalid_argument("genus: --curve-degree is required with --dim");
    }
    rows.push_back({{args.dim, args.degree}, genus_upper_bound(args.dim, args.degree)});
    rows.push_back({{args.dim, args.degree}, genus_bound_refined(args.dim, args.degree)});
    if (args.degree == 2 * args.dim) {
      rows.push_back({{args.dim, args.degree}, welters_info(args.dim)});
    }
    if (args.cls > 0) {
      rows.push_back({{args.dim, args.degree}, conjectural_genus(args.dim, args.cls)});
    }
    doc.inputs["dim"] = args.dim;
    doc.inputs["curve_degree"] = args.degree;
    if (args.cls > 0) doc.inputs["class"] = args.cls;
  }
  if (args.dprime != 0 || args.proj_r != 0) {
    if (args.dprime == 0 || args.proj_r == 0) {
      throw std::invalid_argument("genus: --dprime and --proj-r go together");
    }
    rows.push_back({{args.proj_r, args.dprime}, castelnuovo(args.dprime, args.proj_r)});
    doc.inputs["dprime"] = args.dprime;
    doc.inputs["proj_r"] = args.proj_r;
  }

  ordered_json arr = ordered_json::array();
  std::ostringstream text;
  std::ostringstream csv;
  csv << genus_csv_header() << "\n";
  std::vector<std::string> citations;
  for (const auto& [nd, r] : rows) {
    arr.push_back(genus_to_json(nd.first, nd.second, r));
    csv << genus_csv_row(nd.first, nd.second, r) << "\n";
    text << "  " << r.rule << ": g <= " << r.max_genus.get_str()
         << (r.strict ? " (from a strict inequality)" : "")
         << (r.conjectural ? " [conjectural]" : "") << "\n";
    std::string base = r.rule.substr(0, r.rule.find(" (i"));
    if (base == "Castelnuovo") citations.push_back("Castelnuovo");
    else if (base.rfind("Prop 5.3", 0) == 0) citations.push_back("Prop 5.3");
    else citations.push_back(base);
  }
  doc.results["bounds"] = std::move(arr);
  doc.citations = sorted_unique(std::move(citations));
  doc.text = text.str();
  doc.csv = csv.str();
  return doc;
}

// ---------------------------------------------------------------------------
// family

ReportDocument run_family(const std::vector<long long>& ms,
                          CatalogSession& session, const CommonOpts& opts) {
  ReportDocument doc;
  doc.command = "family";
  doc.inputs["M"] = ms;
  ordered_json arr = ordered_json::array();
  std::ostringstream text;
  for (long long M : ms) {
    auto report = mestre_check(session.catalog(), M, opts.limits());
    ordered_json j;
    j["M"] = report.M;
    j["n"] = report.n;
    j["g"] = poly_to_json(report.g);
    j["g_text"] = render_poly(report.g);
    j["minimal_poly"] = report.minimal_poly ? poly_to_json(*report.minimal_poly)
                                            : ordered_json(nullptr);
    j["trace"] = report.trace_value.get_si();
    j["norm"] = report.norm_value.get_si();
    j["implied_curve_degree"] = report.implied_curve_degree;
    j["irreducible"] = report.irreducible;
    j["totally_positive"] = report.totally_positive;
    arr.push_back(std::move(j));
    text << "M = " << M << ": G_M = " << render_poly(report.g) << "  (n = "
         << report.n << ", trace " << report.trace_value.get_str() << ", norm "
         << report.norm_value.get_str() << ", curve degree "
         << report.implied_curve_degree << ")  verified\n";
  }
  doc.results["reports"] = std::move(arr);
  doc.citations = {"Conj 6.2"};
  doc.assumptions = {"M odd prime: G_M is the minimal polynomial of 4cos^2(k pi/M)"};
  doc.text = text.str();
  return doc;
}

// ---------------------------------------------------------------------------
// quotient-degree

ReportDocument run_quotient_degree(long long n, long long r, long long s) {
  ProductContext ctx{static_cast<int>(n), mpz_class(static_cast<long>(r))};
  ProductClass f_theta{mpz_class(static_cast<long>(r)), 1, ctx};
  ProductClass f_q_theta{mpz_class(static_cast<long>(r)) * static_cast<long>(s), 1,
                         ctx};
  mpz_class mixed = mixed_intersection(f_theta, f_q_theta);
  mpz_class degree = quotient_curve_degree(n, r, s);
  mpz_class factorial_n1;
  mpz_fac_ui(factorial_n1.get_mpz_t(), static_cast<unsigned long>(n - 1));

  ReportDocument doc;
  doc.command = "quotient-degree";
  doc.inputs["dim"] = n;
  doc.inputs["r"] = r;
  doc.inputs["s"] = s;
  doc.results["mixed_intersection"] = mixed.get_si();
  doc.results["mixed_intersection_raw"] = mpz_class(mixed * factorial_n1).get_si();
  doc.results["deg_f"] = mpz_class(mpz_class(static_cast<long>(r)) *
                                   static_cast<long>(r)).get_si();
  doc.results["quotient_curve_degree"] = degree.get_si();
  doc.citations = {"Ex 6.11"};
  doc.assumptions = {"r and s prime to char(k)", "s congruent to 1 mod r"};

  std::ostringstream text;
  text << "E x Y with deg(lambda_Y) = r = " << r << ", s = " << s << ", n = "
       << n << ":\n"
       << "  f*theta_C^(n-1)/(n-1)! . f*q*theta = " << mixed.get_str()
       << "  (= r^2 (s + n - 1))\n"
       << "  degree of q(C) with respect to theta: " << degree.get_str()
       << "  (= n + s - 1)\n";
  doc.text = text.str();
  return doc;
}

// ---------------------------------------------------------------------------
// catalog

struct CatalogArgs {
  std::vector<std::string> build;  // "m,t" cells to complete
  bool info = false;
};

ReportDocument run_catalog(const CatalogArgs& args, CatalogSession& session,
                           const CommonOpts& opts) {
  for (const auto& spec : args.build) {
    auto comma = spec.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("catalog: --build expects 'degree,trace'");
    }
    long long m = std::stoll(spec.substr(0, comma));
    long long t = std::stoll(spec.substr(comma + 1));
    enumerate_tp(session.catalog(), m, t, opts.limits());
  }

  ReportDocument doc;
  doc.command = "catalog";
  doc.inputs["path"] = session.path();
  doc.inputs["build"] = args.build;
  ordered_json cells = ordered_json::array();
  std::ostringstream text;
  text << "catalog " << (session.persistent() ? session.path() : "(in memory)")
       << ": " << session.catalog().cell_count() << " complete cells, "
       << session.catalog().entry_count() << " entries\n";
  for (const auto& key : session.catalog().complete_cells()) {
    ordered_json c;
    c["degree"] = key.degree;
    c["trace"] = key.trace;
    c["entries"] = session.catalog().cell(key).size();
    cells.push_back(std::move(c));
    if (args.info) {
      text << "  (" << key.degree << ", " << key.trace << "): "
           << session.catalog().cell(key).size() << " entries\n";
    }
  }
  doc.results["cells"] = std::move(cells);
  doc.results["cell_count"] = session.catalog().cell_count();
  doc.results["entry_count"] = session.catalog().entry_count();
  doc.text = text.str();
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvedeg: exact arithmetic for degrees of curves in abelian varieties"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
  app.require_subcommand(1);

  CommonOpts common;

  auto* cmd_enumerate = app.add_subcommand(
      "enumerate", "List all totally positive polynomials of a (degree, trace) cell");
  EnumerateArgs enum_args;
  cmd_enumerate->add_option("-m,--degree", enum_args.degree, "Polynomial degree")
      ->required()->check(CLI::PositiveNumber);
  cmd_enumerate->add_option("-t,--trace", enum_args.trace, "Exact trace")
      ->required()->check(CLI::PositiveNumber);
  cmd_enumerate->add_flag("--irreducible", enum_args.irreducible_only,
                          "Keep only irreducible entries");
  add_common(cmd_enumerate, common);

  auto* cmd_min_trace = app.add_subcommand(
      "min-trace", "Smallest trace of an irreducible totally positive polynomial");
  long long mt_degree = 0;
  cmd_min_trace->add_option("-m,--degree", mt_degree, "Polynomial degree")
      ->required()->check(CLI::PositiveNumber);
  add_common(cmd_min_trace, common);

  auto* cmd_conjecture = app.add_subcommand(
      "conjecture", "Check the trace conjecture C_m for one degree");
  long long conj_degree = 0;
  cmd_conjecture->add_option("-m,--degree", conj_degree, "Polynomial degree")
      ->required()->check(CLI::PositiveNumber);
  add_common(cmd_conjecture, common);

  auto* cmd_smyth = app.add_subcommand(
      "smyth-scan", "Scan irreducible entries below the Smyth trace threshold");
  long long smyth_degree = 0, ratio_num = 17719, ratio_den = 10000;
  cmd_smyth->add_option("-m,--degree", smyth_degree, "Polynomial degree")
      ->required()->check(CLI::PositiveNumber);
  cmd_smyth->add_option("--ratio-num", ratio_num, "Threshold numerator")
      ->default_val(17719);
  cmd_smyth->add_option("--ratio-den", ratio_den, "Threshold denominator")
      ->default_val(10000);
  add_common(cmd_smyth, common);

  auto* cmd_feasibility = app.add_subcommand(
      "feasibility", "Enumerate and classify Q_C candidates for a scenario");
  FeasibilityArgs feas_args;
  cmd_feasibility->add_option("-n,--dim", feas_args.dim, "Abelian variety dimension")
      ->required()->check(CLI::PositiveNumber);
  cmd_feasibility
      ->add_option("-d,--curve-degree,--degree", feas_args.degree,
                   "Curve degree d = C . lambda")
      ->required()->check(CLI::PositiveNumber);
  cmd_feasibility->add_flag("--simple", feas_args.simple,
                            "Assume X is a simple abelian variety");
  cmd_feasibility->add_option("--char-not", feas_args.char_not,
                              "Primes asserted different from char(k)")
      ->delimiter(',');
  cmd_feasibility->add_option("--type", feas_args.type,
                              "Polarization deltas, comma separated (default principal)")
      ->delimiter(',');
  add_common(cmd_feasibility, common);

  auto* cmd_bounds = app.add_subcommand("bounds", "Degree bound calculators");
  BoundsArgs bounds_args;
  cmd_bounds->add_option("-n,--dim", bounds_args.dim, "Abelian variety dimension")
      ->required()->check(CLI::PositiveNumber);
  cmd_bounds->add_option("--type", bounds_args.type,
                         "Polarization deltas, comma separated (default principal)")
      ->delimiter(',');
  cmd_bounds->add_option("--torsion-order", bounds_args.torsion_order,
                         "Order of a translation leaving the curve invariant");
  cmd_bounds->add_option("--subdim", bounds_args.subdim,
                         "Dimension of the abelian subvariety generated by C");
  cmd_bounds->add_flag("--separable", bounds_args.separable,
                       "Assert the polarization type is separable");
  add_common(cmd_bounds, common);

  auto* cmd_genus = app.add_subcommand("genus", "Genus bound calculators");
  GenusArgs genus_args;
  cmd_genus->add_option("-n,--dim", genus_args.dim, "Abelian variety dimension");
  cmd_genus->add_option("-d,--curve-degree,--degree", genus_args.degree,
                        "Curve degree");
  cmd_genus->add_option("--class", genus_args.cls,
                        "Multiple c of the minimal class (conjectural bound)");
  cmd_genus->add_option("--dprime", genus_args.dprime,
                        "Castelnuovo: degree of the projective curve");
  cmd_genus->add_option("--proj-r", genus_args.proj_r,
                        "Castelnuovo: dimension of the projective space");
  add_common(cmd_genus, common);

  auto* cmd_family = app.add_subcommand(
      "family", "Verify the 4cos^2 family polynomial G_M for odd primes M");
  std::vector<long long> family_ms;
  cmd_family->add_option("--M", family_ms, "Values of M, comma separated")
      ->required()->delimiter(',');
  add_common(cmd_family, common);

  auto* cmd_quotient = app.add_subcommand(
      "quotient-degree", "Degree of the quotient curve in the E x Y construction");
  long long q_n = 0, q_r = 0, q_s = 0;
  cmd_quotient->add_option("-n,--dim", q_n, "Jacobian dimension n")
      ->required()->check(CLI::Range(2LL, 1000000LL));
  cmd_quotient->add_option("--r", q_r, "Degree of the covering C -> E")
      ->required()->check(CLI::PositiveNumber);
  cmd_quotient->add_option("--s", q_s, "Order of the cyclic subgroup H of E")
      ->required()->check(CLI::PositiveNumber);
  add_common(cmd_quotient, common);

  auto* cmd_catalog = app.add_subcommand("catalog", "Inspect or build catalog cells");
  CatalogArgs catalog_args;
  cmd_catalog->add_option("--build", catalog_args.build,
                          "Cells 'degree,trace' to enumerate and store");
  cmd_catalog->add_flag("--info", catalog_args.info, "List every complete cell");
  add_common(cmd_catalog, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  const auto started = std::chrono::steady_clock::now();
  bool inconsistent = false;

  try {
    Format format = parse_format(common.format);
    ReportDocument doc;

    const bool uses_catalog = cmd_enumerate->parsed() || cmd_min_trace->parsed() ||
                              cmd_conjecture->parsed() || cmd_smyth->parsed() ||
                              cmd_feasibility->parsed() || cmd_family->parsed() ||
                              cmd_catalog->parsed();
    std::optional<CatalogSession> session;
    if (uses_catalog) {
      session.emplace(resolve_catalog_path(common.catalog_flag));
    }

    if (cmd_enumerate->parsed()) {
      doc = run_enumerate(enum_args, *session, common);
    } else if (cmd_min_trace->parsed()) {
      doc = run_min_trace(mt_degree, *session, common);
    } else if (cmd_conjecture->parsed()) {
      doc = run_conjecture(conj_degree, *session, common);
    } else if (cmd_smyth->parsed()) {
      doc = run_smyth_scan(smyth_degree, ratio_num, ratio_den, *session, common,
                           inconsistent);
    } else if (cmd_feasibility->parsed()) {
      doc = run_feasibility(feas_args, *session, common, inconsistent);
    } else if (cmd_bounds->parsed()) {
      doc = run_bounds(bounds_args);
    } else if (cmd_genus->parsed()) {
      doc = run_genus(genus_args);
    } else if (cmd_family->parsed()) {
      doc = run_family(family_ms, *session, common);
    } else if (cmd_quotient->parsed()) {
      doc = run_quotient_degree(q_n, q_r, q_s);
    } else if (cmd_catalog->parsed()) {
      doc = run_catalog(catalog_args, *session, common);
    }

    check_citations(doc.citations);
    if (session) session->save();

    if (!common.reproducible) {
      doc.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
    }
    emit(doc, format);
    return inconsistent ? kExitInconsistent : kExitOk;
  } catch (const resource_limit_error& e) {
    std::cerr << "error (resource limit): " << e.what() << "\n";
    return kExitResource;
  } catch (const inconsistency_error& e) {
    std::cerr << "error (inconsistency): " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
