#include "tsallis/report.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include "json_io.hpp"
#include "tsallis/instance_gen.hpp"
#include "tsallis/serialization.hpp"
#include "tsallis/version.hpp"

namespace tsallis {
namespace {

using Id = InequalityId;
using json_io::Json;

constexpr std::array<double, 1> kMinusHalf{-0.5};

constexpr std::array kSuites{
    SuiteDef{"KNOWN_BOUNDS_S", Id::kKnownBoundsS, true, VDomain::kNone, {}},
    SuiteDef{"KNOWN_BOUNDS_T", Id::kKnownBoundsT, true, VDomain::kEntropy, {}},
    SuiteDef{"CHORD_T", Id::kChordT, true, VDomain::kEntropy, {}},
    SuiteDef{"CHORD_S", Id::kChordS, true, VDomain::kNone, {}},
    SuiteDef{"XI_PSI_SANDWICH", Id::kXiPsiSandwich, true, VDomain::kNone, {}},
    SuiteDef{"DRAGOMIR_SANDWICH", Id::kDragomirSandwich, true, VDomain::kNone, {}},
    SuiteDef{"TANGENT_BOUNDS", Id::kTangentBounds, true, VDomain::kEntropy, {}},
    SuiteDef{"FURUICHI_36", Id::kFuruichi36, true, VDomain::kPositive, {}},
    SuiteDef{"MONO_13", Id::kMono13, true, VDomain::kPositive, {}},
    SuiteDef{"MONO_REFINED", Id::kMonoRefined, true, VDomain::kPositive, {}},
    SuiteDef{"ANDO_SANDWICH", Id::kAndoSandwich, true, VDomain::kPositive, {}},
    SuiteDef{"COMPLEMENTARY", Id::kComplementary, true, VDomain::kPositive, {}},
    SuiteDef{"COMPLEMENTARY_LIMIT", Id::kComplementaryLimit, true, VDomain::kNone, {}},
    SuiteDef{"EXPV_OPERATOR", Id::kExpvOperator, true, VDomain::kEntropy, {}},
    SuiteDef{"FOUR_CHAIN_POS", Id::kFourChainPos, true, VDomain::kPositive, {}},
    SuiteDef{"RATIO_K", Id::kRatioK, true, VDomain::kPositive, {}},

    SuiteDef{"FOUR_CHAIN_NEG", Id::kFourChainNeg, false, VDomain::kNegative,
             kMinusHalf},
    SuiteDef{"RATIO_K_NEG", Id::kRatioK, false, VDomain::kNegative, {}},
    SuiteDef{"MONO_13_NEG", Id::kMono13, false, VDomain::kNegative, {}},
    SuiteDef{"COMPLEMENTARY_LIMIT_PRINTED", Id::kComplementaryLimitPrinted, false,
             VDomain::kNone, {}},
    SuiteDef{"XI_PSI_REWEIGHTED", Id::kXiPsiReweighted, false, VDomain::kNone, {}},
    SuiteDef{"DRAGOMIR_LOGK", Id::kDragomirLogK, false, VDomain::kNone, {}},
    SuiteDef{"RATIO_K_RECIPROCAL", Id::kRatioKReciprocal, false, VDomain::kPositive,
             {}},
};

bool in_domain(VDomain d, double v) {
  switch (d) {
    case VDomain::kNone: return false;
    case VDomain::kEntropy: return v >= -1.0 && v <= 1.0 && v != 0.0;
    case VDomain::kPositive: return v > 0.0 && v <= 1.0;
    case VDomain::kNegative: return v >= -1.0 && v < 0.0;
  }
  return false;
}

struct TrialResult {
  bool evaluated = false;
  bool holds = false;
  double margin = 0.0;
  double ms = 0.0;
  std::string error;
};

struct CellPlan {
  const SuiteDef* def;
  Index dim;
  std::optional<double> v;
};

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) body(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

double median_of(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

CaseRequest request_for(const CellPlan& plan, const RunConfig& config,
                        std::uint64_t index) {
  return CaseRequest{.id = plan.def->id,
                     .dim = plan.dim,
                     .v = plan.v,
                     .seed = config.seed,
                     .index = index,
                     .quad_nodes = config.quad_nodes,
                     .tol = config.tol};
}

TrialResult run_trial(const CellPlan& plan, const RunConfig& config,
                      std::uint64_t index) {
  TrialResult r;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Verdict verdict = check_case(generate_case(request_for(plan, config, index)));
    r.evaluated = true;
    r.holds = verdict.overall_holds;
    r.margin = verdict.min_normalized_margin;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.ms = std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
             .count();
  return r;
}

std::string fmt(const char* f, double x) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), f, x);
  return buf.data();
}

std::string fmt_opt(const std::optional<double>& x, const char* f = "%.6e") {
  return x ? fmt(f, *x) : std::string("-");
}

// ---- JSON ----

Json opt_json(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

std::optional<double> opt_double(const Json& j, const char* key) {
  const Json& x = json_io::field(j, key);
  if (x.is_null()) return std::nullopt;
  if (!x.is_number()) throw FormatError(std::string("key '") + key + "' must be a number");
  return x.get<double>();
}

Json cell_json(const CellRecord& c) {
  Json cases = Json::array();
  for (const std::string& s : c.failing_cases) cases.push_back(json_io::parse(s));
  return Json{{"suite", c.suite},
              {"id", c.id},
              {"asserted", c.asserted},
              {"dim", c.dim},
              {"v", opt_json(c.v)},
              {"trials", c.trials},
              {"failures", c.failures},
              {"precondition_errors", c.precondition_errors},
              {"min_margin", opt_json(c.min_margin)},
              {"median_margin", opt_json(c.median_margin)},
              {"runtime_ms", c.runtime_ms},
              {"anchor", c.anchor},
              {"failing_indices", c.failing_indices},
              {"failing_cases", std::move(cases)},
              {"first_error", c.first_error ? Json(*c.first_error) : Json(nullptr)}};
}

CellRecord cell_from_json(const Json& j) {
  CellRecord c;
  try {
    c.suite = json_io::field(j, "suite").get<std::string>();
    c.id = json_io::field(j, "id").get<std::string>();
    c.asserted = json_io::field(j, "asserted").get<bool>();
    c.dim = static_cast<Index>(json_io::unsigned_integer(j, "dim"));
    c.v = opt_double(j, "v");
    c.trials = json_io::unsigned_integer(j, "trials");
    c.failures = json_io::unsigned_integer(j, "failures");
    c.precondition_errors = json_io::unsigned_integer(j, "precondition_errors");
    c.min_margin = opt_double(j, "min_margin");
    c.median_margin = opt_double(j, "median_margin");
    c.runtime_ms = json_io::number(j, "runtime_ms");
    c.anchor = json_io::field(j, "anchor").get<std::string>();
    c.failing_indices =
        json_io::field(j, "failing_indices").get<std::vector<std::uint64_t>>();
    for (const Json& k : json_io::field(j, "failing_cases")) c.failing_cases.push_back(k.dump(2));
    const Json& e = json_io::field(j, "first_error");
    if (!e.is_null()) c.first_error = e.get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad cell record: ") + e.what());
  }
  return c;
}

Json config_json(const RunConfig& c) {
  return Json{{"suites", c.suites},
              {"dims", c.dims},
              {"trials", c.trials},
              {"v_grid", c.v_grid},
              {"seed", c.seed},
              {"tol", c.tol},
              {"quad_nodes", c.quad_nodes},
              {"format", std::string(to_string(c.format))},
              {"out", c.out},
              {"persist_per_cell", c.persist_per_cell},
              {"threads", c.threads}};
}

RunConfig config_from_json(const Json& j) {
  RunConfig c;
  try {
    c.suites = json_io::field(j, "suites").get<std::vector<std::string>>();
    c.dims = json_io::field(j, "dims").get<std::vector<Index>>();
    c.trials = json_io::unsigned_integer(j, "trials");
    c.v_grid = json_io::field(j, "v_grid").get<std::vector<double>>();
    c.seed = json_io::unsigned_integer(j, "seed");
    c.tol = json_io::number(j, "tol");
    c.quad_nodes = json_io::field(j, "quad_nodes").get<int>();
    c.format = report_format_from_string(json_io::field(j, "format").get<std::string>());
    c.out = json_io::field(j, "out").get<std::string>();
    c.persist_per_cell = json_io::field(j, "persist_per_cell").get<std::size_t>();
    c.threads = json_io::field(j, "threads").get<unsigned>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad config: ") + e.what());
  } catch (const ConfigError& e) {
    throw FormatError(e.what());
  }
  return c;
}

std::string to_json(const SuiteReport& r) {
  Json cells = Json::array(), findings = Json::array();
  for (const auto& c : r.cells) cells.push_back(cell_json(c));
  for (const auto& c : r.findings) findings.push_back(cell_json(c));
  const ReportSummary& s = r.summary;
  Json j{{"tool_version", r.tool_version},
         {"schema_version", r.schema_version},
         {"config", config_json(r.config)},
         {"cells", std::move(cells)},
         {"findings", std::move(findings)},
         {"summary",
          {{"cells", s.cells},
           {"cases", s.cases},
           {"asserted_failures", s.asserted_failures},
           {"asserted_precondition_errors", s.asserted_precondition_errors},
           {"finding_failures", s.finding_failures},
           {"passed", s.passed}}},
         {"runtime_ms", r.runtime_ms}};
  return j.dump(2) + "\n";
}

// ---- CSV ----

std::string to_csv(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite,id,asserted,dim,v,trials,failures,precondition_errors,"
        "min_margin,median_margin,runtime_ms\n";
  const auto row = [&](const CellRecord& c) {
    const auto num = [](const std::optional<double>& x) {
      return x ? fmt("%.17g", *x) : std::string();
    };
    os << c.suite << ',' << c.id << ',' << (c.asserted ? "true" : "false") << ','
       << c.dim << ',' << num(c.v) << ',' << c.trials << ',' << c.failures << ','
       << c.precondition_errors << ',' << num(c.min_margin) << ','
       << num(c.median_margin) << ',' << fmt("%.3f", c.runtime_ms) << '\n';
  };
  for (const auto& c : r.cells) row(c);
  for (const auto& c : r.findings) row(c);
  return os.str();
}

// ---- text ----

void text_cells(std::ostringstream& os, const std::vector<CellRecord>& cells) {
  std::string current;
  for (const CellRecord& c : cells) {
    if (c.suite != current) {
      current = c.suite;
      os << "\n" << c.suite << "  [" << c.anchor << "]\n";
    }
    char line[256];
    std::snprintf(line, sizeof line, "  dim=%-2lld v=%-5s trials=%-5llu failures=%-5llu precondition=%-4llu min=%-13s median=%s\n",
                  static_cast<long long>(c.dim), fmt_opt(c.v, "%g").c_str(),
                  static_cast<unsigned long long>(c.trials),
                  static_cast<unsigned long long>(c.failures),
                  static_cast<unsigned long long>(c.precondition_errors),
                  fmt_opt(c.min_margin).c_str(), fmt_opt(c.median_margin).c_str());
    os << line;
    if (c.first_error) os << "    first error: " << *c.first_error << "\n";
  }
}

std::string join_numbers(const auto& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream os;
  const RunConfig& c = r.config;
  os << "tsallis-verify " << r.tool_version << " (report schema "
     << r.schema_version << ")\n";
  os << "seed=" << c.seed << " trials=" << c.trials << " tol=" << fmt("%g", c.tol)
     << " quad_nodes=" << c.quad_nodes << " dims=" << join_numbers(c.dims)
     << " v_grid=" << join_numbers(c.v_grid) << "\n";
  os << "\n== asserted suites ==\n";
  text_cells(os, r.cells);
  os << "\n== findings (reported, not asserted) ==\n";
  text_cells(os, r.findings);
  const ReportSummary& s = r.summary;
  os << "\nsummary: " << s.cells << " cells, " << s.cases << " cases, "
     << s.asserted_failures << " asserted failures, "
     << s.asserted_precondition_errors << " precondition errors, "
     << s.finding_failures << " finding failures: "
     << (s.passed ? "PASS" : "FAIL") << "\n";
  return os.str();
}

void zero_runtime(SuiteReport& r) {
  r.runtime_ms = 0.0;
  for (auto& c : r.cells) c.runtime_ms = 0.0;
  for (auto& c : r.findings) c.runtime_ms = 0.0;
}

}  // namespace

std::span<const SuiteDef> all_suites() { return kSuites; }

const SuiteDef& suite(std::string_view name) {
  for (const SuiteDef& s : kSuites)
    if (s.name == name) return s;
  throw ConfigError("unknown suite: " + std::string(name));
}

std::string_view to_string(ReportFormat f) {
  switch (f) {
    case ReportFormat::kJson: return "json";
    case ReportFormat::kCsv: return "csv";
    case ReportFormat::kText: return "text";
  }
  return "text";
}

ReportFormat report_format_from_string(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "text") return ReportFormat::kText;
  throw ConfigError("unknown report format: " + std::string(name));
}

void validate(const RunConfig& config) {
  if (config.suites.empty()) throw ConfigError("no suites selected");
  for (const std::string& s : config.suites)
    if (s != "all") suite(s);
  if (config.dims.empty()) throw ConfigError("no dimensions selected");
  for (Index d : config.dims)
    if (d < 2) throw ConfigError("dimensions must be >= 2");
  if (config.trials < 1) throw ConfigError("trials must be >= 1");
  if (!(config.tol > 0.0)) throw ConfigError("tol must be > 0");
  if (config.quad_nodes < 2) throw ConfigError("quad_nodes must be >= 2");
  for (double v : config.v_grid)
    if (!(v >= -1.0 && v <= 1.0) || v == 0.0)
      throw ConfigError("v_grid entries must lie in [-1, 1] without 0");
}

std::vector<std::string> expand_suites(const RunConfig& config) {
  std::vector<std::string> out;
  const auto add = [&](std::string_view name) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.emplace_back(name);
  };
  for (const std::string& s : config.suites) {
    if (s == "all")
      for (const SuiteDef& d : kSuites) add(d.name);
    else
      add(suite(s).name);
  }
  // Registry order regardless of how they were listed.
  std::vector<std::string> ordered;
  for (const SuiteDef& d : kSuites)
    if (std::find(out.begin(), out.end(), d.name) != out.end())
      ordered.emplace_back(d.name);
  return ordered;
}

std::vector<std::optional<double>> suite_v_values(const SuiteDef& s,
                                                  const RunConfig& config) {
  if (s.domain == VDomain::kNone) return {std::nullopt};
  std::vector<double> vs;
  for (double v : config.v_grid)
    if (in_domain(s.domain, v)) vs.push_back(v);
  for (double v : s.extra_v) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return {vs.begin(), vs.end()};
}

SuiteReport run_suite(const RunConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();

  std::vector<CellPlan> plans;
  for (const std::string& name : expand_suites(config)) {
    const SuiteDef& def = suite(name);
    for (Index dim : config.dims)
      for (const auto& v : suite_v_values(def, config)) plans.push_back({&def, dim, v});
  }

  const std::size_t per_cell = config.trials;
  std::vector<TrialResult> results(plans.size() * per_cell);
  parallel_for(results.size(), config.threads, [&](std::size_t i) {
    results[i] = run_trial(plans[i / per_cell], config, i % per_cell);
  });

  SuiteReport report;
  report.tool_version = kToolVersion;
  report.schema_version = kReportSchemaVersion;
  report.config = config;
  ReportSummary& s = report.summary;
  for (std::size_t p = 0; p < plans.size(); ++p) {
    const CellPlan& plan = plans[p];
    CellRecord cell;
    cell.suite = plan.def->name;
    cell.id = to_string(plan.def->id);
    cell.asserted = plan.def->asserted;
    cell.dim = plan.dim;
    cell.v = plan.v;
    cell.trials = per_cell;
    cell.anchor = info(plan.def->id).anchor;
    std::vector<double> margins;
    for (std::uint64_t i = 0; i < per_cell; ++i) {
      const TrialResult& r = results[p * per_cell + i];
      cell.runtime_ms += r.ms;
      if (!r.evaluated) {
        ++cell.precondition_errors;
        if (!cell.first_error) cell.first_error = r.error;
        continue;
      }
      margins.push_back(r.margin);
      if (r.holds) continue;
      ++cell.failures;
      if (cell.failing_indices.size() < 16) cell.failing_indices.push_back(i);
      if (cell.failing_cases.size() < config.persist_per_cell)
        cell.failing_cases.push_back(
            case_to_json(generate_case(request_for(plan, config, i))));
    }
    if (!margins.empty()) {
      cell.min_margin = *std::min_element(margins.begin(), margins.end());
      cell.median_margin = median_of(std::move(margins));
    }
    ++s.cells;
    s.cases += per_cell;
    if (cell.asserted) {
      s.asserted_failures += cell.failures;
      s.asserted_precondition_errors += cell.precondition_errors;
      report.cells.push_back(std::move(cell));
    } else {
      s.finding_failures += cell.failures;
      report.findings.push_back(std::move(cell));
    }
  }
  s.passed = s.asserted_failures == 0 && s.asserted_precondition_errors == 0;
  report.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

bool same_modulo_runtime(const SuiteReport& a, const SuiteReport& b) {
  SuiteReport x = a, y = b;
  zero_runtime(x);
  zero_runtime(y);
  return x == y;
}

int exit_code(const SuiteReport& report) {
  if (report.summary.asserted_precondition_errors > 0) return 2;
  if (report.summary.asserted_failures > 0) return 1;
  return 0;
}

std::string serialize_report(const SuiteReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: return to_json(report);
    case ReportFormat::kCsv: return to_csv(report);
    case ReportFormat::kText: return to_text(report);
  }
  return to_text(report);
}

SuiteReport report_from_json(std::string_view text) {
  const Json j = json_io::parse(text);
  SuiteReport r;
  try {
    r.tool_version = json_io::field(j, "tool_version").get<std::string>();
    r.schema_version = json_io::field(j, "schema_version").get<int>();
    if (r.schema_version != kReportSchemaVersion)
      throw FormatError("unsupported report schema version");
    r.config = config_from_json(json_io::field(j, "config"));
    for (const Json& c : json_io::field(j, "cells")) r.cells.push_back(cell_from_json(c));
    for (const Json& c : json_io::field(j, "findings"))
      r.findings.push_back(cell_from_json(c));
    const Json& s = json_io::field(j, "summary");
    r.summary.cells = json_io::unsigned_integer(s, "cells");
    r.summary.cases = json_io::unsigned_integer(s, "cases");
    r.summary.asserted_failures = json_io::unsigned_integer(s, "asserted_failures");
    r.summary.asserted_precondition_errors =
        json_io::unsigned_integer(s, "asserted_precondition_errors");
    r.summary.finding_failures = json_io::unsigned_integer(s, "finding_failures");
    r.summary.passed = json_io::field(s, "passed").get<bool>();
    r.runtime_ms = json_io::number(j, "runtime_ms");
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad report: ") + e.what());
  }
  return r;
}

}  // namespace tsallis
