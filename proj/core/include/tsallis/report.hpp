#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsallis/harness.hpp"

namespace tsallis {

enum class VDomain {
  kNone,      // no v parameter
  kEntropy,   // [-1, 0) U (0, 1]
  kPositive,  // (0, 1]
  kNegative,  // [-1, 0)
};

// A named suite: one inequality id over one v-domain. Findings are evaluated
// and reported but never affect the exit status.
struct SuiteDef {
  std::string_view name;
  InequalityId id;
  bool asserted;
  VDomain domain;
  // Extra v values always run for this suite, on top of the filtered grid.
  std::span<const double> extra_v;
};

std::span<const SuiteDef> all_suites();
const SuiteDef& suite(std::string_view name);

enum class ReportFormat { kJson, kCsv, kText };

std::string_view to_string(ReportFormat f);
ReportFormat report_format_from_string(std::string_view name);

struct RunConfig {
  std::vector<std::string> suites{"all"};
  std::vector<Index> dims{2, 3, 4, 8};
  std::uint64_t trials = 500;
  std::vector<double> v_grid{-1.0, -0.7, -0.3, 0.3, 0.5, 0.7, 1.0};
  std::uint64_t seed = 42;
  double tol = kDefaultTol;
  int quad_nodes = 32;
  ReportFormat format = ReportFormat::kText;
  std::string out;
  // Failing cases kept per cell.
  std::size_t persist_per_cell = 2;
  // 0 picks the hardware concurrency.
  unsigned threads = 0;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Throws ConfigError.
void validate(const RunConfig& config);

// Suite names "all" expands to, in registry order.
std::vector<std::string> expand_suites(const RunConfig& config);

// v values of one suite under a config: the grid filtered by the suite's
// domain plus its extras, ascending. {nullopt} when the suite takes no v.
std::vector<std::optional<double>> suite_v_values(const SuiteDef& s,
                                                  const RunConfig& config);

struct CellRecord {
  std::string suite;
  std::string id;
  bool asserted = true;
  Index dim = 0;
  std::optional<double> v;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::uint64_t precondition_errors = 0;
  // Over evaluated cases, normalized margins (margin / scale).
  std::optional<double> min_margin;
  std::optional<double> median_margin;
  double runtime_ms = 0.0;
  std::string anchor;
  std::vector<std::uint64_t> failing_indices;
  // Case JSON of the first failures, capped by persist_per_cell.
  std::vector<std::string> failing_cases;
  std::optional<std::string> first_error;

  friend bool operator==(const CellRecord&, const CellRecord&) = default;
};

struct ReportSummary {
  std::uint64_t cells = 0;
  std::uint64_t cases = 0;
  std::uint64_t asserted_failures = 0;
  std::uint64_t asserted_precondition_errors = 0;
  std::uint64_t finding_failures = 0;
  bool passed = true;

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct SuiteReport {
  std::string tool_version;
  int schema_version = 0;
  RunConfig config;
  std::vector<CellRecord> cells;     // asserted suites
  std::vector<CellRecord> findings;  // reported-not-asserted suites
  ReportSummary summary;
  double runtime_ms = 0.0;

  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

SuiteReport run_suite(const RunConfig& config);

// Equality ignoring every runtime field.
bool same_modulo_runtime(const SuiteReport& a, const SuiteReport& b);

// 0 when the asserted suites pass, 1 on inequality failures, 2 when an
// asserted suite hit precondition errors.
int exit_code(const SuiteReport& report);

std::string serialize_report(const SuiteReport& report, ReportFormat format);
SuiteReport report_from_json(std::string_view text);

}  // namespace tsallis
