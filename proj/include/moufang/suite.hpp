#pragma once

// Seeded verification runs and their reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "moufang/loop_chart.hpp"

namespace moufang {

inline constexpr const char* kVersion = "1.0.0";

enum class DiffMode { Jet, FiniteDifference, Both };
enum class ReportFormat { Json, Table };

const std::vector<std::string>& all_checks();

struct RunConfig {
  std::string loop = "octonion";
  std::vector<std::string> checks = all_checks();
  int samples = 50;
  std::uint64_t seed = 42;
  double radius = kDefaultRadius;
  double tol = 1e-8;
  DiffMode diff = DiffMode::Both;
  ReportFormat format = ReportFormat::Json;
  bool exhaustive_basis = false;
  std::optional<std::string> birep_table;  // path of a sample-table birepresentation

  /// Throws InvalidArgument when a field is out of range.
  void validate() const;

  nlohmann::ordered_json to_json() const;

  /// Fields absent from `doc` keep their defaults; unknown keys are rejected.
  static RunConfig from_json(const nlohmann::json& doc);
};

struct CheckRecord {
  std::string name;
  std::size_t samples = 0;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  double threshold = 0.0;
  bool expected_failure = false;

  /// Pass iff (max_residual <= threshold) XOR expected_failure.
  bool passed() const noexcept;
};

struct Report {
  RunConfig config;
  std::vector<CheckRecord> checks;
  nlohmann::ordered_json observations = nlohmann::ordered_json::object();
  double wall_time_s = 0.0;

  bool passed() const noexcept;

  /// 0 when every record passes, 1 otherwise.
  int exit_code() const noexcept { return passed() ? 0 : 1; }

  const CheckRecord* find(const std::string& name) const;
};

Report run_suite(const RunConfig& config);

/// JSON: one document with stable key order. Table: aligned text, one row per record.
std::string emit_report(const Report& report, ReportFormat format);

/// Same as emit_report with format Json, minus the wall-time field.
std::string emit_report_deterministic(const Report& report);

enum class ExportKind { MulTable, StructureConstants, StructureFunctions };

ExportKind parse_export_kind(const std::string& name);

/// JSON text for the requested table; `at` is the base point for structure functions.
std::string export_data(ExportKind kind, const RunConfig& config, const std::vector<double>& at = {});

}  // namespace moufang
