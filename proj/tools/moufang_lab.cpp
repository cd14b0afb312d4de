// moufang-lab: verification suites and data export for the Cayley-Dickson unit loops.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "moufang/moufang.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 2;

struct VerifyOptions {
  std::optional<std::string> config_file;
  std::optional<std::string> loop;
  std::optional<std::string> checks;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> radius;
  std::optional<double> tol;
  std::optional<std::string> diff;
  std::optional<std::string> format;
  bool exhaustive_basis = false;
  std::optional<std::string> birep_table;
  std::optional<std::string> out;
};

struct ExportOptions {
  std::string kind;
  std::optional<std::string> config_file;
  std::string loop = "octonion";
  std::optional<std::string> at;
  std::optional<std::string> out;
};

struct TableOptions {
  int level = 3;
  std::optional<std::string> out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("'" + path + "': " + e.what());
  }
}

void write_output(const std::string& text, const std::optional<std::string>& path) {
  if (!path) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(*path);
  if (!out) throw UsageError("cannot write '" + *path + "'");
  out << text;
}

// Renders an owned C string and releases it.
std::string take(char* s) {
  std::string text = s ? s : "";
  mf_string_free(s);
  return text;
}

int report_error(mf_status status) {
  std::cerr << "moufang-lab: " << mf_status_string(status) << ": " << mf_last_error() << "\n";
  return kExitUsage;
}

nlohmann::json verify_config(const VerifyOptions& o) {
  nlohmann::json cfg = o.config_file ? read_json_file(*o.config_file) : nlohmann::json::object();
  if (!cfg.is_object()) throw UsageError("config file must hold a JSON object");
  if (o.loop) cfg["loop"] = *o.loop;
  if (o.checks) cfg["checks"] = split(*o.checks, ',');
  if (o.samples) cfg["samples"] = *o.samples;
  if (o.seed) cfg["seed"] = *o.seed;
  if (o.radius) cfg["radius"] = *o.radius;
  if (o.tol) cfg["tol"] = *o.tol;
  if (o.diff) cfg["diff"] = *o.diff;
  if (o.format) cfg["format"] = *o.format;
  if (o.exhaustive_basis) cfg["exhaustive_basis"] = true;
  if (o.birep_table) cfg["birep_table"] = *o.birep_table;
  return cfg;
}

int run_verify(const VerifyOptions& o) {
  const auto cfg = verify_config(o);
  const std::string format = cfg.value("format", std::string("json"));
  mf_report* report = nullptr;
  if (auto st = mf_run_suite(cfg.dump().c_str(), &report); st != MF_OK) return report_error(st);
  char* text = nullptr;
  const auto st = mf_report_render(report, format.c_str(), 0, &text);
  const int code = mf_report_exit_code(report);
  mf_report_destroy(report);
  if (st != MF_OK) return report_error(st);
  write_output(take(text), o.out);
  return code;
}

int run_export(const ExportOptions& o) {
  nlohmann::json cfg = o.config_file ? read_json_file(*o.config_file) : nlohmann::json::object();
  if (!cfg.is_object()) throw UsageError("config file must hold a JSON object");
  if (!o.config_file || !cfg.contains("loop")) cfg["loop"] = o.loop;
  std::vector<double> at;
  if (o.at) {
    for (const auto& item : split(*o.at, ',')) {
      try {
        std::size_t used = 0;
        at.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw UsageError("--at: '" + item + "' is not a number");
      }
    }
  }
  char* text = nullptr;
  const auto st = mf_export_json(o.kind.c_str(), cfg.dump().c_str(), o.at ? at.data() : nullptr, at.size(), &text);
  if (st != MF_OK) return report_error(st);
  write_output(take(text), o.out);
  return kExitPass;
}

int run_table(const TableOptions& o) {
  char* text = nullptr;
  if (auto st = mf_basis_table_json(o.level, &text); st != MF_OK) return report_error(st);
  write_output(take(text), o.out);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for analytic Moufang loops on Cayley-Dickson unit spheres"};
  app.set_version_flag("--version", std::string(mf_version()));
  app.require_subcommand(1);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run verification suites and emit a report");
  verify->add_option("--config", vo.config_file, "JSON run configuration; flags override its fields");
  verify->add_option("--loop", vo.loop, "circle, quaternion or octonion");
  verify->add_option("--checks", vo.checks, "Comma-separated check families");
  verify->add_option("--samples", vo.samples, "Samples per check");
  verify->add_option("--seed", vo.seed, "RNG seed");
  verify->add_option("--radius", vo.radius, "Sampling radius in chart coordinates");
  verify->add_option("--tol", vo.tol, "Tolerance for derivative-level checks");
  verify->add_option("--diff", vo.diff, "jet, fd or both");
  verify->add_option("--format", vo.format, "json or table");
  verify->add_flag("--exhaustive-basis", vo.exhaustive_basis, "Enumerate basis tuples in the Yamaguti checks");
  verify->add_option("--birep-table", vo.birep_table, "JSON sample table of an external birepresentation");
  verify->add_option("-o,--out", vo.out, "Write the report to a file");

  ExportOptions eo;
  auto* exp = app.add_subcommand("export", "Export tables as JSON");
  exp->add_option("kind", eo.kind, "mul-table, structure-constants or structure-functions")->required();
  exp->add_option("--config", eo.config_file, "JSON run configuration");
  exp->add_option("--loop", eo.loop, "circle, quaternion or octonion");
  exp->add_option("--at", eo.at, "Base point g1,g2,... for structure-functions");
  exp->add_option("-o,--out", eo.out, "Write to a file");

  TableOptions to;
  auto* table = app.add_subcommand("table", "Cayley-Dickson basis multiplication table");
  table->add_option("--level", to.level, "Doubling level 1..4")->check(CLI::Range(1, 4));
  table->add_option("-o,--out", to.out, "Write to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) return run_verify(vo);
    if (*exp) return run_export(eo);
    if (*table) return run_table(to);
  } catch (const UsageError& e) {
    std::cerr << "moufang-lab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "moufang-lab: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
