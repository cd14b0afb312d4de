#include "moufang/moufang.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "moufang/birep.hpp"
#include "moufang/loop_chart.hpp"
#include "moufang/malcev.hpp"
#include "moufang/suite.hpp"
#include "moufang/yamaguti.hpp"

struct mf_loop {
  moufang::LoopChart chart;
  moufang::LeftRightBirepresentation birep;
  moufang::GeneratorSet generators;
};

struct mf_report {
  moufang::Report report;
};

namespace {

thread_local std::string g_last_error;

mf_status status_of(moufang::ErrorCode code) {
  using moufang::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return MF_ERR_INVALID_ARGUMENT;
    case ErrorCode::Domain: return MF_ERR_DOMAIN;
    case ErrorCode::ChartDomain: return MF_ERR_CHART_DOMAIN;
    case ErrorCode::NotUnit: return MF_ERR_NOT_UNIT;
    case ErrorCode::SingularMatrix: return MF_ERR_SINGULAR_MATRIX;
    case ErrorCode::ZeroDivisor: return MF_ERR_ZERO_DIVISOR;
    case ErrorCode::LevelMismatch: return MF_ERR_LEVEL_MISMATCH;
    case ErrorCode::Unsupported: return MF_ERR_UNSUPPORTED;
    case ErrorCode::Parse: return MF_ERR_PARSE;
  }
  return MF_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes and the thread's
// last-error message.
template <class F>
mf_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return MF_OK;
  } catch (const moufang::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return MF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MF_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) moufang::fail(moufang::ErrorCode::InvalidArgument, what);
}

moufang::LoopPoint point(const mf_loop* loop, const double* p) {
  require(p != nullptr, "null coordinate array");
  return moufang::LoopPoint(p, p + loop->chart.dim());
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void copy_out(const std::vector<double>& v, double* out) {
  require(out != nullptr, "null output array");
  std::memcpy(out, v.data(), v.size() * sizeof(double));
}

moufang::RunConfig parse_config(const char* config_json) {
  if (config_json == nullptr || *config_json == '\0') return moufang::RunConfig{};
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(config_json);
  } catch (const nlohmann::json::exception& e) {
    moufang::fail(moufang::ErrorCode::Parse, std::string("config: ") + e.what());
  }
  return moufang::RunConfig::from_json(doc);
}

}  // namespace

extern "C" {

const char* mf_version(void) { return moufang::kVersion; }

const char* mf_status_string(mf_status status) {
  switch (status) {
    case MF_OK: return "ok";
    case MF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MF_ERR_DOMAIN: return "domain error";
    case MF_ERR_CHART_DOMAIN: return "outside chart domain";
    case MF_ERR_NOT_UNIT: return "not a unit element";
    case MF_ERR_SINGULAR_MATRIX: return "singular matrix";
    case MF_ERR_ZERO_DIVISOR: return "zero divisor";
    case MF_ERR_LEVEL_MISMATCH: return "level mismatch";
    case MF_ERR_UNSUPPORTED: return "unsupported";
    case MF_ERR_PARSE: return "parse error";
    case MF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* mf_last_error(void) { return g_last_error.c_str(); }

void mf_string_free(char* s) { std::free(s); }

mf_status mf_loop_create(int level, mf_loop** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    *out = nullptr;
    moufang::LoopChart chart(level);
    moufang::LeftRightBirepresentation birep(level);
    auto gen = moufang::generators(birep);
    *out = new mf_loop{chart, birep, std::move(gen)};
  });
}

mf_status mf_loop_create_named(const char* name, mf_loop** out) {
  mf_status status = MF_OK;
  int level = 0;
  status = guarded([&] {
    require(name != nullptr, "null loop name");
    level = moufang::make_loop(name).level();
  });
  if (status != MF_OK) return status;
  return mf_loop_create(level, out);
}

void mf_loop_destroy(mf_loop* loop) { delete loop; }

size_t mf_loop_dim(const mf_loop* loop) { return loop ? loop->chart.dim() : 0; }

size_t mf_loop_matrix_dim(const mf_loop* loop) { return loop ? loop->birep.matrix_dim() : 0; }

mf_status mf_loop_mul(const mf_loop* loop, const double* x, const double* y, double* out) {
  return guarded([&] {
    require(loop != nullptr, "null loop");
    copy_out(loop->chart.mul(point(loop, x), point(loop, y)), out);
  });
}

mf_status mf_loop_inv(const mf_loop* loop, const double* x, double* out) {
  return guarded([&] {
    require(loop != nullptr, "null loop");
    copy_out(loop->chart.inv(point(loop, x)), out);
  });
}

mf_status mf_moufang_residual(const mf_loop* loop, const double* a, const double* g, const double* h,
                              double* residual) {
  return guarded([&] {
    require(loop != nullptr && residual != nullptr, "null argument");
    *residual = loop->chart.moufang_residual(point(loop, a), point(loop, g), point(loop, h)).residual;
  });
}

mf_status mf_structure_constants(const mf_loop* loop, double* out) {
  return guarded([&] {
    require(loop != nullptr, "null loop");
    copy_out(moufang::structure_constants(loop->chart).flat(), out);
  });
}

mf_status mf_structure_functions(const mf_loop* loop, const double* g, double* out) {
  return guarded([&] {
    require(loop != nullptr, "null loop");
    copy_out(moufang::structure_functions(loop->chart, point(loop, g)).tensor.flat(), out);
  });
}

mf_status mf_malcev_residual(const mf_loop* loop, const double* x, const double* y, const double* z,
                             double* residual) {
  return guarded([&] {
    require(loop != nullptr && residual != nullptr, "null argument");
    const auto c = moufang::structure_constants(loop->chart);
    *residual = moufang::malcev_residual(c, point(loop, x), point(loop, y), point(loop, z));
  });
}

mf_status mf_birep_matrices(const mf_loop* loop, const double* g, double* s_out, double* t_out) {
  return guarded([&] {
    require(loop != nullptr, "null loop");
    const auto p = point(loop, g);
    if (s_out) copy_out(loop->birep.s_map(p).flat(), s_out);
    if (t_out) copy_out(loop->birep.t_map(p).flat(), t_out);
  });
}

mf_status mf_birep_residuals(const mf_loop* loop, const double* g, const double* h, double out[3]) {
  return guarded([&] {
    require(loop != nullptr && out != nullptr, "null argument");
    const auto r = moufang::birep_residuals(loop->birep, loop->chart, point(loop, g), point(loop, h));
    out[0] = r.s_axiom;
    out[1] = r.t_axiom;
    out[2] = r.unit;
  });
}

mf_status mf_closure_dimension(const mf_loop* loop, const double* g, double tol, size_t* out) {
  return guarded([&] {
    require(loop != nullptr && out != nullptr, "null argument");
    require(tol > 0.0, "tolerance must be positive");
    const auto p = g ? point(loop, g) : loop->chart.identity();
    const auto ctx = moufang::YamagutiContext::at(loop->birep, loop->chart, loop->generators, p);
    *out = moufang::closure_dimension(ctx, tol);
  });
}

mf_status mf_basis_table_json(int level, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = duplicate(moufang::basis_table(level).to_json());
  });
}

mf_status mf_export_json(const char* kind, const char* config_json, const double* at, size_t at_len, char** out) {
  return guarded([&] {
    require(kind != nullptr && out != nullptr, "null argument");
    const auto config = parse_config(config_json);
    std::vector<double> base;
    if (at != nullptr) base.assign(at, at + at_len);
    *out = duplicate(moufang::export_data(moufang::parse_export_kind(kind), config, base));
  });
}

mf_status mf_run_suite(const char* config_json, mf_report** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    *out = nullptr;
    auto report = moufang::run_suite(parse_config(config_json));
    *out = new mf_report{std::move(report)};
  });
}

void mf_report_destroy(mf_report* report) { delete report; }

int mf_report_exit_code(const mf_report* report) { return report ? report->report.exit_code() : 2; }

size_t mf_report_check_count(const mf_report* report) { return report ? report->report.checks.size() : 0; }

mf_status mf_report_render(const mf_report* report, const char* format, int deterministic, char** out) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    const std::string f = format ? format : "json";
    std::string text;
    if (f == "json") {
      text = deterministic ? moufang::emit_report_deterministic(report->report)
                           : moufang::emit_report(report->report, moufang::ReportFormat::Json);
    } else if (f == "table") {
      text = moufang::emit_report(report->report, moufang::ReportFormat::Table);
    } else {
      moufang::fail(moufang::ErrorCode::InvalidArgument, "format must be json or table");
    }
    *out = duplicate(text);
  });
}

}  // extern "C"
