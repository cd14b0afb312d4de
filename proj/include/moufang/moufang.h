/*
 * moufang-lab C API.
 *
 * Opaque handles and status codes over the C++ core. Every function returns
 * MF_OK on success; on failure the status names the error class and
 * mf_last_error() holds a message for the calling thread. Strings returned
 * through `char**` are owned by the caller and released with mf_string_free.
 *
 * Coordinates are plain double arrays of the loop dimension r (1, 3 or 7);
 * matrices are row-major; structure tensors are r*r*r arrays indexed
 * [(i*r + j)*r + k] for c^{i+1}_{j+1,k+1}.
 */
#ifndef MOUFANG_H
#define MOUFANG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MOUFANG_BUILDING_LIBRARY)
#    define MF_API __declspec(dllexport)
#  else
#    define MF_API __declspec(dllimport)
#  endif
#else
#  define MF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mf_status {
  MF_OK = 0,
  MF_ERR_INVALID_ARGUMENT = 1,
  MF_ERR_DOMAIN = 2,
  MF_ERR_CHART_DOMAIN = 3,
  MF_ERR_NOT_UNIT = 4,
  MF_ERR_SINGULAR_MATRIX = 5,
  MF_ERR_ZERO_DIVISOR = 6,
  MF_ERR_LEVEL_MISMATCH = 7,
  MF_ERR_UNSUPPORTED = 8,
  MF_ERR_PARSE = 9,
  MF_ERR_INTERNAL = 10
} mf_status;

typedef struct mf_loop mf_loop;
typedef struct mf_report mf_report;

MF_API const char* mf_version(void);
MF_API const char* mf_status_string(mf_status status);
MF_API const char* mf_last_error(void);
MF_API void mf_string_free(char* s);

/* Loops: level 1 circle, 2 unit quaternions, 3 unit octonions. */
MF_API mf_status mf_loop_create(int level, mf_loop** out);
MF_API mf_status mf_loop_create_named(const char* name, mf_loop** out);
MF_API void mf_loop_destroy(mf_loop* loop);
MF_API size_t mf_loop_dim(const mf_loop* loop);
MF_API size_t mf_loop_matrix_dim(const mf_loop* loop);

MF_API mf_status mf_loop_mul(const mf_loop* loop, const double* x, const double* y, double* out);
MF_API mf_status mf_loop_inv(const mf_loop* loop, const double* x, double* out);
MF_API mf_status mf_moufang_residual(const mf_loop* loop, const double* a, const double* g, const double* h,
                                     double* residual);

/* Tangent algebra. `out` holds r*r*r doubles. */
MF_API mf_status mf_structure_constants(const mf_loop* loop, double* out);
MF_API mf_status mf_structure_functions(const mf_loop* loop, const double* g, double* out);
MF_API mf_status mf_malcev_residual(const mf_loop* loop, const double* x, const double* y, const double* z,
                                    double* residual);

/* Canonical left/right birepresentation. Matrices hold n*n doubles, n = 2^level. */
MF_API mf_status mf_birep_matrices(const mf_loop* loop, const double* g, double* s_out, double* t_out);
MF_API mf_status mf_birep_residuals(const mf_loop* loop, const double* g, const double* h,
                                    double out[3]);

/* Closure dimension of the commutation relations at g (NULL for the identity). */
MF_API mf_status mf_closure_dimension(const mf_loop* loop, const double* g, double tol, size_t* out);

/* JSON exports: kind is "mul-table", "structure-constants" or "structure-functions". */
MF_API mf_status mf_basis_table_json(int level, char** out);
MF_API mf_status mf_export_json(const char* kind, const char* config_json, const double* at, size_t at_len,
                                char** out);

/* Verification runs. config_json mirrors the run configuration; NULL or "{}" selects defaults. */
MF_API mf_status mf_run_suite(const char* config_json, mf_report** out);
MF_API void mf_report_destroy(mf_report* report);
MF_API int mf_report_exit_code(const mf_report* report);
MF_API size_t mf_report_check_count(const mf_report* report);
/* format: "json" or "table"; deterministic != 0 drops the wall-time field (json only). */
MF_API mf_status mf_report_render(const mf_report* report, const char* format, int deterministic, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MOUFANG_H */
