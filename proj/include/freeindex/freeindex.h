/* freeindex — numerical index of 2-dimensional Lipschitz-free spaces.
 *
 * C API of the shared library. All objects are opaque handles; every
 * function returns an fi_status, with FI_OK meaning success. Result
 * documents (JSON, CSV, SVG) are returned as NUL-terminated UTF-8 strings
 * owned by the caller; release them with fi_string_destroy. On failure,
 * fi_last_error() returns a human-readable detail message for the most
 * recent failing call on the current thread.
 */
#ifndef FREEINDEX_H
#define FREEINDEX_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fi_status {
    FI_OK = 0,
    FI_ERROR_INVALID_ARGUMENT = 1,
    FI_ERROR_PARSE = 2,
    FI_ERROR_NONPOSITIVE_DISTANCE = 3,
    FI_ERROR_TRIANGLE_INEQUALITY = 4,
    FI_ERROR_ALIGNED_METRIC = 5,
    FI_ERROR_WRONG_REGIME = 6,
    FI_ERROR_ALPHA_OUT_OF_RANGE = 7,
    FI_ERROR_IO = 8,
    FI_ERROR_INTERNAL = 9
} fi_status;

/* Stable name of a status value, e.g. "TriangleInequalityViolated". */
const char* fi_status_name(fi_status status);

/* Detail message of the most recent failure on this thread. Valid until the
 * next freeindex call on the same thread. Never NULL. */
const char* fi_last_error(void);

void fi_string_destroy(char* s);

/* ------------------------------------------------------------------ */
/* Metric handles                                                      */

typedef struct fi_metric fi_metric;

/* Each distance is a decimal string ("1.5"), an integer ("4") or a rational
 * ("3/2"). If every distance is an integer or rational the metric computes
 * in exact rational arithmetic; any decimal switches it to float mode unless
 * force_exact is nonzero, which parses decimals exactly. */
fi_status fi_metric_parse(const char* d_xy, const char* d_xz, const char* d_yz,
                          int force_exact, fi_metric** out);

/* Parses {"distances": {"xy": ..., "xz": ..., "yz": ...}, "labels": [...]?}.
 * Distance values may be strings as above or JSON numbers. */
fi_status fi_metric_parse_json(const char* json_utf8, int force_exact, fi_metric** out);

void fi_metric_destroy(fi_metric* m);

/* 1 when the metric computes in exact rational arithmetic. */
int fi_metric_is_exact(const fi_metric* m);

/* ------------------------------------------------------------------ */
/* Oracle options                                                      */

typedef struct fi_oracle_options {
    uint32_t restarts;             /* default 200 */
    double init_step;              /* default 0.25 */
    double step_tolerance;         /* default 1e-7 */
    uint32_t max_iters_per_restart;/* default 5000 */
    uint64_t rng_seed;             /* default 0 */
    int seed_with_witness;         /* default 0 */
    double tolerance;              /* verify: max allowed gap, default 5e-3 */
} fi_oracle_options;

void fi_oracle_options_init(fi_oracle_options* opts);

/* ------------------------------------------------------------------ */
/* Operations                                                          */

/* Closed-form numerical index with witness operator and certification,
 * as a JSON report. Exact-mode metrics print scalars as rationals. */
fi_status fi_index_report(const fi_metric* m, char** json_out);

/* Closed-form index vs. derivative-free search. pass_out (optional) gets 1
 * when gap = oracle_min - formula lies in [-1e-9, opts->tolerance].
 * opts may be NULL for defaults. */
fi_status fi_verify(const fi_metric* m, const fi_oracle_options* opts,
                    char** json_out, int* pass_out);

/* Builds the triangle whose index is exactly alpha (a decimal or rational
 * string in [1/2, 1]) and re-computes its index. */
fi_status fi_design(const char* alpha, char** json_out);

/* n random triangles cycling through modes (comma-separated subset of
 * "uniform_scalene,isosceles,near_aligned,near_equilateral"; NULL or empty
 * means all four), each compared against the oracle; returns CSV with header
 * d_xy,d_xz,d_yz,formula_index,oracle_min,gap,regime,seed. */
fi_status fi_sweep(uint32_t n, const char* modes, const fi_oracle_options* opts,
                   char** csv_out);

/* SVG drawing of the unit ball (hexagon of molecules, faces labeled). When
 * operator_json is non-NULL it must hold {"matrix": [[t11,t12],[t21,t22]]}
 * (entries as strings or numbers) or a full index report with a witness;
 * the image polygon T(B) is then overlaid and the attaining vertex-face
 * pair marked. */
fi_status fi_ball_svg(const fi_metric* m, const char* operator_json, char** svg_out);

#ifdef __cplusplus
}
#endif

#endif /* FREEINDEX_H */
