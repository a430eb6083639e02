#ifndef HUYGENS_H
#define HUYGENS_H

/*
 * C interface to the heat-kernel library: build coefficient tables for the
 * singular rational potentials defined by an integer sequence with phases,
 * evaluate the potential / coefficients / finite heat kernel / shared
 * eigenfunction at points, and run the verification suites.
 *
 * Conventions:
 *  - Every fallible call returns hk_status; HK_OK means success.
 *  - On failure, hk_last_error() returns a thread-local message describing
 *    the most recent error on the calling thread.
 *  - Strings returned through char** are heap-allocated; release them with
 *    hk_string_free. Handles are released with their matching _free call.
 *  - Handles are immutable after creation and may be shared across threads.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hk_status {
    HK_OK = 0,
    HK_ERROR_PARSE = 1,      /* malformed JSON or canonical text */
    HK_ERROR_INVALID = 2,    /* argument violates its contract */
    HK_ERROR_DEGENERATE = 3, /* mathematically degenerate sequence data */
    HK_ERROR_SINGULAR = 4,   /* evaluation at or too close to a singular point */
    HK_ERROR_INTERNAL = 5    /* unexpected failure; see hk_last_error */
} hk_status;

/* Sequence data (integer list plus unit-circle phases). */
typedef struct hk_kdata hk_kdata;
/* Coefficient table for one operator, the basis of all evaluations. */
typedef struct hk_table hk_table;

const char* hk_version(void);

/* Message for the most recent failure on this thread ("" if none). */
const char* hk_last_error(void);

void hk_string_free(char* text);

/*
 * Sequence data from/to JSON:
 *   {"k":[0,1,3], "phases":[{"cos":"1","sin":"0"}, ...], "mode":"exact"}
 * Floating mode adds "precision" (bits) and phases may instead be given as
 * {"angle_radians": <number>}. Omitted phases default to (1, 0).
 */
hk_status hk_kdata_from_json(const char* json_text, hk_kdata** out);
hk_status hk_kdata_to_json(const hk_kdata* data, char** out_json);
void hk_kdata_free(hk_kdata* data);

/*
 * Builds the coefficient table (heat-kernel coefficients in closed form).
 * Degenerate sequence data yields HK_ERROR_DEGENERATE.
 */
hk_status hk_table_build(const hk_kdata* data, hk_table** out);
hk_status hk_table_to_json(const hk_table* table, char** out_json);
/* Largest order with a nonzero coefficient (the top sequence entry). */
long hk_table_max_order(const hk_table* table);
void hk_table_free(hk_table* table);

/*
 * Point evaluations. `guard` is the relative denominator threshold below
 * which a point counts as singular; pass 0 for the default (1e-10).
 * Points on (or too near) singular rays yield HK_ERROR_SINGULAR, as does
 * the origin for coefficient/kernel/eigenfunction evaluation.
 */
hk_status hk_potential_eval(const hk_table* table, double x1, double x2,
                            double guard, double* out);
hk_status hk_u_eval(const hk_table* table, const double x[2], const double xi[2],
                    long order, double guard, double* out);
/* Finite heat kernel at time t > 0 (t <= 0 is HK_ERROR_INVALID). */
hk_status hk_heat_eval(const hk_table* table, const double x[2], const double xi[2],
                       double t, double guard, double* out);
hk_status hk_ba_eval(const hk_table* table, const double x[2], const double xi[2],
                     double guard, double* out);

/*
 * Verification options. Zero-valued fields select the defaults listed in
 * the comments (seed 0 therefore runs with seed 1).
 */
typedef struct hk_verify_options {
    long darboux_next; /* sequence entry to extend by; 0: one past the top */
    long oracle_order; /* recursion depth of the numeric oracle; 0: 2, max 3 */
    int oracle_rays;   /* sample rays for oracle agreement; 0: 20 */
    int heat_count;    /* samples for the heat-equation residual; 0: 20 */
    int probe_count;   /* points for the eigenfunction probe; 0: 10 */
    unsigned seed;     /* sample-generator seed; 0: 1 */
} hk_verify_options;

/*
 * Runs one verification suite. Known names: unity, eigen, darboux, cramer,
 * vanishing, transport, transport-oracle, goursat, series, heat, ba-probe,
 * all. Emits one JSON object per check, newline separated, in out_json_lines
 * and stores the number of failed checks in out_fail_count. Returns HK_OK
 * when the suite ran, whether or not checks passed; an unknown suite name is
 * HK_ERROR_INVALID. `options` may be NULL for all defaults.
 */
hk_status hk_verify_run(const hk_kdata* data, const char* suite,
                        const hk_verify_options* options, char** out_json_lines,
                        int* out_fail_count);

#ifdef __cplusplus
}
#endif

#endif /* HUYGENS_H */
