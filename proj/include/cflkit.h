/* cflkit — exact knot Floer complex arithmetic over F2[U,V] and secondary
 * invariants (tau, tau', nu, V_k, Upsilon, kappa, kappa0) of pairs of
 * deform-spun slice disks.
 *
 * C API: opaque handles plus integer status codes. Every function returns
 * CFL_OK on success; on failure cfl_last_error() carries a thread-local
 * message. Strings and arrays returned through out-parameters are owned by
 * the caller and released with cfl_string_free / cfl_rational_array_free.
 */

#ifndef CFLKIT_H
#define CFLKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cfl_status {
	CFL_OK = 0,
	CFL_E_INVALID_ARGUMENT = 1,
	CFL_E_UNKNOWN_NAME = 2,
	CFL_E_PARSE = 3,
	CFL_E_VALIDATION = 4,
	CFL_E_SHAPE_MISMATCH = 5,
	CFL_E_NON_HOMOGENEOUS = 6,
	CFL_E_SEARCH_CAP_EXCEEDED = 7,
	CFL_E_GENUS_ZERO = 8,
	CFL_E_INFINITE_SLICE = 9,
	CFL_E_NOT_ULTRAMETRIC = 10,
	CFL_E_IO = 11,
	CFL_E_INTERNAL = 12
} cfl_status;

typedef struct cfl_complex cfl_complex; /* a validated knot complex */
typedef struct cfl_pair cfl_pair;       /* a pair of disk elements over one ambient complex */

typedef struct cfl_rational {
	int64_t num;
	int64_t den; /* > 0, lowest terms */
} cfl_rational;

/* --- diagnostics ------------------------------------------------------- */

const char* cfl_status_name(cfl_status s);
/* Message of the most recent failure on this thread; empty string if none. */
const char* cfl_last_error(void);

void cfl_string_free(char* s);
void cfl_rational_array_free(cfl_rational* a);

/* --- complexes --------------------------------------------------------- */

int cfl_builtin_count(void);
const char* cfl_builtin_name(int index);         /* NULL when out of range */
int cfl_builtin_is_knot(int index);              /* 0/1; -1 when out of range */

cfl_status cfl_complex_builtin(const char* name, cfl_complex** out);
/* Parses the complex text format; the result is validated. */
cfl_status cfl_complex_parse(const char* text, cfl_complex** out);
cfl_status cfl_complex_read_file(const char* path, cfl_complex** out);
void cfl_complex_free(cfl_complex* c);

int cfl_complex_generator_count(const cfl_complex* c);
/* Canonical text form; round-trips bit-exactly through cfl_complex_parse. */
cfl_status cfl_complex_serialize(const cfl_complex* c, char** out_text);
/* Runs validation only (parse already validates): "ok" or the report. */
cfl_status cfl_complex_validation_report(const cfl_complex* c, char** out_report);

/* --- disk pairs -------------------------------------------------------- */

/* deform1/deform2: "id", "roll", "roll^l", "swap", "swap_variant". A swap
 * deformation makes the tool work over tensor(knot, knot) internally. */
cfl_status cfl_pair_create(const cfl_complex* knot, const char* deform1, const char* deform2,
                           cfl_pair** out);
void cfl_pair_free(cfl_pair* p);

int cfl_pair_ambient_generator_count(const cfl_pair* p);

/* Search-cap slack for the minimal-power sweeps (default 8 when <= 0);
 * the CLI maps CFLKIT_SEARCH_CAP onto this. */
void cfl_pair_set_cap_slack(cfl_pair* p, int slack);

/* Genus-(dw, dz) stabilization applied to one element of the pair
 * (which = 1 or 2): multiplies by U^dw V^dz and adjusts the genus tag. */
cfl_status cfl_pair_stabilize(cfl_pair* p, int which, int dw, int dz);

cfl_status cfl_pair_tau(const cfl_pair* p, int64_t* out);
/* *out_minus_infinity = 1 when tau' = -infinity (then *out is 0). */
cfl_status cfl_pair_tau_prime(const cfl_pair* p, int64_t* out, int* out_minus_infinity);
cfl_status cfl_pair_nu(const cfl_pair* p, int64_t* out);
cfl_status cfl_pair_v_k(const cfl_pair* p, int k, int64_t* out);
/* Strictly interior t only (0 < t < 2). */
cfl_status cfl_pair_upsilon(const cfl_pair* p, cfl_rational t, cfl_rational* out);
/* Samples t = 1/q .. (2q-1)/q; arrays of length *out_count are allocated for
 * ts and values. Breakpoints (possibly none) are returned likewise. */
cfl_status cfl_pair_upsilon_curve(const cfl_pair* p, int grid_q, cfl_rational** out_ts,
                                  cfl_rational** out_values, size_t* out_count,
                                  cfl_rational** out_breakpoints, size_t* out_breakpoint_count);
cfl_status cfl_pair_kappa0(const cfl_pair* p, int which, int64_t* out);
cfl_status cfl_pair_kappa(const cfl_pair* p, int64_t* out);

/* --- verification ------------------------------------------------------ */

/* Runs the structural suites; scope is "all" or a builtin name. The report
 * is a JSON object {"scope":..., "checks":[{"name","pass","detail"}...],
 * "passed":N, "failed":M}; *out_ok is 1 when every check passed. */
cfl_status cfl_verify(const char* scope, int slack, char** out_report_json, int* out_ok);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CFLKIT_H */
