/* g2forge public C API.
 *
 * A small, stable surface over the computation core: parse or select an
 * instance, run a computation, the verification suite, a parameter scan or
 * a flow integration. All results come back as JSON or CSV text owned by the
 * library; release them with g2f_string_free.
 *
 * Thread safety: instances are immutable after creation and may be shared
 * across threads; the error message is thread-local.
 */
#ifndef G2FORGE_H
#define G2FORGE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum g2f_status {
  G2F_OK = 0,
  G2F_VERIFY_FAILED = 1,  /* verification ran, at least one check failed */
  G2F_BAD_INPUT = 2,      /* malformed config, unknown name, bad arguments */
  G2F_CONSTRAINT = 3,     /* domain constraint violated (invalid family, ...) */
  G2F_INTERNAL = 4
} g2f_status;

typedef struct g2f_instance g2f_instance;

typedef struct g2f_options {
  double tol;         /* residual/acceptance tolerance (default 1e-9, or
                         the G2FORGE_TOL environment override) */
  uint64_t seed;      /* seed for randomized checks and scans */
  int float_mode;     /* nonzero: force binary64 arithmetic on exact inputs */
  int threads;        /* worker threads for sweeps; 0 = hardware default */
} g2f_options;

/* Fills in defaults, honouring the G2FORGE_TOL environment variable. */
void g2f_options_init(g2f_options* opts);

/* Instance from a JSON config. Shapes:
 *   {"kind":"family","A1":[[...]],"A":[[...]],"B":[[...]],"C":[[...]]}
 *   {"kind":"structure-constants","c":[[i,j,k,value],...]}
 *   {"kind":"builtin","name":"gs","param":"1/4"}
 * Values are numbers or exact "p/q" strings. */
g2f_status g2f_instance_parse(const char* config_json, g2f_instance** out);

/* Builtin instance: name is "gs", "sa" or "fr", optionally "gs:1/4";
 * param may be NULL or an exact "p/q" / decimal string. */
g2f_status g2f_instance_builtin(const char* name, const char* param, g2f_instance** out);

void g2f_instance_free(g2f_instance* inst);

/* One computation; `what` is torsion | laplacian | ricci | erp | eigenform |
 * soliton | ricci-soliton. JSON result in *json_out on success. */
g2f_status g2f_compute(const g2f_instance* inst, const char* what,
                       const g2f_options* opts, char** json_out);

/* Full verification suite. `only` (may be NULL) restricts to one named
 * check. Returns G2F_OK when every check passes, G2F_VERIFY_FAILED
 * otherwise; both report strings are always produced. tol_override < 0
 * keeps the built-in thresholds. */
g2f_status g2f_verify_suite(const g2f_options* opts, const char* only,
                            double tol_override, char** json_report, char** table_out);

/* Parameter sweep over a builtin family ("gs" or "sa"); bounds and step are
 * exact strings ("0", "3", "1/100" or decimals). CSV in *csv_out. */
g2f_status g2f_scan(const char* family, const char* lo, const char* hi, const char* step,
                    const g2f_options* opts, char** csv_out);

/* Flow integration from the instance's structure. Trajectory CSV plus a
 * JSON summary (termination reason, last time, blow-up time if seen). */
g2f_status g2f_flow(const g2f_instance* inst, double t_end, double dt, int adaptive,
                    const g2f_options* opts, char** csv_out, char** summary_json);

/* Message for the last failing call on this thread. */
const char* g2f_last_error(void);

void g2f_string_free(char* s);

const char* g2f_version(void);

#ifdef __cplusplus
}
#endif

#endif /* G2FORGE_H */
