#ifndef ORBIQ_ORBIQ_H
#define ORBIQ_ORBIQ_H

/* C interface to the orbiq quantum cohomology toolkit.
 *
 * Every fallible call returns an orbiq_status.  On failure the message is
 * available from orbiq_last_error() (per thread, valid until the next call).
 * Strings returned through char** are owned by the caller and released with
 * orbiq_string_free().  Report strings are JSON documents of the form
 *   {"results": {...}, "checks": [{"name", "pass", "details"}, ...]}
 */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ORBIQ_API __declspec(dllexport)
#else
#define ORBIQ_API __attribute__((visibility("default")))
#endif

typedef enum orbiq_status {
  ORBIQ_OK = 0,
  ORBIQ_ERR_INVALID_ARGUMENT = 1,
  ORBIQ_ERR_PARSE = 2,
  ORBIQ_ERR_DOMAIN = 3,        /* e.g. a non-Fano curve passed to smallqh */
  ORBIQ_ERR_INCONSISTENT = 4,  /* WDVV system has no solution */
  ORBIQ_ERR_UNDERDETERMINED = 5,
  ORBIQ_ERR_NONLINEAR = 6,     /* linear elimination stalled */
  ORBIQ_ERR_BUDGET = 7,
  ORBIQ_ERR_INTERNAL = 8
} orbiq_status;

typedef struct orbiq_curve orbiq_curve;
typedef struct orbiq_potential orbiq_potential;

ORBIQ_API const char* orbiq_version(void);
ORBIQ_API const char* orbiq_status_name(orbiq_status status);
ORBIQ_API const char* orbiq_last_error(void);
ORBIQ_API void orbiq_string_free(char* s);

/* Curve literal "g=<int>;a=<comma list>". */
ORBIQ_API orbiq_status orbiq_curve_parse(const char* literal, orbiq_curve** out);
ORBIQ_API void orbiq_curve_free(orbiq_curve* curve);
ORBIQ_API orbiq_status orbiq_curve_literal(const orbiq_curve* curve, char** out);
ORBIQ_API orbiq_status orbiq_curve_basis_size(const orbiq_curve* curve, int* out);

/* Potentials in the JSON interchange format. */
ORBIQ_API orbiq_status orbiq_potential_from_json(const char* json, orbiq_potential** out);
ORBIQ_API orbiq_status orbiq_potential_to_json(const orbiq_potential* potential, char** out);
ORBIQ_API void orbiq_potential_free(orbiq_potential* potential);

/* Tear-drop reconstruction; a_max <= 0 selects the default budget. */
ORBIQ_API orbiq_status orbiq_reconstruct(int a, int a_max, orbiq_potential** out);

/* Reports. */
ORBIQ_API orbiq_status orbiq_classify(const orbiq_curve* curve, char** out_json);
ORBIQ_API orbiq_status orbiq_chen_ruan(const orbiq_curve* curve, char** out_json);
ORBIQ_API orbiq_status orbiq_reconstruct_report(int a, int a_max, char** out_json);
ORBIQ_API orbiq_status orbiq_wdvv_check(const orbiq_potential* potential, char** out_json);
ORBIQ_API orbiq_status orbiq_euler_det(const orbiq_curve* curve, const orbiq_potential* potential, char** out_json);
/* q is a rational literal such as "1" or "3/2". */
ORBIQ_API orbiq_status orbiq_smallqh_solve(const orbiq_curve* curve, const char* q, char** out_json);
/* profiles "3|2,1|2,1". */
ORBIQ_API orbiq_status orbiq_hurwitz(int d, const char* profiles, char** out_json);
ORBIQ_API orbiq_status orbiq_pipeline(const orbiq_curve* curve, int a_max, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* ORBIQ_ORBIQ_H */
