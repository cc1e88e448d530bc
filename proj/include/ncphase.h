/* ncphase: exact symbolic engine for noncommutative Minkowski spaces.
 *
 * C interface over opaque handles.  All returned strings are heap
 * allocations owned by the caller; release them with ncps_string_free.
 * Functions that can fail return NULL (pointer results) or a negative
 * status and, when an `err` out-parameter is given, store a message there.
 */
#ifndef NCPHASE_H
#define NCPHASE_H

#if defined(_WIN32)
#define NCPS_API __declspec(dllexport)
#else
#define NCPS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ncps_model ncps_model;

typedef enum {
    NCPS_OK = 0,
    NCPS_CHECK_FAILED = 1, /* an identity check reported residuals */
    NCPS_ERR_USAGE = 2,    /* malformed input or unsupported request */
    NCPS_ERR_DOMAIN = 3    /* mathematically invalid input (Jacobi, ...) */
} ncps_status;

/* Model handle from a structure-constant JSON document:
 *   {"n": int, "signature": [+-1,...], "C": [[mu,nu,lambda,"num/den"],...]}
 * (mu < nu entries only; antisymmetric completion is automatic). */
NCPS_API ncps_model* ncps_model_from_json(const char* json_text, char** err);

/* Named models:
 *   "kappa"     params {"a": ["1","0",...]}
 *   "tensorial" params {"n": 2}
 *   "theta"     params {"theta": [["0","1"],["-1","0"]]}
 *   "snyder"    params {"n": 2}
 *   "dilation"  params {"a": [["0","1"],["-1","0"]]}
 */
NCPS_API ncps_model* ncps_model_by_name(const char* name, const char* params_json, char** err);

NCPS_API void ncps_model_free(ncps_model* model);

/* Names of the built-in models, one per line. */
NCPS_API char* ncps_model_list(void);

/* Structure-constant JSON for Lie-type models (round-trips through
 * ncps_model_from_json); NULL for non-Lie models. */
NCPS_API char* ncps_model_to_json(const ncps_model* model, char** err);

/* NCPS_OK when the Jacobi identity holds; NCPS_CHECK_FAILED with a report
 * listing violations otherwise. */
NCPS_API int ncps_jacobi_check(const ncps_model* model, char** report);

/* Jacobi check on a raw structure-constant document (the tensor is NOT
 * required to be valid, unlike ncps_model_from_json, so violations are
 * reported rather than rejected). */
NCPS_API int ncps_jacobi_check_json(const char* json_text, char** report);

/* Weyl (or model) realization, one line per coordinate, canonical text. */
NCPS_API char* ncps_realization_text(const ncps_model* model, int order, char** err);

/* Deformed momentum addition D(k,q); method is "ode", "diffop" or
 * "oracle" (NULL selects the model's natural solver). */
NCPS_API char* ncps_dfunc_text(const ncps_model* model, int order, const char* method,
                      char** err);

/* Coproduct of momenta over the {pL, pR} rendering. */
NCPS_API char* ncps_coproduct_text(const ncps_model* model, int order, char** err);

/* Star product of two coordinate monomials given by exponent vectors. */
NCPS_API char* ncps_star_text(const ncps_model* model, int order, const int* f_expo,
                     int f_len, const int* g_expo, int g_len, char** err);

/* Second-order ln F check; NCPS_OK when the expansion matches. */
NCPS_API int ncps_twist_check(const ncps_model* model, char** report);

/* Snyder symmetric-ordering report: phi1 series, first-order realization,
 * K = k and the non-associativity witness. */
NCPS_API char* ncps_snyder_report(int dimension, int order, char** err);

/* q-deformed multinomial coefficient for the given exponents. */
NCPS_API char* ncps_qmultinomial_text(const int* exponents, int count, char** err);

/* Full golden-identity suite for the model; NCPS_OK when every line is
 * PASS.  The report always carries one line per identity. */
NCPS_API int ncps_verify_model(const ncps_model* model, int order, char** report);

NCPS_API void ncps_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* NCPHASE_H */
