#ifndef SINECERT_H
#define SINECERT_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ScStatus {
  SC_STATUS_OK = 0,
  SC_STATUS_NULL_POINTER = 1,
  SC_STATUS_INVALID_ARGUMENT = 2,
  SC_STATUS_PARSE = 3,
  SC_STATUS_EXACT_REQUIRED = 4,
  SC_STATUS_OUT_OF_DOMAIN = 5,
  SC_STATUS_NOT_A_VIOLATION = 6,
  SC_STATUS_INTERNAL = 7,
} ScStatus;

typedef enum ScVerdict {
  SC_VERDICT_EXACT_NONNEG = 0,
  SC_VERDICT_NUMERIC_EVIDENCE = 1,
  SC_VERDICT_VIOLATION = 2,
} ScVerdict;

typedef enum ScMode {
  SC_MODE_AUTO = 0,
  SC_MODE_EXACT = 1,
  SC_MODE_NUMERIC = 2,
} ScMode;

typedef struct ScCertificate ScCertificate;

typedef struct ScReport ScReport;

typedef struct ScSinePoly ScSinePoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into the library on the same thread.
 */
const char *sc_last_error_message(void);

/**
 * Parses comma-separated exact coefficients `a_1,a_2,...` (`p/q` or integers).
 *
 * # Safety
 * `coeffs` must be a nul-terminated string and `out` a valid pointer.
 */
enum ScStatus sc_sine_poly_parse(const char *coeffs, struct ScSinePoly **out);

/**
 * Floating-point coefficients; such polynomials are certified numerically.
 *
 * # Safety
 * `coeffs` must point to `len` doubles and `out` must be valid.
 */
enum ScStatus sc_sine_poly_from_f64(const double *coeffs, size_t len, struct ScSinePoly **out);

/**
 * Number of coefficients.
 *
 * # Safety
 * `poly` must be a live handle or null.
 */
size_t sc_sine_poly_len(const struct ScSinePoly *poly);

/**
 * # Safety
 * `poly` must be a live handle and `out` valid.
 */
enum ScStatus sc_sine_poly_eval(const struct ScSinePoly *poly, double x, double *out);

/**
 * # Safety
 * `poly` must come from this library and not be used afterwards.
 */
void sc_sine_poly_free(struct ScSinePoly *poly);

/**
 * Certifies nonnegativity on `[0, pi]`: Sturm for exact coefficients,
 * sampled minimum for floating ones.
 *
 * # Safety
 * `poly` must be a live handle and `out` valid.
 */
enum ScStatus sc_certify(const struct ScSinePoly *poly, struct ScCertificate **out);

/**
 * # Safety
 * `cert` must be a live handle and `out` valid.
 */
enum ScStatus sc_certificate_verdict(const struct ScCertificate *cert, enum ScVerdict *out);

/**
 * Point and value of a violation; `NotAViolation` otherwise.
 *
 * # Safety
 * `cert` must be a live handle; `x` and `value` valid.
 */
enum ScStatus sc_certificate_witness(const struct ScCertificate *cert, double *x, double *value);

/**
 * JSON form of the certificate. Release with [`sc_string_free`].
 *
 * # Safety
 * `cert` must be a live handle or null.
 */
char *sc_certificate_to_json(const struct ScCertificate *cert);

/**
 * # Safety
 * `cert` must come from this library and not be used afterwards.
 */
void sc_certificate_free(struct ScCertificate *cert);

/**
 * Certifies partial sums `1..=n` of a named family, e.g. `gamma`,
 * `phi1:3913/5000`, `power_phi:0.25`.
 *
 * # Safety
 * `family` must be a nul-terminated string and `out` valid.
 */
enum ScStatus sc_certify_family(const char *family,
                                size_t n,
                                enum ScMode mode,
                                struct ScReport **out);

/**
 * Number of entries (partial sums) in the report.
 *
 * # Safety
 * `report` must be a live handle or null.
 */
size_t sc_report_len(const struct ScReport *report);

/**
 * First failing `n`, or 0 when every partial sum passes.
 *
 * # Safety
 * `report` must be a live handle and `out` valid.
 */
enum ScStatus sc_report_first_violation(const struct ScReport *report, size_t *out);

/**
 * JSON form of the report. Release with [`sc_string_free`].
 *
 * # Safety
 * `report` must be a live handle or null.
 */
char *sc_report_to_json(const struct ScReport *report);

/**
 * # Safety
 * `report` must come from this library and not be used afterwards.
 */
void sc_report_free(struct ScReport *report);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void sc_string_free(char *s);

/**
 * The critical constant alpha, second largest real root of its quartic.
 */
double sc_alpha(void);

/**
 * First positive zero of `sin z - z cos z`.
 */
double sc_sigma(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SINECERT_H */
