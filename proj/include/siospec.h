/*
 * siospec — Fredholm analysis of singular integral operators with piecewise
 * continuous coefficients on variable-exponent spaces over weighted curves.
 *
 * C API over the shared library: opaque analysis handles created from a JSON
 * configuration document, status codes, and string outputs (JSON reports,
 * CSV point clouds, SVG plots) owned by the library.
 */
#ifndef SIOSPEC_H
#define SIOSPEC_H

#ifdef __cplusplus
extern "C" {
#endif

#define SIOSPEC_OK 0
#define SIOSPEC_ERR_INVALID_ARGUMENT 1
#define SIOSPEC_ERR_CONFIG 2           /* malformed configuration document */
#define SIOSPEC_ERR_PRECONDITION 3     /* mathematical hypotheses unmet */
#define SIOSPEC_ERR_UNSUPPORTED 4
#define SIOSPEC_ERR_NUMERIC 5
#define SIOSPEC_ERR_INTERNAL 6

typedef struct siospec_analysis siospec_analysis;

const char* siospec_version(void);

/* Message for the most recent failure on this thread. */
const char* siospec_last_error(void);

int siospec_analysis_create(const char* config_json, siospec_analysis** out);
void siospec_analysis_destroy(siospec_analysis* a);

/*
 * Each call allocates a NUL-terminated string into *out; release it with
 * siospec_string_free. A nonzero return leaves *out untouched. Verdicts
 * (bounded / Fredholm / index) live inside the JSON report; status codes
 * cover only operational failures.
 */
int siospec_check_bounded(siospec_analysis* a, char** out);
int siospec_fredholm(siospec_analysis* a, int verify, char** out);
int siospec_index(siospec_analysis* a, int verify, char** out);
int siospec_spectrum_csv(siospec_analysis* a, char** out);
int siospec_spectrum_svg(siospec_analysis* a, char** out);
int siospec_verify(siospec_analysis* a, char** out);

/* Exit-code hint stored in a JSON report (0 / 2 / 3 convention). */
int siospec_report_exit(const char* report_json);

void siospec_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* SIOSPEC_H */
