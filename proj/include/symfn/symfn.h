/* C interface to the symfn library.
 *
 * Every function returns an sf_status. On failure the message for the
 * calling thread is available from sf_last_error() until the next call.
 * Strings handed out through char** parameters are owned by the caller and
 * must be released with sf_string_free.
 *
 * Formats are "text" or "json"; bases are "p" or "schur".
 */
#ifndef SYMFN_H
#define SYMFN_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SF_API __declspec(dllexport)
#else
#define SF_API __attribute__((visibility("default")))
#endif

typedef enum sf_status {
    SF_OK = 0,
    SF_INVALID_ARGUMENT = 1, /* malformed input, bad parameter */
    SF_UNKNOWN_NAME = 2,     /* unknown identity id or family */
    SF_BUDGET_EXCEEDED = 3,
    SF_TRUNCATION = 4,
    SF_INTERNAL = 5
} sf_status;

typedef struct sf_symfunc sf_symfunc; /* homogeneous symmetric function */
typedef struct sf_series sf_series;   /* truncated series with constant term */

SF_API const char* sf_last_error(void);
SF_API const char* sf_status_name(sf_status status);
SF_API const char* sf_version(void);
SF_API void sf_string_free(char* s);

/* ----- symmetric functions ----- */

/* Component of degree n of a family descriptor ("lie", "fT:le(4)", ...). */
SF_API sf_status sf_family_component(const char* descriptor, int n, sf_symfunc** out);
/* Homogeneous expression, e.g. "p[4] + p[2,2]" or "{conj}_6 - s[5,1]". */
SF_API sf_status sf_symfunc_parse(const char* expression, sf_symfunc** out);
SF_API sf_status sf_symfunc_from_json(const char* json, sf_symfunc** out);
SF_API void sf_symfunc_free(sf_symfunc* f);

SF_API sf_status sf_symfunc_degree(const sf_symfunc* f, int* degree);
SF_API sf_status sf_symfunc_format(const sf_symfunc* f, const char* basis, const char* format, char** out);
/* *positive is set to 1 or 0; witnesses (negative Schur coefficients) are
 * written in the requested format when witnesses is non-null. */
SF_API sf_status sf_symfunc_schur_positive(const sf_symfunc* f, const char* format, int* positive, char** witnesses);

/* ----- series ----- */

SF_API sf_status sf_series_parse(const char* expression, int max_degree, sf_series** out);
/* outer[inner]; inner must have zero constant term. */
SF_API sf_status sf_series_pleth(const sf_series* outer, const sf_series* inner, sf_series** out);
SF_API sf_status sf_series_format(const sf_series* s, const char* basis, const char* format, char** out);
SF_API void sf_series_free(sf_series* s);

/* ----- verification ----- */

SF_API sf_status sf_list(const char* format, char** out);
/* params_json: flat object of strings, e.g. {"S":"2,3"}; may be NULL.
 * max_degree <= 0 selects the catalog default. *passed is 1 or 0. */
SF_API sf_status sf_verify(const char* id, const char* params_json, int max_degree, const char* format, int with_timing,
                           int* passed, char** out);
SF_API sf_status sf_verify_all(int jobs, const char* format, int with_timing, int* all_passed, char** out);

/* Schur positivity of a scan family for n_min <= n <= n_max. */
SF_API sf_status sf_scan(const char* family, const char* params_json, int n_min, int n_max, int budget, int jobs,
                         const char* format, int with_timing, int* all_positive, char** out);
/* p_1 Lie^(q)_(n-1) - Lie^(q)_n for 2 <= n <= n_max. */
SF_API sf_status sf_lift(int q, int n_max, int budget, int jobs, const char* format, int with_timing, int* all_positive,
                         char** out);

#ifdef __cplusplus
}
#endif

#endif /* SYMFN_H */
