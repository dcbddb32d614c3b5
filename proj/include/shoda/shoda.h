/* C interface to the shoda library.
 *
 * Algebras and elements are opaque handles created from JSON text. Every
 * operation returns a status code and writes a JSON report to *out; on
 * failure the report is {"error": <name>, "detail": <message>}. Strings
 * returned through *out must be released with shoda_string_free.
 */
#ifndef SHODA_SHODA_H
#define SHODA_SHODA_H

#include <stdint.h>

#if defined(_WIN32)
#if defined(SHODA_BUILDING_LIBRARY)
#define SHODA_API __declspec(dllexport)
#else
#define SHODA_API __declspec(dllimport)
#endif
#else
#define SHODA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum shoda_status {
  SHODA_OK = 0,
  SHODA_INVALID_ARGUMENT,
  SHODA_SHAPE_MISMATCH,
  SHODA_NUMERICAL_FAILURE,
  SHODA_NO_SUCH_SPECTRAL_VALUE,
  SHODA_CONTOUR_TOO_TIGHT,
  SHODA_NOT_RANK_ONE,
  SHODA_DEPENDENT_INPUTS,
  SHODA_ZERO_ELEMENT,
  SHODA_DIFFERENT_MINIMAL_IDEAL,
  SHODA_NOT_A_PROJECTION,
  SHODA_PATH_DEGENERATE,
  SHODA_NOT_SHODA_COMPLETE,
  SHODA_RANK_MISMATCH,
  SHODA_ILL_CONDITIONED,
  SHODA_NOT_AN_IDEAL,
  SHODA_NOT_SEMISIMPLE,
  SHODA_NON_SQUARE_COMPONENT,
  SHODA_NOT_TRACELESS,
  SHODA_PARSE_ERROR,
  SHODA_IO_ERROR,
  SHODA_INTERNAL_ERROR
} shoda_status;

typedef struct shoda_algebra shoda_algebra;
typedef struct shoda_element shoda_element;

typedef struct shoda_options {
  double tol;
  uint64_t seed;
  int32_t samples;
} shoda_options;

/* tol 1e-9, seed 42, samples 1000. */
SHODA_API shoda_options shoda_default_options(void);

SHODA_API const char* shoda_status_name(shoda_status status);
SHODA_API void shoda_string_free(char* s);

/* {"blocks": [n_1, ..., n_k]} */
SHODA_API shoda_status shoda_algebra_from_json(const char* json, shoda_algebra** out, char** error);
SHODA_API void shoda_algebra_free(shoda_algebra* algebra);

/* {"blocks": [[[re, im], ...], ...]}, one row-major matrix per block. */
SHODA_API shoda_status shoda_element_from_json(const shoda_algebra* algebra, const char* json,
                                               shoda_element** out, char** error);
SHODA_API shoda_status shoda_element_to_json(const shoda_element* element, char** out);
SHODA_API void shoda_element_free(shoda_element* element);

SHODA_API shoda_status shoda_info(const shoda_algebra* algebra, char** out);
/* include_table != 0 adds the dense structure-constant table of A_S. */
SHODA_API shoda_status shoda_complete(const shoda_algebra* algebra, const shoda_options* options,
                                      int include_table, char** out);
SHODA_API shoda_status shoda_check(const shoda_algebra* algebra, const shoda_options* options, char** out);
SHODA_API shoda_status shoda_norm_audit(const shoda_algebra* algebra, const shoda_options* options, char** out);

SHODA_API shoda_status shoda_rank(const shoda_element* element, const shoda_options* options, char** out);
SHODA_API shoda_status shoda_trace(const shoda_element* element, char** out);
SHODA_API shoda_status shoda_spectrum(const shoda_element* element, const shoda_options* options, char** out);
SHODA_API shoda_status shoda_riesz(const shoda_element* element, double re, double im,
                                   const shoda_options* options, char** out);
/* in_completion != 0 decomposes in the Shoda-completion instead of in A. */
SHODA_API shoda_status shoda_decompose(const shoda_element* element, const shoda_options* options,
                                       int in_completion, char** out);

/* Path of rank-one idempotents from p to q; options->samples points. */
SHODA_API shoda_status shoda_projection_path(const shoda_element* p, const shoda_element* q,
                                             const shoda_options* options, char** out);
/* Path of rank-n elements from a to b. */
SHODA_API shoda_status shoda_rank_path(const shoda_element* a, const shoda_element* b, int32_t n,
                                       const shoda_options* options, char** out);

#ifdef __cplusplus
}
#endif

#endif
