#ifndef HSK_HSK_H
#define HSK_HSK_H

/* C interface to the Hecke algebra / skein category library.
 *
 * Every query returns a status code. On HSK_OK the result is written to *out
 * as a NUL-terminated JSON document owned by the caller, to be released with
 * hsk_string_free. On failure *out is set to NULL and hsk_last_error()
 * describes the problem (per thread, valid until the next call).
 *
 * Diagrams are JSON arrays of row lengths ("[2,1]", "[]" for the empty
 * diagram). Braids are {"strands": n, "word": [1, -2, ...]}. */

#include <stdint.h>

#if defined(HSK_BUILDING_LIBRARY)
#define HSK_API __attribute__((visibility("default")))
#else
#define HSK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hsk_status {
  HSK_OK = 0,
  HSK_DOMAIN_ERROR = 1,   /* mathematical precondition failed */
  HSK_USAGE_ERROR = 2,    /* malformed argument */
  HSK_LIMIT_ERROR = 3,    /* request above a configured size limit */
  HSK_INTERNAL_ERROR = 4  /* library self-check failed */
} hsk_status;

typedef struct hsk_context hsk_context;

HSK_API const char* hsk_version(void);
HSK_API const char* hsk_last_error(void);
HSK_API void hsk_string_free(char* s);

/* cache_dir may be NULL or "" to disable the disk cache; gram_limit <= 0
 * selects the default strand limit. A context is not thread-safe. */
HSK_API hsk_status hsk_context_new(int N, int K, const char* cache_dir, int gram_limit,
                                   hsk_context** out);
HSK_API void hsk_context_free(hsk_context* ctx);

/* Combinatorics. */
HSK_API hsk_status hsk_labels(hsk_context* ctx, char** out);
HSK_API hsk_status hsk_qint(hsk_context* ctx, int j, char** out);
HSK_API hsk_status hsk_dagger(hsk_context* ctx, const char* diagram, char** out);
HSK_API hsk_status hsk_branch(hsk_context* ctx, int n, const char* diagram, char** out);
HSK_API hsk_status hsk_paths(hsk_context* ctx, int n, const char* diagram, char** out);

/* Hecke algebra. kind is "f" or "sym" (T = -1 eigenspace), "g" or "antisym"
 * (T = q eigenspace). */
HSK_API hsk_status hsk_jw(hsk_context* ctx, int n, const char* kind, char** out);
HSK_API hsk_status hsk_yidem(hsk_context* ctx, const char* diagram, char** out);

/* Traces. crossing is "hecke" (or NULL) or "ribbon"; form is "bilinear" or
 * "hermitian". */
HSK_API hsk_status hsk_trace(hsk_context* ctx, const char* braid, char** out);
HSK_API hsk_status hsk_closure(hsk_context* ctx, const char* braid, const char* crossing,
                               char** out);
HSK_API hsk_status hsk_gram(hsk_context* ctx, int n, const char* form, int full, char** out);

/* Purified category. */
HSK_API hsk_status hsk_purify(hsk_context* ctx, int n, char** out);
HSK_API hsk_status hsk_blocks(hsk_context* ctx, int n, int full, char** out);
/* With a, b, c: the coefficient. With a, b and c == NULL: the nonzero
 * products. With a == b == c == NULL: the whole table. */
HSK_API hsk_status hsk_fusion(hsk_context* ctx, const char* a, const char* b, const char* c,
                              char** out);
HSK_API hsk_status hsk_qdim(hsk_context* ctx, const char* diagram, char** out);
/* raw != 0 returns the full-twist eigenvalue on y_lambda instead of the ribbon
 * twist. */
HSK_API hsk_status hsk_twist(hsk_context* ctx, const char* diagram, int raw, char** out);
HSK_API hsk_status hsk_smatrix(hsk_context* ctx, char** out);
/* marks: JSON array of diagrams. */
HSK_API hsk_status hsk_mfdim(hsk_context* ctx, int genus, const char* marks, char** out);

/* sections: JSON array of section names, or NULL for all. */
HSK_API hsk_status hsk_verify(hsk_context* ctx, int max_n, uint64_t seed, const char* sections,
                              int timings, char** out);

#ifdef __cplusplus
}
#endif

#endif
