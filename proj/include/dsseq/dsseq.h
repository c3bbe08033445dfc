#ifndef DSSEQ_H
#define DSSEQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(DSSEQ_BUILDING_LIBRARY)
#define DSSEQ_API __attribute__((visibility("default")))
#else
#define DSSEQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dsseq_status {
  DSSEQ_OK = 0,
  DSSEQ_INVALID_ARGUMENT = 1,
  DSSEQ_PARSE_ERROR = 2,
  DSSEQ_VERIFICATION_FAILED = 3,  /* the report was still produced */
  DSSEQ_INTERNAL_ERROR = 4
} dsseq_status;

typedef enum dsseq_format { DSSEQ_TEXT = 0, DSSEQ_JSON = 1 } dsseq_format;
typedef enum dsseq_order { DSSEQ_ORDER_YX = 0, DSSEQ_ORDER_XY = 1 } dsseq_order;
typedef enum dsseq_direction { DSSEQ_DIR_X = 0, DSSEQ_DIR_Y = 1, DSSEQ_DIR_X_PLUS_Y = 2 } dsseq_direction;
typedef enum dsseq_equivariance { DSSEQ_SL = 0, DSSEQ_GL = 1 } dsseq_equivariance;

/* A parsed module expression together with the module it evaluates to. */
typedef struct dsseq_module dsseq_module;

DSSEQ_API const char* dsseq_version(void);

/* Message of the last failed call on this thread; "" if none. */
DSSEQ_API const char* dsseq_last_error(void);
/* Byte offset of the last DSSEQ_PARSE_ERROR on this thread, or -1. */
DSSEQ_API long dsseq_last_error_offset(void);

/* Every char** result is allocated by the library and released with dsseq_string_free. */
DSSEQ_API void dsseq_string_free(char* s);

DSSEQ_API dsseq_status dsseq_module_parse(const char* expr, dsseq_module** out);
DSSEQ_API void dsseq_module_free(dsseq_module* m);
DSSEQ_API dsseq_status dsseq_module_dims(const dsseq_module* m, size_t* even, size_t* odd);
/* Canonical printed form; parsing it gives the same expression. */
DSSEQ_API dsseq_status dsseq_module_expr(const dsseq_module* m, char** out);

/* Reports. max_page < 0 shows pages up to stabilization. */
DSSEQ_API dsseq_status dsseq_pages(const dsseq_module* m, dsseq_order order, int max_page, dsseq_format fmt, char** out);
DSSEQ_API dsseq_status dsseq_ds(const dsseq_module* m, dsseq_direction dir, dsseq_format fmt, char** out);
/* DSSEQ_VERIFICATION_FAILED if the decomposition could not be certified. */
DSSEQ_API dsseq_status dsseq_decompose(const dsseq_module* m, dsseq_format fmt, char** out);
DSSEQ_API dsseq_status dsseq_ss(const dsseq_module* m, dsseq_order order, dsseq_format fmt, char** out);
DSSEQ_API dsseq_status dsseq_filtration(const dsseq_module* m, dsseq_order order, dsseq_format fmt, char** out);
/* DSSEQ_VERIFICATION_FAILED if Gr does not match the limits or the pieces do not decompose. */
DSSEQ_API dsseq_status dsseq_bifilt(const dsseq_module* m, dsseq_format fmt, char** out);
DSSEQ_API dsseq_status dsseq_homs(const dsseq_module* source, const dsseq_module* target, dsseq_equivariance eq,
                                  dsseq_format fmt, char** out);

/* Weights as comma-separated half-integers, e.g. "15/2,13/2,-1/2"; partitions as "2,1". */
DSSEQ_API dsseq_status dsseq_arc(const char* weight, dsseq_format fmt, char** out);
DSSEQ_API dsseq_status dsseq_qmult(const char* lambda, const char* mu, int k, dsseq_format fmt, char** out);
DSSEQ_API dsseq_status dsseq_lr(const char* lambda, const char* mu, const char* gamma, dsseq_format fmt, char** out);

/* Acceptance suites. suite NULL or "" runs all of them; DSSEQ_VERIFICATION_FAILED unless all pass. */
DSSEQ_API size_t dsseq_suite_count(void);
DSSEQ_API const char* dsseq_suite_name(size_t i);
DSSEQ_API uint64_t dsseq_default_seed(void);
DSSEQ_API dsseq_status dsseq_verify(const char* suite, uint64_t seed, dsseq_format fmt, char** out);

#ifdef __cplusplus
}
#endif

#endif
