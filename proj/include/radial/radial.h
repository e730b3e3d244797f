/*
 * radial: exact reduced-word, radial-algebra and defect computations for free
 * products of finite groups and free groups.
 *
 * Plain C interface. Every function returns a radial_status; on failure the
 * message is available from radial_last_error() on the same thread until the
 * next call. Handles are opaque and owned by the caller. Strings returned
 * through char** are heap allocated and released with radial_string_free().
 *
 * Words and tuples travel as JSON text: a word is a list of [slot, value]
 * pairs ([factor, element] or [generator, sign]), "[]" or "e" is the identity,
 * and a tuple is a list of k words. A single word passed where a tuple is
 * expected stands for its k-fold tensor power.
 */
#ifndef RADIAL_RADIAL_H
#define RADIAL_RADIAL_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(RADIAL_BUILDING_LIBRARY)
#define RADIAL_API __attribute__((visibility("default")))
#else
#define RADIAL_API
#endif

typedef enum radial_status {
  RADIAL_OK = 0,
  RADIAL_ERR_INPUT = 1,        /* malformed spec, word, tuple or parameter */
  RADIAL_ERR_PRECONDITION = 2, /* called outside the hypotheses of a check */
  RADIAL_ERR_IO = 3,
  RADIAL_ERR_INTERNAL = 4
} radial_status;

typedef enum radial_format { RADIAL_FORMAT_CSV = 0, RADIAL_FORMAT_JSON = 1, RADIAL_FORMAT_TEXT = 2 } radial_format;

typedef enum radial_mode {
  RADIAL_MODE_REDUCED_CONCAT = 1, /* x.a = b.x with reduced concatenations */
  RADIAL_MODE_PLAIN = 2,          /* xa = bx */
  RADIAL_MODE_BOTH = 3
} radial_mode;

typedef struct radial_spec radial_spec;
typedef struct radial_report radial_report;

RADIAL_API const char* radial_version(void);
RADIAL_API const char* radial_last_error(void);
RADIAL_API void radial_string_free(char* s);

/* source: "fp:MxP", "free:N", inline JSON, or a path to a JSON spec file. */
RADIAL_API radial_status radial_spec_load(const char* source, radial_spec** out);
RADIAL_API void radial_spec_free(radial_spec* spec);
/* Effective parameters; a free group of rank N reports m = 2N, p = 2. */
RADIAL_API radial_status radial_spec_params(const radial_spec* spec, int* m, int* p, int* is_free_group);
RADIAL_API radial_status radial_spec_to_json(const radial_spec* spec, char** out);

/* Decimal string, exact for any n >= 0. */
RADIAL_API radial_status radial_word_count(const radial_spec* spec, int n, char** out);
RADIAL_API radial_status radial_word_reduce(const radial_spec* spec, const char* letters, char** out);
RADIAL_API radial_status radial_word_multiply(const radial_spec* spec, const char* x, const char* y, char** out);
RADIAL_API radial_status radial_word_inverse(const radial_spec* spec, const char* x, char** out);

/* Reports. A report passes when every asserted identity held. */
RADIAL_API radial_status radial_validate(const char* source, radial_report** out);
RADIAL_API radial_status radial_run_enumerate(const radial_spec* spec, int n, radial_report** out);
RADIAL_API radial_status radial_run_verify(const radial_spec* spec, int k, int n_max, radial_report** out);
RADIAL_API radial_status radial_run_defects(const radial_spec* spec, int k, const char* x, const char* y, int n_max,
                                            radial_report** out);
/* a and b both NULL sweeps all non-trivial pairs with |a|, |b| <= ab_max. */
RADIAL_API radial_status radial_run_conjugacy(const radial_spec* spec, const char* a, const char* b, radial_mode mode,
                                              int l_max, int ab_max, radial_report** out);
/* x NULL sweeps every tuple of rank 1..k with component lengths <= len_max. */
RADIAL_API radial_status radial_run_nonzero_check(const radial_spec* spec, int k, const char* x, int len_max,
                                                  radial_report** out);
/* x and y NULL sweeps every pair of length-2 words. exploratory != 0 also
 * computes rows outside |x|, |y| >= 2, n >= |x| + |y|. */
RADIAL_API radial_status radial_run_k0_check(const radial_spec* spec, int k, const char* x, const char* y, int n_max,
                                             int exploratory, radial_report** out);

RADIAL_API int radial_report_passed(const radial_report* report);
RADIAL_API radial_status radial_report_render(const radial_report* report, radial_format format, char** out);
RADIAL_API void radial_report_free(radial_report* report);

#ifdef __cplusplus
}
#endif

#endif /* RADIAL_RADIAL_H */
