#ifndef SOLVLIE_H
#define SOLVLIE_H

#include <stddef.h>
#include <stdint.h>

#if defined(SOLVLIE_BUILDING_LIBRARY)
#define SOLVLIE_API __attribute__((visibility("default")))
#else
#define SOLVLIE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum solvlie_status {
  SOLVLIE_OK = 0,
  SOLVLIE_ERR_PARSE = 1,
  SOLVLIE_ERR_BAD_DIMENSION = 2,
  SOLVLIE_ERR_INVALID_PARAMETER = 3,
  SOLVLIE_ERR_EXCLUDED_PARAMETER = 4,
  SOLVLIE_ERR_NOT_A_DERIVATION = 5,
  SOLVLIE_ERR_NOT_NIL_INDEPENDENT = 6,
  SOLVLIE_ERR_NILPOTENT_INPUT = 7,
  SOLVLIE_ERR_COMMUTATOR_NOT_INNER = 8,
  SOLVLIE_ERR_IRRATIONAL_NORMALIZATION = 9,
  SOLVLIE_ERR_INDEX_OUT_OF_RANGE = 10,
  SOLVLIE_ERR_DIVERGENT_EXPONENT = 11,
  SOLVLIE_ERR_DEGENERATE_POINT = 12,
  SOLVLIE_ERR_ARITHMETIC = 13,
  SOLVLIE_ERR_NULL_ARGUMENT = 14,
  SOLVLIE_ERR_INTERNAL = 15
} solvlie_status;

typedef struct solvlie_algebra solvlie_algebra;

typedef struct solvlie_sampling {
  uint64_t seed;
  unsigned trials;
  long bound;
} solvlie_sampling;

/* Defaults: seed 0, 5 trials, bound 1000. */
SOLVLIE_API solvlie_sampling solvlie_sampling_default(void);

/* Message of the last failure on the calling thread; never NULL. */
SOLVLIE_API const char* solvlie_last_error(void);
SOLVLIE_API const char* solvlie_status_name(solvlie_status s);
SOLVLIE_API const char* solvlie_version(void);

/* Strings returned through char** out-parameters are owned by the caller. */
SOLVLIE_API void solvlie_string_free(char* s);

/* field is "R" or "C"; label uses the family syntax, e.g. "s(n+1,1):6:beta=3/2". */
SOLVLIE_API solvlie_status solvlie_algebra_build(const char* label, const char* field, solvlie_algebra** out);
SOLVLIE_API solvlie_status solvlie_algebra_parse(const char* table, solvlie_algebra** out);
SOLVLIE_API void solvlie_algebra_free(solvlie_algebra* g);
SOLVLIE_API size_t solvlie_algebra_dimension(const solvlie_algebra* g);
SOLVLIE_API solvlie_status solvlie_algebra_table(const solvlie_algebra* g, char** out);
/* label may be NULL; when given the expected signature is included. */
SOLVLIE_API solvlie_status solvlie_algebra_series_json(const solvlie_algebra* g, const char* label, char** out);
/* Classifies g laid out as n(n,1) on its first n elements. */
SOLVLIE_API solvlie_status solvlie_algebra_classify_json(const solvlie_algebra* g, size_t n, const char* field,
                                                         char** out);

SOLVLIE_API solvlie_status solvlie_derivations_json(size_t n, char** out);
SOLVLIE_API solvlie_status solvlie_classify_spec_json(const char* spec, const char* field, char** out);
SOLVLIE_API solvlie_status solvlie_invariants_json(const char* label, const char* field, char** out);
/* passed receives 1 when every check holds. */
SOLVLIE_API solvlie_status solvlie_verify_json(const char* label, const char* field, const solvlie_sampling* sampling,
                                               char** out, int* passed);
SOLVLIE_API solvlie_status solvlie_verify_all_json(size_t n_max, const solvlie_sampling* sampling, char** out,
                                                   int* passed);

#ifdef __cplusplus
}
#endif

#endif
