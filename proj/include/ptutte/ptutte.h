/*
 * ptutte: polymatroid Tutte polynomials with exact integer arithmetic.
 *
 * Public C interface of libptutte. All objects are opaque handles owned by
 * the caller and released with the matching *_free function. Every function
 * that can fail returns a ptutte_status; on failure the output parameters
 * are left untouched and ptutte_last_error() describes the problem for the
 * calling thread. Strings returned through char** are heap allocated and
 * released with ptutte_string_free().
 *
 * Ground-set elements are 1-indexed. Subsets are bitmasks where bit (i - 1)
 * stands for element i.
 */
#ifndef PTUTTE_PTUTTE_H
#define PTUTTE_PTUTTE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PTUTTE_BUILDING_LIBRARY)
#    define PTUTTE_API __declspec(dllexport)
#  else
#    define PTUTTE_API __declspec(dllimport)
#  endif
#else
#  define PTUTTE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ptutte_status {
  PTUTTE_OK = 0,
  PTUTTE_ERR_PARSE = 1,          /* malformed JSON or polynomial text */
  PTUTTE_ERR_INVALID_ARGUMENT = 2,
  PTUTTE_ERR_OUT_OF_RANGE = 3,   /* element or slice index outside its range */
  PTUTTE_ERR_PRECONDITION = 4,   /* e.g. table is not a polymatroid */
  PTUTTE_ERR_LIMIT = 5,          /* input exceeds a size cap */
  PTUTTE_ERR_INTERNAL = 6
} ptutte_status;

typedef enum ptutte_strategy {
  PTUTTE_STRATEGY_LAST = 0,
  PTUTTE_STRATEGY_FIRST = 1,
  PTUTTE_STRATEGY_MIN_RANGE = 2,
  PTUTTE_STRATEGY_MAX_RANGE = 3
} ptutte_strategy;

typedef enum ptutte_axiom {
  PTUTTE_AXIOM_NONE = 0,
  PTUTTE_AXIOM_EMPTY_SET_ZERO = 1,   /* (i)  f(empty) = 0 */
  PTUTTE_AXIOM_SUBMODULARITY = 2,    /* (ii) */
  PTUTTE_AXIOM_UNIT_BOUND = 3,       /* (r1) */
  PTUTTE_AXIOM_MONOTONICITY = 4,     /* (r2) */
  PTUTTE_AXIOM_RANK_SUBMODULARITY = 5 /* (r3) */
} ptutte_axiom;

typedef enum ptutte_matroid_method {
  PTUTTE_MATROID_RANK_GENERATING = 0,
  PTUTTE_MATROID_DELETION_CONTRACTION = 1,
  PTUTTE_MATROID_BASES_ACTIVITIES = 2
} ptutte_matroid_method;

typedef enum ptutte_suite {
  PTUTTE_SUITE_MINORS = 0,
  PTUTTE_SUITE_CLAIMS = 1,
  PTUTTE_SUITE_CORRESPONDENCE = 2, /* requires a matroid table */
  PTUTTE_SUITE_EQUIVALENCE = 3
} ptutte_suite;

/* Largest ground set accepted anywhere, and by the bases expansion. */
#define PTUTTE_MAX_GROUND_SET 16
#define PTUTTE_MAX_EXPANSION_GROUND_SET 10

typedef struct ptutte_table ptutte_table;
typedef struct ptutte_poly ptutte_poly;
typedef struct ptutte_corpus ptutte_corpus;

typedef struct ptutte_validation {
  int ok;
  ptutte_axiom axiom;
  uint32_t first;  /* witness subset(s); second is 0 for single-set axioms */
  uint32_t second;
} ptutte_validation;

typedef struct ptutte_pivot {
  int64_t alpha;
  int64_t beta;
} ptutte_pivot;

typedef struct ptutte_check_result {
  int passed;
  uint64_t checks;
  uint64_t failed;
} ptutte_check_result;

typedef struct ptutte_corpus_options {
  int include_uniform;
  uint32_t uniform_max_n;
  int include_graphic;
  uint32_t graphic_max_edges;
  uint32_t random_count;
  uint32_t random_max_n;
  int64_t random_bound;
  uint64_t seed;
  uint32_t mixture_count;
  int include_boundary;
  int include_exhaustive_small;
} ptutte_corpus_options;

PTUTTE_API const char* ptutte_version(void);
PTUTTE_API const char* ptutte_last_error(void);
PTUTTE_API void ptutte_string_free(char* s);

/* ---- rank tables ---------------------------------------------------- */

PTUTTE_API ptutte_status ptutte_table_from_json(const char* json, ptutte_table** out);
PTUTTE_API ptutte_status ptutte_table_from_values(uint32_t n, const int64_t* values, size_t count,
                                                  ptutte_table** out);
PTUTTE_API ptutte_status ptutte_table_clone(const ptutte_table* table, ptutte_table** out);
PTUTTE_API void ptutte_table_free(ptutte_table* table);

PTUTTE_API uint32_t ptutte_table_size(const ptutte_table* table);
/* Copies up to `capacity` values in bitmask order; returns 2^n. */
PTUTTE_API size_t ptutte_table_values(const ptutte_table* table, int64_t* dst, size_t capacity);
/* Nonzero when loaded with "kind": "matroid" or produced by a matroid generator. */
PTUTTE_API int ptutte_table_is_matroid_kind(const ptutte_table* table);
PTUTTE_API ptutte_status ptutte_table_to_json(const ptutte_table* table, char** out);

/* Polymatroid axioms, or matroid axioms when the table has the matroid kind. */
PTUTTE_API ptutte_status ptutte_validate(const ptutte_table* table, ptutte_validation* out);
PTUTTE_API ptutte_status ptutte_validate_polymatroid(const ptutte_table* table, ptutte_validation* out);
PTUTTE_API ptutte_status ptutte_validate_matroid(const ptutte_table* table, ptutte_validation* out);
/* Human-readable axiom name, e.g. "(ii) submodularity". */
PTUTTE_API const char* ptutte_axiom_name(ptutte_axiom axiom);

PTUTTE_API ptutte_status ptutte_pivot_data(const ptutte_table* table, uint32_t t, ptutte_pivot* out);
PTUTTE_API ptutte_status ptutte_delete(const ptutte_table* table, uint32_t t, ptutte_table** out);
PTUTTE_API ptutte_status ptutte_contract(const ptutte_table* table, uint32_t t, ptutte_table** out);
PTUTTE_API ptutte_status ptutte_slice(const ptutte_table* table, uint32_t t, int64_t j, ptutte_table** out);
/* sigma[i - 1] is the image of element i. */
PTUTTE_API ptutte_status ptutte_permute(const ptutte_table* table, const uint32_t* sigma, size_t len,
                                        ptutte_table** out);

/* ---- bases ---------------------------------------------------------- */

PTUTTE_API ptutte_status ptutte_member(const ptutte_table* table, const int64_t* a, size_t len, int* out);
PTUTTE_API ptutte_status ptutte_count_bases(const ptutte_table* table, uint64_t* out);
/* JSON array of integer arrays, lexicographic order. */
PTUTTE_API ptutte_status ptutte_bases_json(const ptutte_table* table, char** out);

/* ---- Tutte polynomials ---------------------------------------------- */

/* `order` lists elements first to last; NULL/0 means 1 < 2 < ... < n. */
PTUTTE_API ptutte_status ptutte_tutte_expansion(const ptutte_table* table, const uint32_t* order, size_t len,
                                                ptutte_poly** out);
PTUTTE_API ptutte_status ptutte_tutte_recursive(const ptutte_table* table, ptutte_strategy strategy,
                                                ptutte_poly** out);
PTUTTE_API ptutte_status ptutte_tutte_matroid(const ptutte_table* table, ptutte_matroid_method method,
                                              ptutte_poly** out);
PTUTTE_API ptutte_status ptutte_strategy_from_name(const char* name, ptutte_strategy* out);

PTUTTE_API ptutte_status ptutte_poly_from_text(const char* text, ptutte_poly** out);
PTUTTE_API ptutte_status ptutte_poly_from_json(const char* json, ptutte_poly** out);
PTUTTE_API void ptutte_poly_free(ptutte_poly* poly);
PTUTTE_API int ptutte_poly_equal(const ptutte_poly* a, const ptutte_poly* b);
PTUTTE_API ptutte_status ptutte_poly_to_text(const ptutte_poly* poly, char** out);
PTUTTE_API ptutte_status ptutte_poly_to_json(const ptutte_poly* poly, char** out);
/* Exact value at (x, y) as a decimal string. */
PTUTTE_API ptutte_status ptutte_poly_eval(const ptutte_poly* poly, int64_t x, int64_t y, char** out);

/* ---- generators ----------------------------------------------------- */

PTUTTE_API ptutte_status ptutte_gen_uniform(uint32_t d, uint32_t n, ptutte_table** out);
/* `edges` holds 2 * edge_count 1-indexed endpoints. */
PTUTTE_API ptutte_status ptutte_gen_graphic(uint32_t vertices, const uint32_t* edges, size_t edge_count,
                                            ptutte_table** out);
PTUTTE_API ptutte_status ptutte_gen_random(uint32_t n, uint64_t seed, int64_t bound, ptutte_table** out);
PTUTTE_API ptutte_status ptutte_gen_mixture(uint32_t n, uint64_t seed, int64_t bound, ptutte_table** out);

PTUTTE_API void ptutte_corpus_options_default(ptutte_corpus_options* options);
PTUTTE_API ptutte_status ptutte_corpus_build(const ptutte_corpus_options* options, ptutte_corpus** out);
PTUTTE_API void ptutte_corpus_free(ptutte_corpus* corpus);
PTUTTE_API size_t ptutte_corpus_size(const ptutte_corpus* corpus);
/* Borrowed pointers, valid until the corpus is freed. */
PTUTTE_API const ptutte_table* ptutte_corpus_table(const ptutte_corpus* corpus, size_t index);
PTUTTE_API const char* ptutte_corpus_name(const ptutte_corpus* corpus, size_t index);

/* ---- identity suites ------------------------------------------------ */

/* `witnesses` (optional) receives a JSON array of failure descriptions. */
PTUTTE_API ptutte_status ptutte_check(const ptutte_table* table, ptutte_suite suite, ptutte_check_result* out,
                                      char** witnesses);

#ifdef __cplusplus
}
#endif

#endif /* PTUTTE_PTUTTE_H */
