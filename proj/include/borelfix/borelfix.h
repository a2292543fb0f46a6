/*
 * C interface to the borelfix library.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Functions return a bf_status; on failure the
 * message is available from bf_last_error() until the next call on the same
 * thread. Strings returned through char** are heap allocated and released
 * with bf_string_free.
 */
#ifndef BORELFIX_H
#define BORELFIX_H

#include <stddef.h>

#if defined(_WIN32)
#define BF_API __declspec(dllexport)
#else
#define BF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bf_status {
  BF_OK = 0,
  BF_ERR_DOMAIN = 1,           /* inadmissible input, out-of-scope coordinates */
  BF_ERR_INVALID_ARGUMENT = 2, /* malformed input, null handles */
  BF_ERR_FEASIBILITY = 3,      /* oracle search guard tripped */
  BF_ERR_INTERNAL = 4
} bf_status;

typedef struct bf_partition bf_partition;
typedef struct bf_ideal bf_ideal;
typedef struct bf_ideal_set bf_ideal_set;

BF_API const char* bf_version(void);
BF_API const char* bf_last_error(void);
BF_API void bf_string_free(char* s);

/* ---- Hilbert polynomials (Gotzmann partitions) ---- */

BF_API bf_status bf_partition_new(const int* parts, size_t len, bf_partition** out);
/* "1,1,0" or "[1,1,0]" */
BF_API bf_status bf_partition_parse(const char* text, bf_partition** out);
BF_API bf_status bf_partition_from_macaulay(const int* parts, size_t len, bf_partition** out);
BF_API void bf_partition_free(bf_partition* p);

BF_API size_t bf_partition_length(const bf_partition* p);
BF_API int bf_partition_part(const bf_partition* p, size_t index);
/* Writes up to cap entries of the Macaulay partition; *len gets the full length. */
BF_API bf_status bf_partition_to_macaulay(const bf_partition* p, int* buf, size_t cap, size_t* len);
/* Decimal value of p(t). */
BF_API bf_status bf_partition_evaluate(const bf_partition* p, long long t, char** out);
BF_API bf_status bf_partition_apply_A(const bf_partition* p, bf_partition** out);
BF_API bf_status bf_partition_apply_Phi(const bf_partition* p, bf_partition** out);
BF_API bf_status bf_partition_apply_nabla(const bf_partition* p, bf_partition** out);
/* Samples p(base), ..., p(base + count - 1). */
BF_API bf_status bf_partition_peel(long long base, const long long* values, size_t count,
                                   bf_partition** out);
BF_API bf_status bf_partition_to_json(const bf_partition* p, char** out);

/* ---- Monomial ideals ---- */

/* Human syntax "x0^2, x0*x1"; num_vars <= 0 infers the ring. */
BF_API bf_status bf_ideal_parse(const char* text, int num_vars, bf_ideal** out);
/* {"num_vars": N, "generators": [[...], ...]} */
BF_API bf_status bf_ideal_from_json(const char* json, bf_ideal** out);
/* num_gens row-major exponent vectors of length num_vars. */
BF_API bf_status bf_ideal_from_exponents(int num_vars, const int* exponents, size_t num_gens,
                                         bf_ideal** out);
BF_API void bf_ideal_free(bf_ideal* ideal);

BF_API int bf_ideal_num_vars(const bf_ideal* ideal);
BF_API size_t bf_ideal_num_generators(const bf_ideal* ideal);
/* Copies generator `index` into exponents_out (num_vars entries). */
BF_API bf_status bf_ideal_generator(const bf_ideal* ideal, size_t index, int* exponents_out);
BF_API bf_status bf_ideal_to_json(const bf_ideal* ideal, char** out);
BF_API bf_status bf_ideal_to_string(const bf_ideal* ideal, char** out);
BF_API int bf_ideal_equal(const bf_ideal* a, const bf_ideal* b);

BF_API bf_status bf_ideal_contains(const bf_ideal* ideal, const int* exponents, int* out);
BF_API bf_status bf_ideal_hilbert_function(const bf_ideal* ideal, int degree, long long* out);
/* *out is NULL for the zero polynomial. reg_hint < 0 selects the default.
 * stabilization_degree and window_retries may be NULL. */
BF_API bf_status bf_ideal_hilbert_polynomial(const bf_ideal* ideal, int reg_hint, bf_partition** out,
                                             int* stabilization_degree, int* window_retries);
/* Full HilbertData as JSON. */
BF_API bf_status bf_ideal_hilbert_json(const bf_ideal* ideal, int reg_hint, char** out);
BF_API bf_status bf_ideal_saturate(const bf_ideal* ideal, int k, bf_ideal** out);
BF_API bf_status bf_ideal_lift(const bf_ideal* ideal, bf_ideal** out);
BF_API bf_status bf_ideal_nabla(const bf_ideal* ideal, bf_ideal** out);

/* ---- Borel machinery; ch is 0 or a prime ---- */

BF_API bf_status bf_leq_p(int k, int l, int ch, int* out);
BF_API bf_status bf_ideal_is_p_borel(const bf_ideal* ideal, int ch, int* out);
BF_API bf_status bf_ideal_is_strongly_stable(const bf_ideal* ideal, int* out);
/* Closure of the generators of `gens`. */
BF_API bf_status bf_borel_closure(const bf_ideal* gens, int ch, bf_ideal** out);
/* Expandable generators, returned as the ideal they generate (they are
 * part of a minimal generating set, so nothing is lost). */
BF_API bf_status bf_expandable_generators(const bf_ideal* ideal, bf_ideal** out);
BF_API bf_status bf_expand(const bf_ideal* ideal, const int* generator, bf_ideal** out);

/* ---- Lexicographic ideals ---- */

BF_API bf_status bf_lex_from_counts(const int* counts, size_t len, bf_ideal** out);
BF_API bf_status bf_lex_from_partition(const bf_partition* p, int n, bf_ideal** out);

/* ---- Enumeration ---- */

BF_API bf_status bf_reeves(const bf_partition* p, int n, bf_ideal_set** out);
BF_API bf_status bf_oracle(const bf_partition* p, int n, int ch, int force, bf_ideal_set** out);
BF_API size_t bf_ideal_set_size(const bf_ideal_set* set);
/* Borrowed pointer, valid until the set is freed. */
BF_API const bf_ideal* bf_ideal_set_get(const bf_ideal_set* set, size_t index);
BF_API bf_status bf_ideal_set_to_json(const bf_ideal_set* set, char** out);
BF_API void bf_ideal_set_free(bf_ideal_set* set);

/* ---- Classification (JSON results) ---- */

/* {partition, n, char, clause, predicted, verified, unique_clause, two_clause,
 *  three_clause, ideals?}. method is "reeves", "oracle" or "auto". */
BF_API bf_status bf_classify(const bf_partition* p, int n, int ch, int verify, const char* method,
                             int force, char** out);
/* grid_json NULL or "default" selects the default grid. */
BF_API bf_status bf_verify(const char* grid_json, int with_ideals, int force, char** out);
BF_API bf_status bf_tree(int codim, int depth, int max_depth, char** out);

#ifdef __cplusplus
}
#endif

#endif /* BORELFIX_H */
