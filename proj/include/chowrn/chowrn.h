/* C interface to libchowrn: rank-nullity rings, tautological Chern classes and the uniform case.
 *
 * Every function returns a chowrn_status; results come back through out-parameters. Strings returned
 * through char** are heap-allocated and must be released with chowrn_string_free. Matroid handles are
 * immutable and may be shared between threads. chowrn_last_error() describes the most recent failure on
 * the calling thread. */
#ifndef CHOWRN_CHOWRN_H
#define CHOWRN_CHOWRN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chowrn_status {
  CHOWRN_OK = 0,
  CHOWRN_ERR_INVALID_INPUT = 1,
  CHOWRN_ERR_OUT_OF_RANGE = 2,
  CHOWRN_ERR_SIZE_CAP = 3,
  CHOWRN_ERR_CONTEXT = 4,
  CHOWRN_ERR_UNSUPPORTED = 5,
  CHOWRN_ERR_NULL_ARGUMENT = 6,
  CHOWRN_ERR_INTERNAL = 7
} chowrn_status;

typedef enum chowrn_bundle { CHOWRN_BUNDLE_S = 0, CHOWRN_BUNDLE_Q = 1 } chowrn_bundle;

typedef struct chowrn_matroid chowrn_matroid;

const char* chowrn_version(void);
const char* chowrn_last_error(void);
const char* chowrn_status_name(chowrn_status status);
void chowrn_string_free(char* s);

/* Ground-set cap for matroid construction (default 12). */
chowrn_status chowrn_set_max_ground_set(int n);
int chowrn_max_ground_set(void);

/* Matroids. JSON follows the uniform / bases / graphic / direct_sum schema, 1-indexed. */
chowrn_status chowrn_matroid_from_json(const char* json, chowrn_matroid** out);
/* "uniform:R:N", "mk4", "m1".."m4", "fano_minus" */
chowrn_status chowrn_matroid_builtin(const char* name, chowrn_matroid** out);
void chowrn_matroid_free(chowrn_matroid* m);
chowrn_status chowrn_matroid_size(const chowrn_matroid* m, int* n);
chowrn_status chowrn_matroid_rank(const chowrn_matroid* m, int* rank);
chowrn_status chowrn_matroid_label(const chowrn_matroid* m, char** label);
chowrn_status chowrn_matroid_to_json(const chowrn_matroid* m, char** json);

/* Hilbert function of the rank-nullity ring. Writes min(capacity, n) values; *length receives n. */
chowrn_status chowrn_hilbert(const chowrn_matroid* m, size_t* values, size_t capacity, size_t* length);

/* c_k of S_M or Q_M as JSON {"bundle","k","raw","element":{...},"shapes":[...]}. raw = 0 returns FY normal form;
 * raw != 0 returns the closed-form chain sum together with its grouping by level sequence and powers. */
chowrn_status chowrn_chern(const chowrn_matroid* m, chowrn_bundle bundle, int k, int raw, char** json);
/* Compares the closed form, the Higgs-lift product and the rank-nullity expansion after normal form. */
chowrn_status chowrn_chern_cross_check(const chowrn_matroid* m, chowrn_bundle bundle, int k, int* agree);

/* csm_{rank-1-k} weights as {"k":k,"weights":[...]}; *balanced receives the balancing verdict (1 when the
 * cones have dimension 0 and balancing is vacuous). Loopless matroids only. */
chowrn_status chowrn_csm(const chowrn_matroid* m, int k, char** json, int* balanced);

/* Degree-1 relation report; *consistent is 1 when the observed and predicted relations agree. */
chowrn_status chowrn_census(const chowrn_matroid* m, char** json, int* consistent);

/* Injectivity of multiplication by the ample class sum (i+j)(n-i-j) y_{i,j} up to the middle degree. */
chowrn_status chowrn_lefschetz(const chowrn_matroid* m, int* injective);

/* Standard monomial basis B_n as JSON; degree < 0 lists every degree. */
chowrn_status chowrn_basis(int n, int degree, char** json);
/* Groebner-basis verification report as JSON; *all_ok is 1 when every check passes. */
chowrn_status chowrn_gb_check(int n, char** json, int* all_ok);

/* Reference table of Hilbert functions. Row labels are available through chowrn_matroid_label. */
size_t chowrn_table1_size(void);
chowrn_status chowrn_table1_row(size_t index, chowrn_matroid** matroid, size_t* expected, size_t capacity,
                                size_t* length);

#ifdef __cplusplus
}
#endif

#endif
