/*
 *   Copyright 2026 The diffbrauer Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DIFFBRAUER_H
#define DIFFBRAUER_H

/*
 * C interface to the diffbrauer library.
 *
 * Values cross the boundary either as opaque handles (algebras, monoids,
 * registries) or as UTF-8 JSON strings using the library's documented
 * encodings. Every function returns a dbr_status; on failure a message is
 * available from dbr_last_error() on the calling thread and output
 * parameters are left untouched. Strings returned through `char** out`
 * are owned by the caller and released with dbr_string_free().
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(DIFFBRAUER_BUILDING)
#    define DBR_API __declspec(dllexport)
#  else
#    define DBR_API __declspec(dllimport)
#  endif
#else
#  define DBR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dbr_status {
  DBR_OK = 0,
  DBR_E_PARSE = 1,
  DBR_E_INVALID_ARGUMENT = 2,
  DBR_E_DIMENSION = 3,
  DBR_E_BASE = 4,
  DBR_E_SINGULAR = 5,
  DBR_E_UNSUPPORTED = 6,
  DBR_E_INTEGRITY = 7,
  DBR_E_INTERNAL = 8
} dbr_status;

typedef enum dbr_verdict {
  DBR_TRIVIAL = 0,
  DBR_NONTRIVIAL = 1,
  DBR_UNKNOWN = 2
} dbr_verdict;

typedef enum dbr_distinction {
  DBR_EQUIVALENT = 0,
  DBR_NOT_EQUIVALENT = 1,
  DBR_UNDECIDED = 2
} dbr_distinction;

typedef struct dbr_algebra dbr_algebra;
typedef struct dbr_monoid dbr_monoid;
typedef struct dbr_registry dbr_registry;

/* Status names match the JSON error codes, e.g. "dimension_mismatch". */
DBR_API const char* dbr_status_name(dbr_status status);
DBR_API const char* dbr_last_error(void);
DBR_API void dbr_string_free(char* s);
DBR_API const char* dbr_version(void);

/* ---- exact scalars -------------------------------------------------- */

/* scalar JSON in, scalar JSON out */
DBR_API dbr_status dbr_rf_derive(const char* scalar_json, char** out_json);
/* matrix JSON in, polynomial JSON out (coefficients are scalars) */
DBR_API dbr_status dbr_char_poly(const char* matrix_json, char** out_json);
/* polynomial JSON in, {"roots": [...], "splits": bool} out */
DBR_API dbr_status dbr_rational_roots(const char* poly_json, char** out_json);
DBR_API dbr_status dbr_squarefree_part(const char* poly_json, char** out_json);
/* *found = 1 and *out_json = scalar when y exists; *found = 0 and
 * *out_json = "null" otherwise. */
DBR_API dbr_status dbr_solve_log(const char* scalar_json, char** out_json, int* found);

/* ---- differential matrix algebras ----------------------------------- */

DBR_API dbr_status dbr_algebra_from_json(const char* json, dbr_algebra** out);
DBR_API dbr_status dbr_algebra_to_json(const dbr_algebra* alg, char** out_json);
DBR_API void dbr_algebra_free(dbr_algebra* alg);
DBR_API size_t dbr_algebra_dimension(const dbr_algebra* alg);

DBR_API dbr_status dbr_derive_element(const dbr_algebra* alg, const char* matrix_json, char** out_json);
/* module JSON {"base", "n", "A"}; vector JSON [v1, ..., vn] */
DBR_API dbr_status dbr_module_derive(const char* module_json, const char* vector_json, char** out_json);
DBR_API dbr_status dbr_tensor(const dbr_algebra* a, const dbr_algebra* b, dbr_algebra** out);
DBR_API dbr_status dbr_gauge_transform(const dbr_algebra* alg, const char* matrix_json, dbr_algebra** out);
DBR_API dbr_status dbr_verify_certificate(const dbr_algebra* src, const dbr_algebra* dst, const char* cert_json,
                                          int* accepted);
/* JSON array of basis matrices */
DBR_API dbr_status dbr_constants_basis(const dbr_algebra* alg, unsigned deg_bound, char** out_json);

/* ---- invariants and triviality -------------------------------------- */

DBR_API dbr_status dbr_ad_matrix(const dbr_algebra* alg, char** out_json);
DBR_API dbr_status dbr_invariants(const dbr_algebra* alg, char** out_json);
DBR_API dbr_status dbr_e_values(const dbr_algebra* alg, char** out_json);
/* *separated = 1 and a witness object, or 0 and "null" */
DBR_API dbr_status dbr_separate(const dbr_algebra* a, const dbr_algebra* b, char** out_json, int* separated);
/* cert_json may be NULL; the verdict JSON is {"status","certificate","witness"} */
DBR_API dbr_status dbr_decide_trivial(const dbr_algebra* alg, const char* cert_json, char** out_json,
                                      dbr_verdict* verdict);
DBR_API dbr_status dbr_nilpotent_exp_certificate(const dbr_algebra* alg, char** out_json);
DBR_API dbr_status dbr_scalar_obstruction(const dbr_algebra* alg, char** out_json, int* found);

/* ---- finite commutative monoids ------------------------------------- */

DBR_API dbr_status dbr_monoid_from_json(const char* json, dbr_monoid** out);
DBR_API void dbr_monoid_free(dbr_monoid* m);
DBR_API dbr_status dbr_monoid_quotient(const dbr_monoid* m, const char* subset_json, char** out_json);
DBR_API dbr_status dbr_monoid_units(const dbr_monoid* m, char** out_json);
/* Elements with invertible class in M/N; *consistent reports whether the
 * direct formula agrees with the units of the computed quotient. */
DBR_API dbr_status dbr_monoid_quotient_units(const dbr_monoid* m, const char* subset_json, char** out_json,
                                             int* consistent);

/* ---- class registry ------------------------------------------------- */

DBR_API dbr_status dbr_registry_new(size_t tensor_bound, dbr_registry** out);
/* Reloads a persisted registry, re-verifying every certificate and witness. */
DBR_API dbr_status dbr_registry_from_json(const char* json, dbr_registry** out);
DBR_API dbr_status dbr_registry_to_json(const dbr_registry* reg, char** out_json);
DBR_API void dbr_registry_free(dbr_registry* reg);
DBR_API size_t dbr_registry_size(const dbr_registry* reg);
DBR_API dbr_status dbr_registry_add_algebra(dbr_registry* reg, const dbr_algebra* alg, size_t* index);
DBR_API dbr_status dbr_registry_add_equivalence(dbr_registry* reg, size_t i, size_t j, size_t amp_i, size_t amp_j,
                                                const char* cert_json);
DBR_API dbr_status dbr_registry_add_separation(dbr_registry* reg, size_t i, size_t j, int* separated);
/* *found = 1 and *unit_index = index of (M_1, 0) when A_i is certified trivial */
DBR_API dbr_status dbr_registry_certify_trivial(dbr_registry* reg, size_t i, size_t* unit_index, int* found);
DBR_API dbr_status dbr_registry_derive_tensor(dbr_registry* reg, size_t i, size_t j, size_t i2, size_t j2,
                                              size_t* t1, size_t* t2);
DBR_API dbr_status dbr_registry_distinguish(const dbr_registry* reg, size_t i, size_t j, dbr_distinction* out);

/* ---- worked examples ------------------------------------------------ */

/* JSON array of {"scenario","claim","passed","detail"} */
DBR_API dbr_status dbr_reproduce_examples(char** out_json, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* DIFFBRAUER_H */
