#ifndef UHSL2_H
#define UHSL2_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum Uhsl2Status {
  UHSL2_STATUS_OK = 0,
  UHSL2_STATUS_NULL_POINTER = 1,
  UHSL2_STATUS_INVALID_ARGUMENT = 2,
  UHSL2_STATUS_DOMAIN = 3,
  UHSL2_STATUS_SELECTION_RULE = 4,
  // A verification ran and at least one check failed.
  UHSL2_STATUS_VERIFICATION_FAILED = 5,
  UHSL2_STATUS_INTERNAL = 6,
} Uhsl2Status;

// Concrete tensor operator families.
typedef enum Uhsl2FamilyKind {
  // `(-a1+, -a2 + h(N2-1)a1+)` on the four-dimensional Fock space.
  UHSL2_FAMILY_KIND_FERMION_FIRST = 0,
  // `(a2+, -a1 - h(N1-1)a2+)` on the four-dimensional Fock space.
  UHSL2_FAMILY_KIND_FERMION_SECOND = 1,
  // Rank 1/2 boson family `W(j) -> W(j+1/2)`.
  UHSL2_FAMILY_KIND_BOSON_RAISING = 2,
  // Rank 1/2 boson family `W(j) -> W(j-1/2)`, `j >= 1/2`.
  UHSL2_FAMILY_KIND_BOSON_LOWERING = 3,
  // Rank 1 family built from the generators on `W(j)`.
  UHSL2_FAMILY_KIND_RANK1 = 4,
  // Rank 0 identity on `W(j)`.
  UHSL2_FAMILY_KIND_IDENTITY = 5,
} Uhsl2FamilyKind;

// Tensor operator family with its source and target spaces.
typedef struct Uhsl2Family Uhsl2Family;

// Irreducible representation `W(j)`.
typedef struct Uhsl2Irrep Uhsl2Irrep;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static nul-terminated string.
const char *uhsl2_version(void);

// Message of the most recent failure on this thread; empty after a success.
// Valid until the next call into the library from the same thread.
const char *uhsl2_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string from this library that has not been freed.
void uhsl2_string_free(char *s);

// Builds `W(j)`.
//
// # Safety
// `out` must be valid for writes.
enum Uhsl2Status uhsl2_irrep_new(int64_t twice_j, struct Uhsl2Irrep **out);

// Releases an irrep. Null is ignored.
//
// # Safety
// `irrep` must be null or a live handle from [`uhsl2_irrep_new`].
void uhsl2_irrep_free(struct Uhsl2Irrep *irrep);

// Dimension `2j + 1`, or 0 for a null handle.
//
// # Safety
// `irrep` must be null or a live handle.
uintptr_t uhsl2_irrep_dim(const struct Uhsl2Irrep *irrep);

// JSON matrix (`{"shape": [r, c], "data": [...]}`) of a generator: `X`, `Y`,
// `H`, `expHX`, `expmHX` or `unit`.
//
// # Safety
// `irrep` must be a live handle, `name` a nul-terminated string, `out` valid for writes.
enum Uhsl2Status uhsl2_irrep_generator_json(const struct Uhsl2Irrep *irrep,
                                            const char *name,
                                            char **out);

// `alpha_{k1,k2}^{m1,m2}` for `W(j1) (x) W(j2)` in canonical text form.
//
// # Safety
// `out` must be valid for writes.
enum Uhsl2Status uhsl2_alpha(int64_t twice_j1,
                             int64_t twice_j2,
                             int64_t twice_k1,
                             int64_t twice_k2,
                             int64_t twice_m1,
                             int64_t twice_m2,
                             char **out);

// Deformed Clebsch-Gordan coefficient: the `|k1 k2>` component of the
// coupled vector `|j m>` in `W(j1) (x) W(j2)`, in canonical text form.
//
// # Safety
// `out` must be valid for writes.
enum Uhsl2Status uhsl2_cgc(int64_t twice_j1,
                           int64_t twice_j2,
                           int64_t twice_j,
                           int64_t twice_k1,
                           int64_t twice_k2,
                           int64_t twice_m,
                           char **out);

// Decomposition of `W(j1) (x) W(j2)` as text, e.g. `1 ⊕ 0`.
//
// # Safety
// `out` must be valid for writes.
enum Uhsl2Status uhsl2_decompose(int64_t twice_j1, int64_t twice_j2, char **out);

// Builds a concrete family. `twice_j` is the source weight for the boson,
// rank 1 and identity kinds and is ignored for the fermion kinds.
//
// # Safety
// `out` must be valid for writes.
enum Uhsl2Status uhsl2_family_new(enum Uhsl2FamilyKind kind,
                                  int64_t twice_j,
                                  struct Uhsl2Family **out);

// Restricts a family to irreducible blocks of its source and target spaces,
// numbered in the order the spaces list them (for the fermion Fock space:
// 0 is `W(1/2)`, 1 and 2 are the two copies of `W(0)`).
//
// # Safety
// `family` must be a live handle and `out` valid for writes.
enum Uhsl2Status uhsl2_family_restrict(const struct Uhsl2Family *family,
                                       uintptr_t source_block,
                                       uintptr_t target_block,
                                       struct Uhsl2Family **out);

// Releases a family. Null is ignored.
//
// # Safety
// `family` must be null or a live handle.
void uhsl2_family_free(struct Uhsl2Family *family);

// Twice the rank, or -1 for a null handle.
//
// # Safety
// `family` must be null or a live handle.
int64_t uhsl2_family_twice_rank(const struct Uhsl2Family *family);

// JSON matrix of the component `t_{rank, m}`.
//
// # Safety
// `family` must be a live handle and `out` valid for writes.
enum Uhsl2Status uhsl2_family_component_json(const struct Uhsl2Family *family,
                                             int64_t twice_m,
                                             char **out);

// Checks the tensor operator criterion; writes the report as JSON when `out`
// is not null. Returns `VerificationFailed` if any check fails.
//
// # Safety
// `family` must be a live handle; `out` null or valid for writes.
enum Uhsl2Status uhsl2_family_verify(const struct Uhsl2Family *family, char **out);

// Reduced matrix element `I(rank, j2, j)` in canonical text form. The family
// must map `W(j2)` into `W(j)`; a triangle violation returns `SelectionRule`.
//
// # Safety
// `family` must be a live handle and `out` valid for writes.
enum Uhsl2Status uhsl2_reduced_matrix_element(const struct Uhsl2Family *family,
                                              int64_t twice_j2,
                                              int64_t twice_j,
                                              char **out);

// Runs every suite up to `max_j`; writes the reports as a JSON array of
// `{"stage", "reports"}` objects when `out` is not null.
//
// # Safety
// `out` must be null or valid for writes.
enum Uhsl2Status uhsl2_verify_all(int64_t twice_max_j, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* UHSL2_H */
