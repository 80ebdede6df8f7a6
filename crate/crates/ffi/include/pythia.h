#ifndef PYTHIA_H
#define PYTHIA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PythiaStatus {
  PYTHIA_STATUS_OK = 0,
  /**
   * A precondition on the inputs does not hold.
   */
  PYTHIA_STATUS_DOMAIN = 1,
  /**
   * An exact result does not fit the arithmetic lane.
   */
  PYTHIA_STATUS_OVERFLOW = 2,
  PYTHIA_STATUS_NULL_POINTER = 3,
  PYTHIA_STATUS_INVALID_ARGUMENT = 4,
  PYTHIA_STATUS_INTERNAL = 5,
} PythiaStatus;

typedef enum PythiaClaim {
  PYTHIA_CLAIM_RESULT1 = 0,
  PYTHIA_CLAIM_RESULT2 = 1,
  PYTHIA_CLAIM_RESULT3 = 2,
  PYTHIA_CLAIM_PROP1 = 3,
  PYTHIA_CLAIM_PROP2 = 4,
  PYTHIA_CLAIM_THEOREM1 = 5,
  PYTHIA_CLAIM_THEOREM2 = 6,
} PythiaClaim;

typedef struct PythiaReport PythiaReport;

/**
 * Rows of equal arity, stored row-major.
 */
typedef struct PythiaTupleList PythiaTupleList;

typedef struct PythiaTriple {
  uint64_t a;
  uint64_t b;
  uint64_t c;
} PythiaTriple;

typedef struct PythiaTripleParams {
  uint64_t delta;
  uint64_t m;
  uint64_t n;
} PythiaTripleParams;

typedef struct PythiaTwoTwo {
  uint64_t x;
  uint64_t y;
  uint64_t z;
} PythiaTwoTwo;

typedef struct PythiaBox {
  uint64_t x;
  uint64_t y;
  uint64_t z;
  uint64_t t;
} PythiaBox;

/**
 * Inputs for one of the four shared-side families. Fields a family does
 * not use are ignored.
 */
typedef struct PythiaFamilyParams {
  /**
   * 1 to 4.
   */
  uint8_t family;
  uint64_t big_k;
  uint64_t m;
  uint64_t n;
  uint64_t big_m;
  uint64_t big_n;
  uint64_t d;
} PythiaFamilyParams;

typedef struct PythiaTrianglePair {
  struct PythiaTriple t1;
  struct PythiaTriple t2;
  struct PythiaTripleParams p1;
  struct PythiaTripleParams p2;
  uint64_t shared;
  /**
   * True when the shared length is the `δ(m² − n²)` leg of triangle 1,
   * false when it is the `2δmn` leg.
   */
  bool odd_leg;
} PythiaTrianglePair;

/**
 * Message for the most recent failure on this thread. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *pythia_last_error(void);

/**
 * Narrows the single-width arithmetic lane to `bits` (8 to 64). Affects
 * the whole process.
 */
enum PythiaStatus pythia_set_lane_bits(uint32_t bits);

/**
 * # Safety
 * `out` must be valid for a write of `u64`.
 */
enum PythiaStatus pythia_gcd(uint64_t a, uint64_t b, uint64_t *out);

uint64_t pythia_isqrt(uint64_t n);

bool pythia_is_perfect_square(uint64_t n);

/**
 * # Safety
 * `out` must be valid for a write of `PythiaTriple`.
 */
enum PythiaStatus pythia_triple_from_params(uint64_t delta,
                                            uint64_t m,
                                            uint64_t n,
                                            struct PythiaTriple *out);

/**
 * Canonical parameters of `(a, b, c)`; `leg_swap` is set when the even leg
 * is the shorter one.
 *
 * # Safety
 * `out` and `leg_swap` must be valid for writes.
 */
enum PythiaStatus pythia_params_of(uint64_t a,
                                   uint64_t b,
                                   uint64_t c,
                                   struct PythiaTripleParams *out,
                                   bool *leg_swap);

/**
 * # Safety
 * `out` must be valid for a write of `PythiaTwoTwo`.
 */
enum PythiaStatus pythia_two_two_from_params(uint64_t delta,
                                             uint64_t k,
                                             uint64_t lambda,
                                             struct PythiaTwoTwo *out);

/**
 * # Safety
 * `out` must be valid for a write of `PythiaBox`.
 */
enum PythiaStatus pythia_box_from_params(uint64_t v,
                                         uint64_t ell,
                                         uint64_t n,
                                         struct PythiaBox *out);

/**
 * # Safety
 * `out` and `diagonal` must be valid for writes.
 */
enum PythiaStatus pythia_face_diagonal_box(uint64_t delta,
                                           uint64_t m,
                                           uint64_t k,
                                           struct PythiaBox *out,
                                           uint64_t *diagonal);

/**
 * # Safety
 * `params` must point to a valid `PythiaFamilyParams`; `out` must be valid
 * for a write of `PythiaTrianglePair`.
 */
enum PythiaStatus pythia_family_pair(const struct PythiaFamilyParams *params,
                                     struct PythiaTrianglePair *out);

/**
 * Triples `(a, b, c)` with `c ≤ max_c`, sorted by `(c, a)`.
 *
 * # Safety
 * `out` must be valid for a write of a pointer. Release the list with
 * [`pythia_tuple_list_free`].
 */
enum PythiaStatus pythia_enumerate_triples(uint64_t max_c,
                                           bool primitive_only,
                                           size_t jobs,
                                           struct PythiaTupleList **out);

/**
 * Solutions `(x, y, z)` of `x² + 2y² = z²` with `z ≤ max_z`.
 *
 * # Safety
 * As for [`pythia_enumerate_triples`].
 */
enum PythiaStatus pythia_enumerate_two_two(uint64_t max_z,
                                           bool odd_k_only,
                                           size_t jobs,
                                           struct PythiaTupleList **out);

/**
 * Boxes `(x, y, z, t)` with `t ≤ max_t`, edges ascending.
 *
 * # Safety
 * As for [`pythia_enumerate_triples`].
 */
enum PythiaStatus pythia_enumerate_boxes(uint64_t max_t, size_t jobs, struct PythiaTupleList **out);

/**
 * Boxes `(e, e, z, t)` with `t ≤ max_t`.
 *
 * # Safety
 * As for [`pythia_enumerate_triples`].
 */
enum PythiaStatus pythia_equal_edge_boxes(uint64_t max_t,
                                          size_t jobs,
                                          struct PythiaTupleList **out);

/**
 * # Safety
 * `list` must be null or a live handle.
 */
size_t pythia_tuple_list_len(const struct PythiaTupleList *list);

/**
 * # Safety
 * `list` must be null or a live handle.
 */
size_t pythia_tuple_list_arity(const struct PythiaTupleList *list);

/**
 * Copies row `index` into `out`, which must hold `arity` values.
 *
 * # Safety
 * `list` must be a live handle; `out` must be valid for `arity` writes.
 */
enum PythiaStatus pythia_tuple_list_get(const struct PythiaTupleList *list,
                                        size_t index,
                                        uint64_t *out);

/**
 * # Safety
 * `list` must be null or a handle not yet freed.
 */
void pythia_tuple_list_free(struct PythiaTupleList *list);

/**
 * Bounded counterexample search.
 *
 * # Safety
 * `out` must be valid for a write of a pointer. Release the report with
 * [`pythia_report_free`].
 */
enum PythiaStatus pythia_verify(enum PythiaClaim claim,
                                uint64_t bound,
                                size_t jobs,
                                struct PythiaReport **out);

/**
 * # Safety
 * `report` must be null or a live handle.
 */
uint64_t pythia_report_examined(const struct PythiaReport *report);

/**
 * True when no counterexample was found.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
bool pythia_report_holds(const struct PythiaReport *report);

/**
 * Counterexamples as a borrowed list, valid while `report` lives. Do not
 * free it.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
const struct PythiaTupleList *pythia_report_counterexamples(const struct PythiaReport *report);

/**
 * The report as a JSON object. Release with [`pythia_string_free`].
 *
 * # Safety
 * `report` must be null or a live handle.
 */
char *pythia_report_to_json(const struct PythiaReport *report);

/**
 * # Safety
 * `report` must be null or a handle not yet freed.
 */
void pythia_report_free(struct PythiaReport *report);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void pythia_string_free(char *s);

#endif  /* PYTHIA_H */
