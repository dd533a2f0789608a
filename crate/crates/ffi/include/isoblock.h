#ifndef ISOBLOCK_H
#define ISOBLOCK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes.
typedef enum IsoblockStatus {
  ISOBLOCK_STATUS_OK = 0,
  ISOBLOCK_STATUS_INVALID_INPUT = 1,
  ISOBLOCK_STATUS_UNSUPPORTED = 2,
  ISOBLOCK_STATUS_BOUND_EXCEEDED = 3,
  ISOBLOCK_STATUS_NULL_POINTER = 4,
  ISOBLOCK_STATUS_INVALID_UTF8 = 5,
  ISOBLOCK_STATUS_PANIC = 6,
} IsoblockStatus;

// A modular context `(q, ℓ)`.
typedef struct IsoblockContext IsoblockContext;

// A symbol in normal form.
typedef struct IsoblockSymbol IsoblockSymbol;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. The pointer stays
// valid until the next failing call on the same thread; do not free it.
const char *isoblock_last_error(void);

// Releases a string returned by this library.
//
// # Safety
// `s` must be null or a pointer obtained from this library that was not freed before.
void isoblock_string_free(char *s);

// Creates the context for `q` an odd prime power and `ℓ` an odd prime not dividing `q`.
//
// # Safety
// `out` must be a valid pointer to writable storage for one handle.
enum IsoblockStatus isoblock_context_new(uint64_t q, uint64_t ell, struct IsoblockContext **out);

// Order `d` of `q²` mod `ℓ`, and whether `ℓ` is a linear prime.
//
// # Safety
// `ctx` must be a live context handle; `d` and `linear` must be valid for writes.
enum IsoblockStatus isoblock_context_info(const struct IsoblockContext *ctx,
                                          uint32_t *d,
                                          bool *linear);

// # Safety
// `ctx` must be null or a handle from [`isoblock_context_new`] not freed before.
void isoblock_context_free(struct IsoblockContext *ctx);

// Parses a symbol written `"[s1:λ | s2:μ]"`.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be valid for writes.
enum IsoblockStatus isoblock_symbol_parse(const char *text, struct IsoblockSymbol **out);

// The symbol `Θ_t(μ1, μ2)`; partitions are written `"3,1"`, the empty string for ∅.
//
// # Safety
// `mu1` and `mu2` must be NUL-terminated strings; `out` must be valid for writes.
enum IsoblockStatus isoblock_symbol_from_bipartition(int64_t t,
                                                     const char *mu1,
                                                     const char *mu2,
                                                     struct IsoblockSymbol **out);

// # Safety
// `sym` must be null or a symbol handle not freed before.
void isoblock_symbol_free(struct IsoblockSymbol *sym);

// Defect and rank of a symbol.
//
// # Safety
// `sym` must be a live symbol handle; `defect` and `rank` must be valid for writes.
enum IsoblockStatus isoblock_symbol_invariants(const struct IsoblockSymbol *sym,
                                               int64_t *defect,
                                               uint64_t *rank);

// Display form of a symbol; free the result with [`isoblock_string_free`].
//
// # Safety
// `sym` must be a live symbol handle; `out` must be valid for writes.
enum IsoblockStatus isoblock_symbol_to_string(const struct IsoblockSymbol *sym, char **out);

// The d-core (`cocore = false`) or d-cocore of a symbol, as a new handle.
//
// # Safety
// `sym` must be a live symbol handle; `out` must be valid for writes.
enum IsoblockStatus isoblock_symbol_core(const struct IsoblockSymbol *sym,
                                         uint32_t d,
                                         bool cocore,
                                         struct IsoblockSymbol **out);

// e-core and e-quotient of a partition as JSON `{"core": [...], "quotient": {...}}`.
//
// # Safety
// `partition` must be a NUL-terminated string; `out` must be valid for writes.
enum IsoblockStatus isoblock_partition_core_json(const char *partition,
                                                 uint32_t e,
                                                 int64_t charge,
                                                 char **out);

// Block label of the character `E_{Θ+, Θ-}` as JSON.
//
// # Safety
// `ctx`, `plus` and `minus` must be live handles; `out` must be valid for writes.
enum IsoblockStatus isoblock_block_of_json(const struct IsoblockContext *ctx,
                                           const struct IsoblockSymbol *plus,
                                           const struct IsoblockSymbol *minus,
                                           char **out);

// Brauer tree of the cyclic block containing `E_{Θ+, Θ-}` as JSON with `nodes`
// and `edges` arrays.
//
// # Safety
// `ctx`, `plus` and `minus` must be live handles; `out` must be valid for writes.
enum IsoblockStatus isoblock_brauer_tree_json(const struct IsoblockContext *ctx,
                                              const struct IsoblockSymbol *plus,
                                              const struct IsoblockSymbol *minus,
                                              char **out);

// Whether the block of `E_{Θ+, Θ-}` is RoCK.
//
// # Safety
// `ctx`, `plus` and `minus` must be live handles; `out` must be valid for writes.
enum IsoblockStatus isoblock_is_rock(const struct IsoblockContext *ctx,
                                     const struct IsoblockSymbol *plus,
                                     const struct IsoblockSymbol *minus,
                                     bool *out);

// Number of isolated blocks of `SO_{2n+1}(q)` at the context.
//
// # Safety
// `ctx` must be a live context handle; `out` must be valid for writes.
enum IsoblockStatus isoblock_block_count(const struct IsoblockContext *ctx,
                                         uint32_t n,
                                         uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ISOBLOCK_H */
