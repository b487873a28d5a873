#ifndef MAPBLOCKS_H
#define MAPBLOCKS_H

#pragma once

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MbStatus {
  MB_STATUS_OK = 0,
  MB_STATUS_NULL_POINTER = 1,
  MB_STATUS_INVALID_ARGUMENT = 2,
  MB_STATUS_INVALID_MAP = 3,
  MB_STATUS_CAP_EXCEEDED = 4,
  MB_STATUS_BUFFER_TOO_SMALL = 5,
  MB_STATUS_PANIC = 6,
} MbStatus;

typedef enum MbStrategy {
  MB_STRATEGY_AUTO = 0,
  MB_STRATEGY_REJECTION = 1,
  MB_STRATEGY_SPLITTING = 2,
} MbStrategy;

// A rooted planar map.
typedef struct MbMap MbMap;

// Block-size sampler for a fixed number of edges.
typedef struct MbSampler MbSampler;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *mb_version(void);

// Copies the calling thread's last error message into `buf`.
//
// # Safety
// `buf` must point to `len` writable bytes (or be null with `len == 0`);
// `written` may be null.
enum MbStatus mb_last_error(char *buf, uintptr_t len, uintptr_t *written);

// `M_n` in decimal.
//
// # Safety
// As for [`mb_last_error`].
enum MbStatus mb_count_maps(uint32_t n, char *buf, uintptr_t len, uintptr_t *written);

// `C_k` in decimal.
//
// # Safety
// As for [`mb_last_error`].
enum MbStatus mb_count_two_connected(uint32_t k, char *buf, uintptr_t len, uintptr_t *written);

// `P(G_k^{-3/2} ≤ x)`; NaN when `k < 2`.
double mb_frechet_type_cdf(uint32_t k, double x);

// Creates a sampler for maps with `n ≥ 1` edges. Sample `(r, s)` is drawn
// from the stream seeded by `(master_seed, r, s)`.
//
// # Safety
// `out` must be a valid pointer to writable storage for a handle.
enum MbStatus mb_sampler_new(uint64_t n,
                             enum MbStrategy strategy,
                             uint64_t master_seed,
                             struct MbSampler **out);

// Releases a sampler; null is ignored.
//
// # Safety
// `s` must come from [`mb_sampler_new`] and not be used afterwards.
void mb_sampler_free(struct MbSampler *s);

// Draws sample `(replica, sample)`: descending block sizes into `sizes`
// (capacity `cap`), their number into `len`, and the trial count into
// `trials` (may be null). Returns `BufferTooSmall` with `len` set when
// `cap` is too small.
//
// # Safety
// `s` must be a live sampler; `sizes` must hold `cap` elements; `len` must
// be valid.
enum MbStatus mb_sampler_sample(const struct MbSampler *s,
                                uint64_t replica,
                                uint64_t sample,
                                uint64_t *sizes,
                                uintptr_t cap,
                                uintptr_t *len,
                                uint64_t *trials);

// Parses a map from its JSON record `{"num_darts", "twin", "next", "root"}`.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be valid.
enum MbStatus mb_map_from_json(const char *json, struct MbMap **out);

// A uniform random rooted map with `n ≤ 6` edges from `seed`.
//
// # Safety
// `out` must be valid.
enum MbStatus mb_map_sample(uint64_t n, uint64_t seed, struct MbMap **out);

// Releases a map; null is ignored.
//
// # Safety
// `m` must come from this library and not be used afterwards.
void mb_map_free(struct MbMap *m);

// Number of edges; 0 for null.
//
// # Safety
// `m` must be null or a live map.
uintptr_t mb_map_num_edges(const struct MbMap *m);

// Whether the map is 2-connected (the trivial map counts as 2-connected).
//
// # Safety
// `m` must be a live map; `out` must be valid.
enum MbStatus mb_map_is_two_connected(const struct MbMap *m, bool *out);

// Descending block edge-counts of the map.
//
// # Safety
// As for [`mb_sampler_sample`].
enum MbStatus mb_map_block_sizes(const struct MbMap *m,
                                 uint64_t *sizes,
                                 uintptr_t cap,
                                 uintptr_t *len);

// Canonical JSON record of the map.
//
// # Safety
// `m` must be a live map; buffer rules as for [`mb_last_error`].
enum MbStatus mb_map_to_json(const struct MbMap *m, char *buf, uintptr_t len, uintptr_t *written);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MAPBLOCKS_H */
