#ifndef LINECOLOUR_H
#define LINECOLOUR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LcStatus {
  LC_STATUS_OK = 0,
  /**
   * Palette smaller than the local bound.
   */
  LC_STATUS_INFEASIBLE = 1,
  LC_STATUS_PARSE = 2,
  /**
   * A bug in the library; please report it.
   */
  LC_STATUS_INVARIANT = 3,
  LC_STATUS_NULL_POINTER = 4,
  LC_STATUS_INVALID_ARGUMENT = 5,
  /**
   * The output buffer is too short; the required length was written.
   */
  LC_STATUS_BUFFER_TOO_SMALL = 6,
} LcStatus;

/**
 * Opaque edge-colouring handle.
 */
typedef struct LcEdgeColouring LcEdgeColouring;

/**
 * Opaque multigraph handle.
 */
typedef struct LcMultigraph LcMultigraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next call into this library from the same thread.
 */
const char *lc_last_error(void);

/**
 * A multigraph on `n` vertices with no edges.
 */
struct LcMultigraph *lc_multigraph_new(size_t n);

/**
 * Parses the `p mgraph` text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
enum LcStatus lc_multigraph_parse(const char *text, struct LcMultigraph **out);

/**
 * Adds an edge `uv`; its id is written to `edge` when that is non-NULL.
 *
 * # Safety
 * `g` must come from this library and not be freed.
 */
enum LcStatus lc_multigraph_add_edge(struct LcMultigraph *g, size_t u, size_t v, size_t *edge);

/**
 * # Safety
 * `g` must be NULL or a live handle from this library.
 */
size_t lc_multigraph_vertex_count(const struct LcMultigraph *g);

/**
 * # Safety
 * `g` must be NULL or a live handle from this library.
 */
size_t lc_multigraph_edge_count(const struct LcMultigraph *g);

/**
 * # Safety
 * `g` must be NULL or a handle from this library, freed at most once.
 */
void lc_multigraph_free(struct LcMultigraph *g);

/**
 * Writes the local edge bound of `g` to `gamma`.
 *
 * # Safety
 * `g` must be a live handle and `gamma` writable.
 */
enum LcStatus lc_local_edge_bound(const struct LcMultigraph *g, size_t *gamma);

/**
 * Edge-colours `g` with colours `1..=k`; `k = 0` means the local bound.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum LcStatus lc_edge_colour(const struct LcMultigraph *g, size_t k, struct LcEdgeColouring **out);

/**
 * # Safety
 * `c` must be NULL or a live handle from this library.
 */
size_t lc_edge_colouring_colours_used(const struct LcEdgeColouring *c);

/**
 * Copies the colour of every edge, by edge id, into `buf`. `needed`
 * receives the edge count whether or not `buf` is long enough.
 *
 * # Safety
 * `c` must be a live handle; `buf` must hold `len` values.
 */
enum LcStatus lc_edge_colouring_get(const struct LcEdgeColouring *c,
                                    uint32_t *buf,
                                    size_t len,
                                    size_t *needed);

/**
 * # Safety
 * `c` must be NULL or a handle from this library, freed at most once.
 */
void lc_edge_colouring_free(struct LcEdgeColouring *c);

/**
 * Colours the quasi-line graph described by a decomposition tree in the
 * `p qltree` format, which must keep all leaves inline. Vertex colours go
 * to `buf`; `used` and `gamma` receive the colour count and the local
 * vertex bound when non-NULL.
 *
 * # Safety
 * `text` must be NUL-terminated; `buf` must hold `len` values.
 */
enum LcStatus lc_quasiline_colour(const char *text,
                                  uint32_t *buf,
                                  size_t len,
                                  size_t *needed,
                                  size_t *used,
                                  size_t *gamma);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* LINECOLOUR_H */
