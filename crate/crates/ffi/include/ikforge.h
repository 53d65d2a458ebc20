#ifndef IKFORGE_H
#define IKFORGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum IkRule {
  /**
   * The reduced graph is not planar.
   */
  IK_RULE_NONE = 0,
  IK_RULE_EDGE_COUNT = 1,
  IK_RULE_EMBEDDING = 2,
} IkRule;

typedef enum IkStatus {
  IK_STATUS_OK = 0,
  IK_STATUS_NULL_POINTER = 1,
  IK_STATUS_INVALID_UTF8 = 2,
  IK_STATUS_PARSE_ERROR = 3,
  IK_STATUS_INVALID_GRAPH = 4,
  IK_STATUS_OUT_OF_RANGE = 5,
  IK_STATUS_UNKNOWN_NAME = 6,
  IK_STATUS_NOT_FOUND = 7,
  IK_STATUS_UNSUPPORTED = 8,
  IK_STATUS_PANIC = 9,
} IkStatus;

/**
 * Opaque graph handle.
 */
typedef struct IkGraph IkGraph;

/**
 * Outcome of deleting two vertices and reducing.
 */
typedef struct IkReduction {
  size_t edge_count;
  /**
   * Edge count predicted by the counting formula.
   */
  int64_t predicted;
  bool eliminates;
  enum IkRule rule;
} IkReduction;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread. Valid until the next
 * call on the same thread; never null.
 */
const char *ik_last_error(void);

/**
 * Static description of a status code.
 */
const char *ik_status_message(enum IkStatus status);

/**
 * Library version, static.
 */
const char *ik_version(void);

/**
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
enum IkStatus ik_graph_from_graph6(const char *text, struct IkGraph **out);

/**
 * Builds a graph from `edge_count` pairs stored flat in `pairs`
 * (`2 * edge_count` entries). Repeated pairs become parallel edges.
 *
 * # Safety
 * `pairs` must hold `2 * edge_count` readable values and `out` be writable.
 */
enum IkStatus ik_graph_from_edges(size_t order,
                                  const uint32_t *pairs,
                                  size_t edge_count,
                                  struct IkGraph **out);

/**
 * # Safety
 * `name` must be a NUL-terminated string and `out` writable.
 */
enum IkStatus ik_catalog_graph(const char *name, struct IkGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library not yet freed.
 */
void ik_graph_free(struct IkGraph *g);

/**
 * # Safety
 * `g` must be null or a live handle. Null yields 0.
 */
size_t ik_graph_order(const struct IkGraph *g);

/**
 * Edges counted with multiplicity.
 *
 * # Safety
 * `g` must be null or a live handle. Null yields 0.
 */
size_t ik_graph_edge_count(const struct IkGraph *g);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum IkStatus ik_graph_degree(const struct IkGraph *g, size_t v, size_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum IkStatus ik_graph_is_planar(const struct IkGraph *g, bool *out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum IkStatus ik_graph_is_bipartite(const struct IkGraph *g, bool *out);

/**
 * Hex canonical form: equal strings iff isomorphic graphs.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum IkStatus ik_graph_canonical_hex(const struct IkGraph *g, char **out);

/**
 * Fails with `IK_STATUS_UNSUPPORTED` for multigraphs and graphs on more
 * than 62 vertices.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum IkStatus ik_graph_to_graph6(const struct IkGraph *g, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void ik_string_free(char *s);

/**
 * Deletes `a` and `b`, reduces, and reports whether the result is planar.
 * Optionally returns the reduced multigraph through `reduced`.
 *
 * # Safety
 * `g` must be a live handle, `out` writable, `reduced` null or writable.
 */
enum IkStatus ik_reduce(const struct IkGraph *g,
                        size_t a,
                        size_t b,
                        struct IkReduction *out,
                        struct IkGraph **reduced);

/**
 * First eliminating vertex pair in lexicographic order. Returns
 * `IK_STATUS_NOT_FOUND` when no pair eliminates the graph.
 *
 * # Safety
 * `g` must be a live handle; `a`, `b` and `out` writable.
 */
enum IkStatus ik_obstruction_scan(const struct IkGraph *g,
                                  size_t *a,
                                  size_t *b,
                                  struct IkReduction *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IKFORGE_H */
