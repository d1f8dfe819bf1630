#ifndef DRGKIT_H
#define DRGKIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Request every nonzero Krein parameter in reports.
 */
#define DRG_REPORT_KREIN_FULL 1

/**
 * Treat the graph as 2-bounded in reports.
 */
#define DRG_REPORT_ASSUME_2_BOUNDED 2

typedef enum DrgStatus {
  DRG_STATUS_OK = 0,
  DRG_STATUS_NULL_POINTER = 1,
  DRG_STATUS_INVALID_UTF8 = 2,
  /**
   * Parse or feasibility failure of the input.
   */
  DRG_STATUS_INVALID_INPUT = 3,
  DRG_STATUS_UNSUPPORTED = 4,
  DRG_STATUS_OUT_OF_RANGE = 5,
  /**
   * Two independent computations disagreed.
   */
  DRG_STATUS_INTERNAL = 6,
} DrgStatus;

typedef struct DrgArray DrgArray;

typedef struct DrgGraph DrgGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *drg_version(void);

/**
 * Message for the last failing call on this thread; empty after success.
 * Valid until the next call on the same thread.
 */
const char *drg_last_error(void);

void drg_string_free(char *s);

/**
 * Parses `"b0,...;c1,..."`, validates it and computes its spectrum.
 */
enum DrgStatus drg_array_parse(const char *text, struct DrgArray **out);

void drg_array_free(struct DrgArray *a);

enum DrgStatus drg_array_diameter(const struct DrgArray *a, size_t *out);

/**
 * Canonical text `"b0,...;c1,..."`; free with `drg_string_free`.
 */
enum DrgStatus drg_array_text(const struct DrgArray *a, char **out);

/**
 * Vertex count as a decimal string.
 */
enum DrgStatus drg_array_vertex_count(const struct DrgArray *a, char **out);

/**
 * `θ_i` as JSON: `"p/q"` or `{"min_poly": [...], "interval": [lo, hi]}`.
 */
enum DrgStatus drg_array_eigenvalue(const struct DrgArray *a, size_t i, char **out);

/**
 * `m_i` as a decimal string.
 */
enum DrgStatus drg_array_multiplicity(const struct DrgArray *a, size_t i, char **out);

/**
 * Writes 1 if `E_i` is a light tail, else 0; `associated` receives the
 * index of `F`, or -1.
 */
enum DrgStatus drg_array_light_tail(const struct DrgArray *a,
                                    size_t i,
                                    int32_t *is_light_tail,
                                    int64_t *associated);

/**
 * Full JSON report; `flags` is a bitwise OR of the `DRG_REPORT_*` constants.
 */
enum DrgStatus drg_array_report_json(const struct DrgArray *a, uint32_t flags, char **out);

/**
 * Hermitian dual polar graph for `(d, r)` in `{(2,2), (3,2), (2,3)}`.
 */
enum DrgStatus drg_graph_hermitian(size_t d, uint64_t r, struct DrgGraph **out);

/**
 * Hamming graph `H(d, q)`.
 */
enum DrgStatus drg_graph_hamming(size_t d, size_t q, struct DrgGraph **out);

void drg_graph_free(struct DrgGraph *g);

enum DrgStatus drg_graph_vertex_count(const struct DrgGraph *g, size_t *out);

enum DrgStatus drg_graph_edge_count(const struct DrgGraph *g, size_t *out);

/**
 * Edge list, one `"u v"` line per edge.
 */
enum DrgStatus drg_graph_edge_list(const struct DrgGraph *g, char **out);

/**
 * Verifies distance-regularity and returns the measured array as a new handle.
 */
enum DrgStatus drg_graph_measure(const struct DrgGraph *g, struct DrgArray **out);

/**
 * Graph-level check that `E_D ∘ E_D` is a light-tail square; writes 1 or 0.
 */
enum DrgStatus drg_graph_light_tail(const struct DrgGraph *g,
                                    const struct DrgArray *a,
                                    int32_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DRGKIT_H */
