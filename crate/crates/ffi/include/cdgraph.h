#ifndef CDGRAPH_H
#define CDGRAPH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CdgStatus {
  CDG_STATUS_OK = 0,
  CDG_STATUS_NULL_POINTER = 1,
  CDG_STATUS_INVALID_UTF8 = 2,
  CDG_STATUS_PARSE = 3,
  CDG_STATUS_INVALID_ARGUMENT = 4,
  CDG_STATUS_RESOURCE_LIMIT = 5,
  CDG_STATUS_COMPUTATION = 6,
  CDG_STATUS_PANIC = 7,
} CdgStatus;

typedef enum CdgSolvability {
  CDG_SOLVABILITY_SOLVABLE = 0,
  CDG_SOLVABILITY_NONSOLVABLE = 1,
  CDG_SOLVABILITY_UNKNOWN = 2,
  CDG_SOLVABILITY_AUTO = 3,
} CdgSolvability;

typedef struct CdgDegrees CdgDegrees;

typedef struct CdgGraph CdgGraph;

typedef struct CdgGroup CdgGroup;

typedef struct CdgReport CdgReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. The pointer is
// valid until the next call into the library from the same thread.
const char *cdg_last_error_message(void);

// # Safety
// `s` must be null or a string returned by this library.
void cdg_string_free(char *s);

// Parses cycle-notation generators or group JSON.
//
// # Safety
// `text` must be a nul-terminated string; `out` must be writable.
enum CdgStatus cdg_group_parse(const char *text, size_t order_cap, struct CdgGroup **out);

// # Safety
// `g` must be null or a handle from this library, freed at most once.
void cdg_group_free(struct CdgGroup *g);

// # Safety
// `g` must be a valid handle; `out` must be writable.
enum CdgStatus cdg_group_order(const struct CdgGroup *g, uint64_t *out);

// # Safety
// `g` must be a valid handle; `out` must be writable.
enum CdgStatus cdg_group_is_solvable(const struct CdgGroup *g, bool *out);

// # Safety
// `g` must be a valid handle; `out` must be writable.
enum CdgStatus cdg_degrees_of_group(const struct CdgGroup *g, struct CdgDegrees **out);

// Parses `"1,15,16,17"` or a JSON array.
//
// # Safety
// `text` must be a nul-terminated string; `out` must be writable.
enum CdgStatus cdg_degrees_parse(const char *text, struct CdgDegrees **out);

// # Safety
// `d` must be null or a handle from this library, freed at most once.
void cdg_degrees_free(struct CdgDegrees *d);

// Writes the degrees in increasing order, with multiplicity, into `buf`.
// `len` receives the full count; at most `cap` entries are written.
//
// # Safety
// `d` must be a valid handle; `buf` must hold `cap` values or be null
// with `cap == 0`; `len` must be writable.
enum CdgStatus cdg_degrees_values(const struct CdgDegrees *d,
                                  uint64_t *buf,
                                  size_t cap,
                                  size_t *len);

// # Safety
// `d` must be a valid handle; `out` must be writable.
enum CdgStatus cdg_degrees_to_json(const struct CdgDegrees *d, char **out);

// Character degree graph of a degree multiset, vertices labelled by primes.
//
// # Safety
// `d` must be a valid handle; `out` must be writable.
enum CdgStatus cdg_graph_from_degrees(const struct CdgDegrees *d, struct CdgGraph **out);

// Parses an edge list such as `"3-5;2;17"`.
//
// # Safety
// `text` must be a nul-terminated string; `out` must be writable.
enum CdgStatus cdg_graph_parse_edge_list(const char *text, struct CdgGraph **out);

// # Safety
// `text` must be a nul-terminated string; `out` must be writable.
enum CdgStatus cdg_graph_parse_json(const char *text, struct CdgGraph **out);

// # Safety
// `g` must be null or a handle from this library, freed at most once.
void cdg_graph_free(struct CdgGraph *g);

// # Safety
// `g` must be a valid handle; `out` must be writable.
enum CdgStatus cdg_graph_vertex_count(const struct CdgGraph *g, size_t *out);

// # Safety
// `g` must be a valid handle; `out` must be writable.
enum CdgStatus cdg_graph_edge_count(const struct CdgGraph *g, size_t *out);

// # Safety
// `g` must be a valid handle; `out` must be writable.
enum CdgStatus cdg_graph_distinct_eigenvalues(const struct CdgGraph *g, size_t *out);

// # Safety
// `g` must be a valid handle; `out` must be writable.
enum CdgStatus cdg_graph_to_json(const struct CdgGraph *g, char **out);

// # Safety
// `g` must be a valid handle; `out` must be writable.
enum CdgStatus cdg_graph_to_edge_list(const struct CdgGraph *g, char **out);

// # Safety
// `g` must be a valid handle; `out` must be writable.
enum CdgStatus cdg_analyze_group(const struct CdgGroup *g,
                                 enum CdgSolvability solvability,
                                 struct CdgReport **out);

// `Auto` is rejected for degree input.
//
// # Safety
// `d` must be a valid handle; `out` must be writable.
enum CdgStatus cdg_analyze_degrees(const struct CdgDegrees *d,
                                   enum CdgSolvability solvability,
                                   struct CdgReport **out);

// `Auto` is rejected for graph input.
//
// # Safety
// `g` must be a valid handle; `out` must be writable.
enum CdgStatus cdg_analyze_graph(const struct CdgGraph *g,
                                 enum CdgSolvability solvability,
                                 struct CdgReport **out);

// Necessary conditions for a graph to be the character graph of a
// solvable group.
//
// # Safety
// `g` must be a valid handle; `out` must be writable.
enum CdgStatus cdg_screen_graph(const struct CdgGraph *g, struct CdgReport **out);

// Analyzes a named fixture under its own solvability assumption.
//
// # Safety
// `name` must be a nul-terminated string; `out` must be writable.
enum CdgStatus cdg_analyze_fixture(const char *name, size_t order_cap, struct CdgReport **out);

// # Safety
// `r` must be null or a handle from this library, freed at most once.
void cdg_report_free(struct CdgReport *r);

// True when no check failed.
//
// # Safety
// `r` must be a valid handle; `out` must be writable.
enum CdgStatus cdg_report_passed(const struct CdgReport *r, bool *out);

// # Safety
// `r` must be a valid handle; `out` must be writable.
enum CdgStatus cdg_report_check_count(const struct CdgReport *r, size_t *out);

// Name of the first failing check, or null when the report passed.
//
// # Safety
// `r` must be a valid handle; `out` must be writable.
enum CdgStatus cdg_report_first_failure(const struct CdgReport *r, char **out);

// # Safety
// `r` must be a valid handle; `out` must be writable.
enum CdgStatus cdg_report_to_json(const struct CdgReport *r, char **out);

// # Safety
// `r` must be a valid handle; `out` must be writable.
enum CdgStatus cdg_report_to_text(const struct CdgReport *r, char **out);

// # Safety
// `r` must be a valid handle; `out` must be writable.
enum CdgStatus cdg_report_to_dot(const struct CdgReport *r, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CDGRAPH_H */
