#ifndef PREDEQ_H
#define PREDEQ_H

/* C interface to the predeq library. Every call returns a status; on failure
 * the message (and, for parse errors, the source position) is available
 * through predeq_last_error* until the next call on the same thread.
 * Positions passed in are 1-based. Strings returned by a report live as long
 * as the report. */

#include <stddef.h>

#if defined(_WIN32)
#define PREDEQ_API __declspec(dllexport)
#else
#define PREDEQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum predeq_status {
  PREDEQ_OK = 0,
  PREDEQ_E_USAGE = 1,     /* bad arguments */
  PREDEQ_E_PARSE = 2,     /* malformed text; line/column set */
  PREDEQ_E_MODEL = 3,     /* unknown symbol/element, arity mismatch, limits */
  PREDEQ_E_INVARIANT = 4, /* internal consistency check failed */
  PREDEQ_E_INTERNAL = 5
} predeq_status;

typedef struct predeq_structure predeq_structure;
typedef struct predeq_systems predeq_systems;
typedef struct predeq_report predeq_report;

PREDEQ_API const char* predeq_version(void);
PREDEQ_API const char* predeq_last_error(void);
PREDEQ_API size_t predeq_last_error_line(void);   /* 0 when not a parse error */
PREDEQ_API size_t predeq_last_error_column(void);

PREDEQ_API predeq_status predeq_structure_parse(const char* text, size_t length,
                                                predeq_structure** out);
PREDEQ_API predeq_status predeq_structure_builtin(const char* name, size_t size,
                                                  predeq_structure** out);
PREDEQ_API void predeq_structure_free(predeq_structure* structure);

PREDEQ_API predeq_status predeq_systems_parse(const predeq_structure* structure, const char* text,
                                              size_t length, predeq_systems** out);
PREDEQ_API size_t predeq_systems_count(const predeq_systems* systems);
/* Index of the system called `name`, or (size_t)-1. */
PREDEQ_API size_t predeq_systems_find(const predeq_systems* systems, const char* name);
PREDEQ_API void predeq_systems_free(predeq_systems* systems);

PREDEQ_API predeq_status predeq_gen(const predeq_structure* structure, predeq_report** out);

PREDEQ_API predeq_status predeq_solve(const predeq_structure* structure,
                                      const predeq_systems* systems, size_t index,
                                      predeq_report** out);
PREDEQ_API predeq_status predeq_equiv(const predeq_structure* structure,
                                      const predeq_systems* systems, size_t first, size_t second,
                                      predeq_report** out);
PREDEQ_API predeq_status predeq_minimize(const predeq_structure* structure,
                                         const predeq_systems* systems, size_t index, int exact,
                                         predeq_report** out);
PREDEQ_API predeq_status predeq_classify(const predeq_systems* systems, size_t index,
                                         predeq_report** out);

/* keep may be NULL (complement of the fixed positions). */
PREDEQ_API predeq_status predeq_project(const predeq_structure* structure, const char* symbol,
                                        const size_t* keep, size_t keep_count,
                                        const size_t* fix_positions,
                                        const char* const* fix_elements, size_t fix_count,
                                        predeq_report** out);
/* labels[i] names the block of position i + 1; equal labels are glued. */
PREDEQ_API predeq_status predeq_glue(const predeq_structure* structure, const char* symbol,
                                     const size_t* labels, size_t count, predeq_report** out);

PREDEQ_API predeq_status predeq_staircase(const predeq_structure* structure, const char* symbol,
                                          size_t p, size_t t, size_t depth, predeq_report** out);
PREDEQ_API predeq_status predeq_clique(const predeq_structure* structure, const char* symbol,
                                       size_t depth, predeq_report** out);

typedef struct predeq_scan_caps {
  size_t max_fixed_positions;
  size_t max_fixings_per_subset;
  size_t max_permutations;
  const char* const* extra_candidates;
  size_t extra_count;
} predeq_scan_caps;

PREDEQ_API void predeq_scan_caps_default(predeq_scan_caps* caps);
PREDEQ_API predeq_status predeq_criterion(const predeq_structure* structure, size_t depth,
                                          const predeq_scan_caps* caps, predeq_report** out);
PREDEQ_API predeq_status predeq_graph(const predeq_structure* structure, const char* symbol,
                                      int with_loops, size_t depth, predeq_report** out);

/* Streamed int-* builtin, explored up to `budget` elements. */
PREDEQ_API predeq_status predeq_poset_builtin(const char* name, const char* selector,
                                              size_t depth, size_t budget, predeq_report** out);
/* Finite poset given by a binary symbol of a structure. */
PREDEQ_API predeq_status predeq_poset_structure(const predeq_structure* structure,
                                                const char* symbol, int strict,
                                                const char* selector, size_t depth, size_t budget,
                                                predeq_report** out);

PREDEQ_API const char* predeq_report_text(const predeq_report* report);
PREDEQ_API const char* predeq_report_json(const predeq_report* report);
PREDEQ_API void predeq_report_free(predeq_report* report);

#ifdef __cplusplus
}
#endif

#endif /* PREDEQ_H */
