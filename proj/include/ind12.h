#ifndef IND12_H
#define IND12_H

/* C interface for independent [1,2]-set computations on trees and small
 * graphs. An independent [1,2]-set is an independent dominating set in which
 * every vertex outside the set has one or two neighbours inside it.
 *
 * Conventions:
 *   - functions return IND12_OK for a positive answer / success, IND12_NO for
 *     a negative answer, and a negative code on error;
 *   - ind12_last_error() describes the most recent failure on this thread;
 *   - strings returned through char** are heap-allocated; release them with
 *     ind12_string_free;
 *   - vertex buffers are caller-provided; capacity of vertex_count(g) always
 *     suffices.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  IND12_OK = 0,
  IND12_NO = 1,
  IND12_EPARSE = -1,
  IND12_EINVAL = -2,
  IND12_ENOTTREE = -3,
  IND12_ENOTCONN = -4,
  IND12_ENOTCACTUS = -5,
  IND12_EPRECOND = -6,
  IND12_ECAP = -7,
  IND12_EINTERNAL = -8,
  IND12_ENOMEM = -9
};

typedef struct ind12_graph ind12_graph;

/* Message for the last failing call on the calling thread; "" when none. */
const char* ind12_last_error(void);

void ind12_string_free(char* s);

/* ---- graphs ---------------------------------------------------------- */

/* Text format: first non-comment line is the vertex count, then one "u v"
 * line per edge, 0-based; '#' starts a comment. */
int ind12_graph_parse(const char* text, ind12_graph** out);
/* endpoints holds 2*edge_count vertex indices: u0 v0 u1 v1 ... */
int ind12_graph_from_edges(uint32_t n, const uint32_t* endpoints, size_t edge_count,
                           ind12_graph** out);
int ind12_graph_serialize(const ind12_graph* g, char** out);
void ind12_graph_free(ind12_graph* g);

uint32_t ind12_graph_vertex_count(const ind12_graph* g);
size_t ind12_graph_edge_count(const ind12_graph* g);
/* 1 or 0; no error reporting */
int ind12_graph_is_tree(const ind12_graph* g);
int ind12_graph_is_connected(const ind12_graph* g);
int ind12_graph_is_cactus(const ind12_graph* g);

int ind12_random_tree(uint32_t n, uint64_t seed, ind12_graph** out);
/* cycle_bias in [0,1]: probability of attaching a pendant cycle instead of a
 * pendant edge while growing */
int ind12_random_cactus(uint32_t n, double cycle_bias, uint64_t seed, ind12_graph** out);

/* ---- set validation -------------------------------------------------- */

/* IND12_OK when set is an independent [1,2]-set of g, IND12_NO otherwise.
 * report (optional) receives "ok" or one line per violation. */
int ind12_check_set(const ind12_graph* g, const uint32_t* set, size_t set_len, char** report);

/* ---- tree algorithms ------------------------------------------------- */

/* Linear-time decision on trees. */
int ind12_tree_decide(const ind12_graph* g);
/* Minimum cardinality; IND12_NO when no set exists. */
int ind12_tree_min(const ind12_graph* g, uint32_t* min_size);
/* As ind12_tree_min, plus the number of table-rule applications (bounded by
 * twice the vertex count). Either out pointer may be NULL. */
int ind12_tree_stats(const ind12_graph* g, uint32_t* min_size, uint64_t* rule_applications);
/* Minimum-size witness into buf; *len receives its length. */
int ind12_tree_witness(const ind12_graph* g, uint32_t* buf, size_t cap, size_t* len);

/* IND12_OK when every vertex of the tree lies in some independent [1,2]-set. */
int ind12_tree_semiexcellent(const ind12_graph* g);
/* Witness set containing vertex x; requires a semiexcellent tree. */
int ind12_tree_witness_containing(const ind12_graph* g, uint32_t x, uint32_t* buf, size_t cap,
                                  size_t* len);
/* Splits the tree into components whose kept bipartition side dominates it;
 * one "component i = v[x] v[y] ..." line per component plus a "removed ="
 * line. Requires a tree without a vertex having two leaf neighbours. */
int ind12_tree_decompose(const ind12_graph* g, char** out);

/* ---- exhaustive search (small graphs) -------------------------------- */

/* cap bounds the vertex count (0 means the built-in default of 20). */
int ind12_oracle_decide(const ind12_graph* g, uint32_t cap);
int ind12_oracle_min(const ind12_graph* g, uint32_t cap, uint32_t* min_size);
/* All sets, one sorted space-separated line each. */
int ind12_oracle_sets(const ind12_graph* g, uint32_t cap, char** out);

/* ---- spanning trees and cactus graphs -------------------------------- */

/* Checks that tree spans g, set is an independent [1,2]-set of tree, and
 * every non-tree edge is admissible (both endpoints outside the set, or the
 * outside endpoint is a leaf of the component containing the member
 * endpoint). report receives the per-edge classification or the first
 * failure reason. */
int ind12_spanning_verify(const ind12_graph* g, const ind12_graph* tree, const uint32_t* set,
                          size_t set_len, char** report);
/* Builds such a spanning tree from a set valid on g. tree_text receives the
 * serialized tree, report the removed-edge classification. */
int ind12_spanning_construct(const ind12_graph* g, const uint32_t* set, size_t set_len,
                             char** tree_text, char** report);
/* Existence of an independent [1,2]-set of a cactus graph, decided through
 * its spanning trees. budget caps the search (0 means the built-in default). */
int ind12_cactus_decide(const ind12_graph* g, uint64_t budget);

#ifdef __cplusplus
}
#endif

#endif /* IND12_H */
