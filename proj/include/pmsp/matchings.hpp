#ifndef PMSP_MATCHINGS_HPP_
#define PMSP_MATCHINGS_HPP_

#include <vector>

#include "pmsp/graph.hpp"
#include "pmsp/polynomial.hpp"

namespace pmsp {

struct MatchingLimits {
  // Full 2^n sweep bound for the brute-force PMS oracle.
  int oracle_vertices = 18;
  // Bound for a single induced perfect-matching test.
  int matching_vertices = 24;
};

// table[mask] == true iff the subgraph induced by `mask` has a perfect
// matching. Classic over-subsets bitmask DP; the whole PMS structure of g in
// one sweep.
std::vector<bool> perfect_matching_table(const Graph& g);

// True iff g[s] contains a perfect matching (the empty set counts).
// SizeError when |s| exceeds limits.matching_vertices.
bool has_perfect_matching(const Graph& g, VertexSet s,
                          const MatchingLimits& limits = {});

// Exact p(G; z) by enumerating all subsets; SizeError when the vertex count
// exceeds limits.oracle_vertices.
Polynomial pms_poly_oracle(const Graph& g, const MatchingLimits& limits = {});

// m(G; z), the matching-count generating function, by the edge-deletion
// recurrence m(G) = m(G\e) + z m(G - {v,w}).
Polynomial matching_poly(const Graph& g);

}  // namespace pmsp

#endif  // PMSP_MATCHINGS_HPP_
