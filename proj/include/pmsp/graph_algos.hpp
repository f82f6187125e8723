#ifndef PMSP_GRAPH_ALGOS_HPP_
#define PMSP_GRAPH_ALGOS_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "pmsp/graph.hpp"

namespace pmsp {

using Edge = std::pair<int, int>;

// New graph plus the old->new label map (-1 for removed vertices).
struct RelabeledGraph {
  Graph graph;
  std::vector<int> old_to_new;
};

Graph complement(const Graph& g);

// Removes the named edges, then the named vertices with all incident edges.
// Surviving vertices are relabeled compactly in ascending order.
RelabeledGraph delete_elements(const Graph& g, const std::vector<Edge>& edges,
                               VertexSet vertices);

// Subgraph induced by `keep`, relabeled compactly in ascending order.
RelabeledGraph induced_subgraph(const Graph& g, VertexSet keep);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct BlockDecomposition {
  VertexSet cut_vertices;
  // Each block is the edge set of a maximal 2-connected subgraph or a
  // bridge; every edge of the graph appears in exactly one block.
  std::vector<std::vector<Edge>> blocks;
};

BlockDecomposition blocks_and_cut_vertices(const Graph& g);

// Connected, nonempty, no cut vertices, at least 3 vertices.
bool is_biconnected(const Graph& g);

struct EarDecomposition {
  std::vector<int> initial_cycle;  // vertex sequence, closing edge implied
  // Each ear is a vertex path whose endpoints lie in the union of previous
  // pieces and whose internal vertices are new. Pieces partition E(g).
  std::vector<std::vector<int>> ears;
};

// Requires a 2-connected graph on >= 3 vertices; StructureError otherwise.
// Deterministic: the initial cycle is the lexicographically least
// fundamental cycle through vertex 0 of the ascending-order DFS tree.
EarDecomposition open_ear_decomposition(const Graph& g);

// True iff some even-length cycle contains uv; equivalently g\uv has an
// odd-length simple u-v path. Decided by DFS path enumeration with memoized
// pruning on (vertex, visited set, parity); fine at desk scale, a
// polynomial-time parity-path algorithm could be swapped in here.
bool edge_in_even_cycle(const Graph& g, int u, int v);

// All inclusion-maximal cliques, each exactly once, sorted lexicographically
// by vertex list (Bron-Kerbosch with deterministic pivoting).
std::vector<VertexSet> maximal_cliques(const Graph& g);

struct BipartitionResult {
  bool bipartite = false;
  VertexSet left, right;       // valid when bipartite
  std::vector<int> odd_cycle;  // witness cycle otherwise
};

// Edgeless graphs are bipartite with right = {} by convention.
BipartitionResult is_bipartite(const Graph& g);

// Strong-perfect-graph characterization by exhaustive induced odd hole /
// antihole search; SizeError above the limit.
bool is_perfect(const Graph& g, int exhaustive_limit = 12);

// Bipartite graph on 2n vertices 0..n-1 = [n], n..2n-1 = [n-bar];
// (i, n+j) is an edge iff i = j or ij is an edge of g.
Graph build_dg(const Graph& g);

}  // namespace pmsp

#endif  // PMSP_GRAPH_ALGOS_HPP_
