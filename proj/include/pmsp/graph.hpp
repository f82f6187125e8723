#ifndef PMSP_GRAPH_HPP_
#define PMSP_GRAPH_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "pmsp/errors.hpp"

namespace pmsp {

// Subset of vertices 0..63, bitmask semantics.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  static VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  std::uint64_t bits() const { return bits_; }
  bool contains(int v) const { return (bits_ >> v) & 1; }
  bool empty() const { return bits_ == 0; }
  int size() const;

  VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }
  VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  // Set difference.
  VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  bool operator==(const VertexSet&) const = default;

  bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  int lowest() const;  // -1 when empty

  std::vector<int> to_vector() const;

 private:
  std::uint64_t bits_ = 0;
};

// Finite simple labeled graph on vertices 0..n-1 with sorted adjacency
// lists. Values are immutable once built; all operations on graphs are pure
// functions returning new graphs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const;
  // All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;
  // Bitmask of v's neighbors; requires n <= 64.
  std::uint64_t neighbor_mask(int v) const;

  // Throws ArgumentError on loops, duplicates, or out-of-range endpoints.
  void add_edge(int u, int v);

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

}  // namespace pmsp

#endif  // PMSP_GRAPH_HPP_
