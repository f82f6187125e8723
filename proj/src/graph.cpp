#include "pmsp/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace pmsp {

int VertexSet::size() const { return std::popcount(bits_); }

int VertexSet::lowest() const {
  return bits_ == 0 ? -1 : std::countr_zero(bits_);
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> v;
  for (std::uint64_t b = bits_; b; b &= b - 1) v.push_back(std::countr_zero(b));
  return v;
}

Graph::Graph(int n) : n_(n), adj_(n) {
  if (n < 0) throw ArgumentError("negative vertex count");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw ArgumentError("vertex " + std::to_string(v) + " out of range [0, " +
                        std::to_string(n_) + ")");
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::uint64_t Graph::neighbor_mask(int v) const {
  check_vertex(v);
  if (n_ > 64) throw SizeError("bitmask operations need at most 64 vertices");
  std::uint64_t m = 0;
  for (int u : adj_[v]) m |= std::uint64_t{1} << u;
  return m;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v))
    throw ArgumentError("duplicate edge " + std::to_string(u) + " " +
                        std::to_string(v));
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
}

}  // namespace pmsp
