#include "pmsp/matchings.hpp"

#include <bit>
#include <string>
#include <unordered_map>

#include "pmsp/graph_algos.hpp"
#include "pmsp/graph_io.hpp"

namespace pmsp {

std::vector<bool> perfect_matching_table(const Graph& g) {
  int n = g.vertex_count();
  if (n > 28) throw SizeError("perfect-matching table limited to 28 vertices");
  std::vector<std::uint64_t> masks(n);
  for (int v = 0; v < n; ++v) masks[v] = g.neighbor_mask(v);
  std::vector<bool> table(std::size_t{1} << n, false);
  table[0] = true;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    if (std::popcount(s) % 2) continue;
    int v = std::countr_zero(s);
    std::uint64_t partners = masks[v] & s;
    bool ok = false;
    for (std::uint64_t m = partners; m && !ok; m &= m - 1) {
      int u = std::countr_zero(m);
      ok = table[s & ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << u)];
    }
    table[s] = ok;
  }
  return table;
}

bool has_perfect_matching(const Graph& g, VertexSet s,
                          const MatchingLimits& limits) {
  if (g.vertex_count() > 64)
    throw SizeError("vertex-set operations limited to 64 vertices");
  if (s.size() % 2 != 0) return false;
  if (s.empty()) return true;
  if (s.size() > limits.matching_vertices)
    throw SizeError("matching test limited to " +
                    std::to_string(limits.matching_vertices) + " vertices");
  if (!s.subset_of(VertexSet::full(g.vertex_count())))
    throw ArgumentError("vertex set not contained in the graph");
  auto sub = induced_subgraph(g, s);
  auto table = perfect_matching_table(sub.graph);
  return table[VertexSet::full(sub.graph.vertex_count()).bits()];
}

Polynomial pms_poly_oracle(const Graph& g, const MatchingLimits& limits) {
  int n = g.vertex_count();
  if (n > limits.oracle_vertices)
    throw SizeError("PMS oracle limited to " +
                    std::to_string(limits.oracle_vertices) + " vertices");
  auto table = perfect_matching_table(g);
  std::vector<Integer> coeffs(n / 2 + 1, Integer(0));
  for (std::uint64_t s = 0; s < table.size(); ++s)
    if (table[s]) coeffs[std::popcount(s) / 2] += 1;
  return Polynomial(std::move(coeffs));
}

namespace {

Polynomial matching_poly_rec(const Graph& g,
                             std::unordered_map<std::string, Polynomial>& memo) {
  if (g.edge_count() == 0) return Polynomial::one();
  std::string key = write_graph6(g);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  auto [u, v] = g.edges().front();
  Polynomial without_edge =
      matching_poly_rec(delete_elements(g, {{u, v}}, {}).graph, memo);
  Polynomial without_ends = matching_poly_rec(
      induced_subgraph(g, VertexSet::full(g.vertex_count()).without(u).without(v))
          .graph,
      memo);
  Polynomial result = without_edge + without_ends.shifted(1);
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

Polynomial matching_poly(const Graph& g) {
  std::unordered_map<std::string, Polynomial> memo;
  return matching_poly_rec(g, memo);
}

}  // namespace pmsp
