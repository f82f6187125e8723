#include "pmsp/families.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "pmsp/errors.hpp"
#include "pmsp/graph_algos.hpp"

namespace pmsp {

Graph make_path(int n) {
  if (n < 0) throw ArgumentError("path needs n >= 0");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw ArgumentError("cycle needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph make_complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph make_caterpillar(int n, int k) {
  if (n < 0 || k < 0) throw ArgumentError("caterpillar needs n, k >= 0");
  Graph g(n + n * k);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) g.add_edge(i, n + i * k + j);
  return g;
}

Graph make_kary_tree(int k, int r) {
  if (k < 1 || r < 0) throw ArgumentError("k-ary tree needs k >= 1, r >= 0");
  long long total = 1, layer = 1;
  for (int d = 1; d <= r; ++d) {
    layer *= k;
    total += layer;
    if (total > 1'000'000) throw SizeError("k-ary tree too large");
  }
  Graph g(static_cast<int>(total));
  // Breadth-first labels: children of vertex v are v*k+1 .. v*k+k.
  for (int v = 1; v < total; ++v) g.add_edge(v, (v - 1) / k);
  return g;
}

std::optional<int> recognize_path(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return std::nullopt;
  if (n == 1) return 1;
  if (g.edge_count() != n - 1 || !is_connected(g)) return std::nullopt;
  int ends = 0;
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    if (d == 1)
      ++ends;
    else if (d != 2)
      return std::nullopt;
  }
  return ends == 2 ? std::optional<int>(n) : std::nullopt;
}

std::optional<int> recognize_cycle(const Graph& g) {
  int n = g.vertex_count();
  if (n < 3 || g.edge_count() != n || !is_connected(g)) return std::nullopt;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) return std::nullopt;
  return n;
}

std::optional<CaterpillarShape> recognize_caterpillar(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2 || g.edge_count() != n - 1 || !is_connected(g)) return std::nullopt;
  VertexSet spine;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > 1) spine = spine.with(v);
  if (spine.empty()) return std::nullopt;  // single edge: a path
  auto spine_vec = spine.to_vector();
  int s = static_cast<int>(spine_vec.size());
  // Spine must induce a path; count leaves per spine vertex.
  int leaves0 = -1;
  int spine_ends = 0;
  for (int v : spine_vec) {
    int spine_deg = 0, leaf_deg = 0;
    for (int u : g.neighbors(v))
      (spine.contains(u) ? spine_deg : leaf_deg)++;
    if (s == 1) {
      if (spine_deg != 0) return std::nullopt;
    } else if (spine_deg == 1) {
      ++spine_ends;
    } else if (spine_deg != 2) {
      return std::nullopt;
    }
    if (leaves0 == -1) leaves0 = leaf_deg;
    if (leaf_deg != leaves0) return std::nullopt;
  }
  if (s > 1 && spine_ends != 2) return std::nullopt;
  if (leaves0 < 1) return std::nullopt;  // bare path
  // Spine path connectivity: edge count within spine must be s - 1 and the
  // degree profile above forces a single path, since g is a tree.
  return CaterpillarShape{s, leaves0};
}

std::optional<KaryTreeShape> recognize_kary_tree(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2 || g.edge_count() != n - 1 || !is_connected(g)) return std::nullopt;
  // Arity >= 2 only (arity 1 is a path). Candidate roots have degree k with
  // k >= 2 while every other internal vertex has degree k + 1.
  for (int root = 0; root < n; ++root) {
    int k = g.degree(root);
    if (k < 2) continue;
    std::vector<int> depth(n, -1);
    depth[root] = 0;
    std::deque<int> q{root};
    int leaf_depth = -1;
    bool ok = true;
    while (!q.empty() && ok) {
      int u = q.front();
      q.pop_front();
      int child_count = 0;
      for (int v : g.neighbors(u))
        if (depth[v] == -1) {
          depth[v] = depth[u] + 1;
          q.push_back(v);
          ++child_count;
        }
      if (child_count == 0) {
        if (leaf_depth == -1) leaf_depth = depth[u];
        if (depth[u] != leaf_depth) ok = false;
      } else if (child_count != k) {
        ok = false;
      }
    }
    if (ok && leaf_depth >= 1) return KaryTreeShape{k, leaf_depth};
  }
  return std::nullopt;
}

}  // namespace pmsp
