#include "pmsp/graph_algos.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <string>
#include <unordered_map>

namespace pmsp {

namespace {

void require_mask_width(const Graph& g) {
  if (g.vertex_count() > 64)
    throw SizeError("operation limited to graphs on at most 64 vertices");
}

std::vector<std::uint64_t> neighbor_masks(const Graph& g) {
  require_mask_width(g);
  std::vector<std::uint64_t> m(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) m[v] = g.neighbor_mask(v);
  return m;
}

Edge normalized(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

}  // namespace

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

RelabeledGraph induced_subgraph(const Graph& g, VertexSet keep) {
  int n = g.vertex_count();
  std::vector<int> old_to_new(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (keep.contains(v)) old_to_new[v] = next++;
  Graph out(next);
  for (auto [u, v] : g.edges())
    if (keep.contains(u) && keep.contains(v))
      out.add_edge(old_to_new[u], old_to_new[v]);
  return {std::move(out), std::move(old_to_new)};
}

RelabeledGraph delete_elements(const Graph& g, const std::vector<Edge>& edges,
                               VertexSet vertices) {
  int n = g.vertex_count();
  require_mask_width(g);
  for (auto [u, v] : edges)
    if (!g.has_edge(u, v))
      throw ArgumentError("edge " + std::to_string(u) + " " +
                          std::to_string(v) + " not present");
  for (int v : vertices.to_vector())
    if (v >= n) throw ArgumentError("vertex " + std::to_string(v) + " not present");

  VertexSet keep = VertexSet::full(n) - vertices;
  std::vector<int> old_to_new(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (keep.contains(v)) old_to_new[v] = next++;

  Graph out(next);
  for (auto [u, v] : g.edges()) {
    if (!keep.contains(u) || !keep.contains(v)) continue;
    bool removed = false;
    for (auto [a, b] : edges)
      if (normalized(a, b) == Edge{u, v}) removed = true;
    if (!removed) out.add_edge(old_to_new[u], old_to_new[v]);
  }
  return {std::move(out), std::move(old_to_new)};
}

std::vector<VertexSet> connected_components(const Graph& g) {
  int n = g.vertex_count();
  require_mask_width(g);
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::deque<int> q{s};
    seen[s] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      comp = comp.with(u);
      for (int v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = true;
          q.push_back(v);
        }
    }
    comps.push_back(comp);
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

BlockDecomposition blocks_and_cut_vertices(const Graph& g) {
  int n = g.vertex_count();
  require_mask_width(g);
  BlockDecomposition out;
  std::vector<int> disc(n, 0), low(n, 0);
  std::vector<Edge> stack;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = ++timer;
    int children = 0;
    for (int v : g.neighbors(u)) {
      if (v == parent) continue;
      if (disc[v] == 0) {
        ++children;
        stack.push_back(normalized(u, v));
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          if (parent != -1 || children > 1)
            out.cut_vertices = out.cut_vertices.with(u);
          std::vector<Edge> block;
          Edge top = normalized(u, v);
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == top) break;
          }
          std::sort(block.begin(), block.end());
          out.blocks.push_back(std::move(block));
        }
      } else if (disc[v] < disc[u]) {
        stack.push_back(normalized(u, v));
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };

  for (int s = 0; s < n; ++s)
    if (disc[s] == 0) dfs(s, -1);
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

bool is_biconnected(const Graph& g) {
  if (g.vertex_count() < 3 || !is_connected(g)) return false;
  return blocks_and_cut_vertices(g).cut_vertices.empty();
}

EarDecomposition open_ear_decomposition(const Graph& g) {
  int n = g.vertex_count();
  if (!is_biconnected(g))
    throw StructureError(
        "open ear decomposition requires a 2-connected graph on >= 3 vertices");

  // DFS tree from 0, ascending neighbor order.
  std::vector<int> parent(n, -1), disc(n, 0);
  int timer = 0;
  std::function<void(int)> dfs = [&](int u) {
    disc[u] = ++timer;
    for (int v : g.neighbors(u))
      if (disc[v] == 0) {
        parent[v] = u;
        dfs(v);
      }
  };
  dfs(0);

  // Lexicographically least fundamental cycle through the root.
  std::vector<int> best;
  for (int u : g.neighbors(0)) {
    if (parent[u] == 0) continue;  // tree edge, not a back edge
    std::vector<int> cyc;
    for (int w = u; w != -1; w = parent[w]) cyc.push_back(w);
    std::reverse(cyc.begin(), cyc.end());  // 0 ... u, closing edge u-0
    if (best.empty() || cyc < best) best = cyc;
  }
  if (best.empty())
    throw StructureError("no cycle through vertex 0");  // unreachable if 2-connected

  EarDecomposition out;
  out.initial_cycle = best;

  std::vector<bool> covered_v(n, false);
  std::vector<std::vector<bool>> covered_e(n, std::vector<bool>(n, false));
  int covered_edges = 0;
  auto cover_edge = [&](int a, int b) {
    covered_e[a][b] = covered_e[b][a] = true;
    ++covered_edges;
  };
  for (size_t i = 0; i < best.size(); ++i) {
    covered_v[best[i]] = true;
    cover_edge(best[i], best[(i + 1) % best.size()]);
  }

  while (covered_edges < g.edge_count()) {
    // Smallest uncovered edge leaving covered territory.
    int a = -1, b = -1;
    for (int u = 0; u < n && a == -1; ++u) {
      if (!covered_v[u]) continue;
      for (int v : g.neighbors(u))
        if (!covered_e[u][v]) {
          a = u;
          b = v;
          break;
        }
    }

    std::vector<int> ear{a, b};
    if (!covered_v[b]) {
      // Shortest walk from b back to covered territory avoiding a; internal
      // vertices are new by construction.
      std::vector<int> pred(n, -2);
      pred[a] = -3;
      pred[b] = -1;
      std::deque<int> q{b};
      int hit = -1;
      while (hit == -1) {
        int u = q.front();
        q.pop_front();
        for (int v : g.neighbors(u)) {
          if (pred[v] != -2) continue;
          pred[v] = u;
          if (covered_v[v]) {
            hit = v;
            break;
          }
          q.push_back(v);
        }
      }
      std::vector<int> tail;
      for (int w = hit; w != -1; w = pred[w]) tail.push_back(w);
      std::reverse(tail.begin(), tail.end());  // b ... hit
      ear.assign({a});
      ear.insert(ear.end(), tail.begin(), tail.end());
    }
    for (size_t i = 0; i + 1 < ear.size(); ++i) {
      covered_v[ear[i]] = covered_v[ear[i + 1]] = true;
      cover_edge(ear[i], ear[i + 1]);
    }
    out.ears.push_back(std::move(ear));
  }
  return out;
}

namespace {

struct ParityKey {
  std::uint64_t visited;
  int cur;
  int parity;
  bool operator==(const ParityKey&) const = default;
};

struct ParityKeyHash {
  size_t operator()(const ParityKey& k) const {
    std::uint64_t h = k.visited * 0x9e3779b97f4a7c15ULL;
    h ^= (static_cast<std::uint64_t>(k.cur) << 1) ^ k.parity;
    return std::hash<std::uint64_t>()(h);
  }
};

}  // namespace

bool edge_in_even_cycle(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw ArgumentError("edge " + std::to_string(u) + " " + std::to_string(v) +
                        " not present");
  require_mask_width(g);
  auto masks = neighbor_masks(g);
  std::unordered_map<ParityKey, bool, ParityKeyHash, std::equal_to<>> memo;

  // Odd-length simple u-v path in g minus uv?
  std::function<bool(int, std::uint64_t, int)> search =
      [&](int cur, std::uint64_t visited, int parity) -> bool {
    if (cur == v) return parity == 1;
    ParityKey key{visited, cur, parity};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool found = false;
    std::uint64_t cand = masks[cur] & ~visited;
    if (cur == u) cand &= ~(std::uint64_t{1} << v);  // uv itself is deleted
    for (std::uint64_t m = cand; m && !found; m &= m - 1) {
      int next = std::countr_zero(m);
      found = search(next, visited | (std::uint64_t{1} << next), parity ^ 1);
    }
    memo.emplace(key, found);
    return found;
  };
  return search(u, std::uint64_t{1} << u, 0);
}

namespace {

void bron_kerbosch(const std::vector<std::uint64_t>& masks, std::uint64_t r,
                   std::uint64_t p, std::uint64_t x,
                   std::vector<VertexSet>& out) {
  if (p == 0 && x == 0) {
    out.emplace_back(r);
    return;
  }
  // Deterministic pivot: most candidates eliminated, smallest index on ties.
  int pivot = -1, best = -1;
  for (std::uint64_t m = p | x; m; m &= m - 1) {
    int u = std::countr_zero(m);
    int cnt = std::popcount(p & masks[u]);
    if (cnt > best) {
      best = cnt;
      pivot = u;
    }
  }
  std::uint64_t cand = p & ~masks[pivot];
  for (std::uint64_t m = cand; m; m &= m - 1) {
    int vtx = std::countr_zero(m);
    std::uint64_t bit = std::uint64_t{1} << vtx;
    bron_kerbosch(masks, r | bit, p & masks[vtx], x & masks[vtx], out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return {};
  auto masks = neighbor_masks(g);
  std::vector<VertexSet> out;
  bron_kerbosch(masks, 0, VertexSet::full(n).bits(), 0, out);
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    return a.to_vector() < b.to_vector();
  });
  return out;
}

BipartitionResult is_bipartite(const Graph& g) {
  int n = g.vertex_count();
  require_mask_width(g);
  std::vector<int> color(n, -1), parent(n, -1);
  BipartitionResult res;
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = color[u] ^ 1;
          parent[v] = u;
          q.push_back(v);
        } else if (color[v] == color[u]) {
          // Odd cycle: paths to the common ancestor plus the edge uv.
          std::vector<int> up, vp;
          for (int w = u; w != -1; w = parent[w]) up.push_back(w);
          for (int w = v; w != -1; w = parent[w]) vp.push_back(w);
          int i = static_cast<int>(up.size()) - 1;
          int j = static_cast<int>(vp.size()) - 1;
          while (i > 0 && j > 0 && up[i - 1] == vp[j - 1]) {
            --i;
            --j;
          }
          res.bipartite = false;
          res.odd_cycle.assign(up.begin(), up.begin() + i + 1);
          for (int k = j - 1; k >= 0; --k) res.odd_cycle.push_back(vp[k]);
          return res;
        }
      }
    }
  }
  res.bipartite = true;
  for (int v = 0; v < n; ++v) {
    if (color[v] == 0)
      res.left = res.left.with(v);
    else
      res.right = res.right.with(v);
  }
  return res;
}

namespace {

// Does g contain an induced odd cycle on >= 5 vertices? Exhaustive over
// vertex subsets, so callers bound n.
bool has_odd_hole(const Graph& g) {
  int n = g.vertex_count();
  if (n > 30) throw SizeError("odd-hole search limited to 30 vertices");
  auto masks = neighbor_masks(g);
  std::uint64_t all = VertexSet::full(n).bits();
  for (std::uint64_t s = 0; s <= all; ++s) {
    int size = std::popcount(s);
    if (size < 5 || size % 2 == 0) continue;
    bool cycle = true;
    for (std::uint64_t m = s; m && cycle; m &= m - 1) {
      int v = std::countr_zero(m);
      if (std::popcount(masks[v] & s) != 2) cycle = false;
    }
    if (!cycle) continue;
    // 2-regular induced subgraph; connected means a single cycle.
    std::uint64_t seen = s & (~s + 1);
    while (true) {
      std::uint64_t grow = seen;
      for (std::uint64_t m = seen; m; m &= m - 1)
        grow |= masks[std::countr_zero(m)] & s;
      if (grow == seen) break;
      seen = grow;
    }
    if (seen == s) return true;
  }
  return false;
}

}  // namespace

bool is_perfect(const Graph& g, int exhaustive_limit) {
  if (g.vertex_count() > exhaustive_limit)
    throw SizeError("perfectness test limited to " +
                    std::to_string(exhaustive_limit) + " vertices");
  return !has_odd_hole(g) && !has_odd_hole(complement(g));
}

Graph build_dg(const Graph& g) {
  int n = g.vertex_count();
  Graph d(2 * n);
  for (int i = 0; i < n; ++i) d.add_edge(i, n + i);
  for (auto [u, v] : g.edges()) {
    d.add_edge(u, n + v);
    d.add_edge(v, n + u);
  }
  return d;
}

}  // namespace pmsp
