#include "pmsp/pms.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "pmsp/closed_forms.hpp"
#include "pmsp/families.hpp"
#include "pmsp/graph_algos.hpp"
#include "pmsp/graph_io.hpp"

namespace pmsp {

std::string rule_name(Rule rule) {
  switch (rule) {
    case Rule::kEmpty: return "empty";
    case Rule::kComponents: return "components";
    case Rule::kFamilyPath: return "family-path";
    case Rule::kFamilyCycle: return "family-cycle";
    case Rule::kFamilyCaterpillar: return "family-caterpillar";
    case Rule::kFamilyKaryTree: return "family-kary-tree";
    case Rule::kCutVertex: return "cut-vertex";
    case Rule::kEdgeRecurrence: return "edge-recurrence";
    case Rule::kOpenEar: return "open-ear";
    case Rule::kOracle: return "oracle";
  }
  return "?";
}

Polynomial cut_vertex_combine(const Polynomial& p_g, const Polynomial& pu_g,
                              const Polynomial& p_h, const Polynomial& pw_h) {
  return p_g * p_h - pu_g * pw_h;
}

Polynomial open_ear_combine_terms(
    const Polynomial& p_g, const Polynomial& p_p, const Polynomial& pv_g,
    const Polynomial& pv_p, const Polynomial& pw_g, const Polynomial& pw_p,
    const Polynomial& pvw_g, const Polynomial& pvw_p,
    const Polynomial& correction) {
  return p_g * p_p - pv_g * pv_p - pw_g * pw_p + pvw_g * pvw_p - correction;
}

namespace {

// Marked PMS polynomials of the path P_m at its endpoints, by closed form:
// p(P_m - endpoint) = p(P_{m-1}).
Polynomial path_poly_or_one(int m) {
  return m <= 0 ? Polynomial::one() : path_poly(m);
}
Polynomial path_marked_one_end(int m) {
  return path_poly(m) - path_poly_or_one(m - 1);
}
Polynomial path_marked_both_ends(int m) {
  return path_poly(m) - path_poly_or_one(m - 1) * Polynomial({Integer(2)}) +
         path_poly_or_one(m - 2);
}

// Longest path through `d` whose internal vertices all have degree 2;
// requires deg(d) == 2 and the component of d not to be a bare cycle.
std::vector<int> maximal_chain_through(const Graph& g, int d) {
  auto extend = [&](int start) {
    std::vector<int> out;
    int prev = d, cur = start;
    while (g.degree(cur) == 2 && cur != d) {
      out.push_back(cur);
      const auto& nb = g.neighbors(cur);
      int nxt = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = nxt;
    }
    out.push_back(cur);
    return out;
  };
  std::vector<int> left = extend(g.neighbors(d)[0]);
  std::vector<int> right = extend(g.neighbors(d)[1]);
  std::vector<int> ear(left.rbegin(), left.rend());
  ear.push_back(d);
  ear.insert(ear.end(), right.begin(), right.end());
  return ear;
}

}  // namespace

struct PmsEngine::EarTerms {
  std::vector<int> children;  // G, G-v, G-w, G-{v,w}
  Polynomial result;
  Polynomial correction;
};

PmsEngine::EarTerms PmsEngine::ear_terms(const Graph& g,
                                         const std::vector<int>& ear) {
  int n = g.vertex_count();
  int m = static_cast<int>(ear.size());
  int v = ear.front(), w = ear.back();

  VertexSet internals;
  for (int i = 1; i + 1 < m; ++i) internals = internals.with(ear[i]);
  VertexSet g_side = VertexSet::full(n) - internals;

  auto base = induced_subgraph(g, g_side);
  int vc = base.old_to_new[v], wc = base.old_to_new[w];
  int ng = base.graph.vertex_count();
  if (ng > cfg_.limits.oracle_vertices)
    throw RuleInapplicableError(
        "open-ear correction enumeration exceeds the oracle limit");

  EarTerms terms;
  int id_g = eval(base.graph);
  int id_gv = eval(induced_subgraph(base.graph,
                                    VertexSet::full(ng).without(vc)).graph);
  int id_gw = eval(induced_subgraph(base.graph,
                                    VertexSet::full(ng).without(wc)).graph);
  int id_gvw = eval(
      induced_subgraph(base.graph, VertexSet::full(ng).without(vc).without(wc))
          .graph);
  terms.children = {id_g, id_gv, id_gw, id_gvw};

  Polynomial p_g = node_poly(id_g);
  Polynomial pv_g = p_g - node_poly(id_gv);
  Polynomial pw_g = p_g - node_poly(id_gw);
  Polynomial pvw_g =
      p_g - node_poly(id_gv) - node_poly(id_gw) + node_poly(id_gvw);

  Polynomial p_p = path_poly(m);
  // v and w are the two endpoints of the ear path, so both one-end marked
  // polynomials coincide.
  Polynomial pend_p = path_marked_one_end(m);
  Polynomial pvw_p = path_marked_both_ends(m);

  // Correction sum: pairs (S, T) of PMS of the base graph and the ear path
  // counted once per set they jointly re-cover, per the two condition
  // families of the ear corollary.
  auto table_g = perfect_matching_table(base.graph);
  auto table_p = perfect_matching_table(make_path(m));
  std::uint64_t vbit = std::uint64_t{1} << vc, wbit = std::uint64_t{1} << wc;
  std::uint64_t pv_bit = 1, pw_bit = std::uint64_t{1} << (m - 1);

  std::vector<Integer> s_both(ng + 1, Integer(0)), s_vonly(ng + 1, Integer(0));
  for (std::uint64_t s = 0; s < table_g.size(); ++s) {
    if (!table_g[s]) continue;
    int size = std::popcount(s);
    // (a)(b): v, w in S; S and S - {v, w} perfectly matchable.
    if ((s & vbit) && (s & wbit) && table_g[s & ~vbit & ~wbit])
      s_both[size] += 1;
    // (a')(b'): v in S, w not; S and (S - v) + w perfectly matchable.
    if ((s & vbit) && !(s & wbit) && table_g[(s & ~vbit) | wbit])
      s_vonly[size] += 1;
  }
  std::vector<Integer> t_neither(m + 1, Integer(0)), t_wonly(m + 1, Integer(0));
  for (std::uint64_t t = 0; t < table_p.size(); ++t) {
    if (!table_p[t]) continue;
    int size = std::popcount(t);
    // (a)(c): v, w not in T; T and T + {v, w} perfectly matchable.
    if (!(t & pv_bit) && !(t & pw_bit) && table_p[t | pv_bit | pw_bit])
      t_neither[size] += 1;
    // (a')(c'): w in T, v not; T and (T - w) + v perfectly matchable.
    if ((t & pw_bit) && !(t & pv_bit) && table_p[(t & ~pw_bit) | pv_bit])
      t_wonly[size] += 1;
  }
  std::vector<Integer> corr((ng + m) / 2 + 1, Integer(0));
  for (int s = 0; s <= ng; ++s)
    for (int t = 0; t <= m; ++t) {
      Integer pairs = s_both[s] * t_neither[t] + s_vonly[s] * t_wonly[t];
      if (pairs != 0) corr[(s + t) / 2] += pairs;
    }
  terms.correction = Polynomial(std::move(corr));

  terms.result = open_ear_combine_terms(p_g, p_p, pv_g, pend_p, pw_g, pend_p,
                                        pvw_g, pvw_p, terms.correction);
  return terms;
}

int PmsEngine::eval(const Graph& g) {
  std::string key = write_graph6(g);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (g.vertex_count() > 64)
    throw SizeError("PMS computation limited to 64 vertices");

  int n = g.vertex_count();
  TraceNode node;
  node.graph6 = key;

  if (n == 0 || g.edge_count() == 0) {
    node.rule = Rule::kEmpty;
    node.result = Polynomial::one();
  } else if (auto comps = connected_components(g); comps.size() > 1) {
    node.rule = Rule::kComponents;
    node.result = Polynomial::one();
    for (const auto& comp : comps) {
      int child = eval(induced_subgraph(g, comp).graph);
      node.children.push_back(child);
      node.result = node.result * node_poly(child);
    }
  } else if (auto pn = recognize_path(g)) {
    node.rule = Rule::kFamilyPath;
    node.params = {*pn};
    node.result = path_poly(*pn);
  } else if (auto cn = recognize_cycle(g)) {
    node.rule = Rule::kFamilyCycle;
    node.params = {*cn};
    node.result = cycle_poly(*cn);
  } else if (auto cat = recognize_caterpillar(g)) {
    node.rule = Rule::kFamilyCaterpillar;
    node.params = {cat->spine, cat->leaves_per_spine};
    node.result = caterpillar_poly(cat->spine, cat->leaves_per_spine);
  } else if (auto kary = recognize_kary_tree(g)) {
    node.rule = Rule::kFamilyKaryTree;
    node.params = {kary->arity, kary->rank};
    node.result = kary_tree_poly(kary->arity, kary->rank);
  } else if (auto blocks = blocks_and_cut_vertices(g);
             !blocks.cut_vertices.empty()) {
    int v = blocks.cut_vertices.lowest();
    auto without_v = induced_subgraph(g, VertexSet::full(n).without(v));
    auto comps = connected_components(without_v.graph);
    // Map component masks back to original labels.
    std::vector<int> new_to_old(n - 1);
    for (int old = 0; old < n; ++old)
      if (without_v.old_to_new[old] != -1)
        new_to_old[without_v.old_to_new[old]] = old;
    VertexSet side1;
    for (int x : comps[0].to_vector()) side1 = side1.with(new_to_old[x]);
    VertexSet side2 = VertexSet::full(n) - side1;  // includes v
    side1 = side1.with(v);

    int id1 = eval(induced_subgraph(g, side1).graph);
    int id2 = eval(induced_subgraph(g, side2).graph);
    int id1v = eval(induced_subgraph(g, side1.without(v)).graph);
    int id2v = eval(induced_subgraph(g, side2.without(v)).graph);
    node.rule = Rule::kCutVertex;
    node.params = {v};
    node.children = {id1, id2, id1v, id2v};
    node.result = cut_vertex_combine(
        node_poly(id1), node_poly(id1) - node_poly(id1v), node_poly(id2),
        node_poly(id2) - node_poly(id2v));
  } else {
    // 2-connected beyond this point.
    std::optional<std::pair<int, int>> free_edge;
    for (auto [u, v] : g.edges())
      if (!edge_in_even_cycle(g, u, v)) {
        free_edge = {u, v};
        break;
      }
    if (free_edge) {
      auto [u, v] = *free_edge;
      int id_del = eval(delete_elements(g, {{u, v}}, {}).graph);
      int id_min = eval(
          induced_subgraph(g, VertexSet::full(n).without(u).without(v)).graph);
      node.rule = Rule::kEdgeRecurrence;
      node.params = {u, v};
      node.children = {id_del, id_min};
      node.result = node_poly(id_del) + node_poly(id_min).shifted(1);
    } else {
      int d = -1;
      for (int x = 0; x < n && d == -1; ++x)
        if (g.degree(x) == 2) d = x;
      bool done = false;
      if (d != -1) {
        std::vector<int> ear = maximal_chain_through(g, d);
        if (ear.front() != ear.back() &&
            static_cast<int>(ear.size()) <= n) {
          try {
            EarTerms terms = ear_terms(g, ear);
            node.rule = Rule::kOpenEar;
            node.params = ear;
            node.children = terms.children;
            node.correction = terms.correction;
            node.result = terms.result;
            done = true;
          } catch (const RuleInapplicableError&) {
            done = false;
          }
        }
      }
      if (!done) {
        node.rule = Rule::kOracle;
        node.result = pms_poly_oracle(g, cfg_.limits);
      }
    }
  }

  int id = static_cast<int>(trace_.nodes.size());
  trace_.nodes.push_back(std::move(node));
  memo_.emplace(std::move(key), id);
  return id;
}

Polynomial PmsEngine::pms(const Graph& g) {
  int root = eval(g);
  trace_.root = root;
  return node_poly(root);
}

Polynomial PmsEngine::edge_recurrence(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw ArgumentError("edge " + std::to_string(u) + " " + std::to_string(v) +
                        " not present");
  if (edge_in_even_cycle(g, u, v))
    throw RuleInapplicableError("edge " + std::to_string(u) + " " +
                                std::to_string(v) +
                                " lies in an even cycle");
  int n = g.vertex_count();
  Polynomial without_edge = node_poly(eval(delete_elements(g, {{u, v}}, {}).graph));
  Polynomial without_ends = node_poly(
      eval(induced_subgraph(g, VertexSet::full(n).without(u).without(v)).graph));
  return without_edge + without_ends.shifted(1);
}

Polynomial PmsEngine::vertex_recurrence(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw ArgumentError("vertex " + std::to_string(v) + " not present");
  for (int w : g.neighbors(v))
    if (edge_in_even_cycle(g, v, w))
      throw RuleInapplicableError("an edge at vertex " + std::to_string(v) +
                                  " lies in an even cycle");
  int n = g.vertex_count();
  Polynomial acc =
      node_poly(eval(induced_subgraph(g, VertexSet::full(n).without(v)).graph));
  for (int w : g.neighbors(v)) {
    Polynomial minus_pair = node_poly(eval(
        induced_subgraph(g, VertexSet::full(n).without(v).without(w)).graph));
    acc = acc + minus_pair.shifted(1);
  }
  return acc;
}

Polynomial PmsEngine::marked_pms_poly(const Graph& g, VertexSet s) {
  int n = g.vertex_count();
  if (!s.subset_of(VertexSet::full(n)))
    throw ArgumentError("marked set not contained in the graph");
  Polynomial acc;
  std::uint64_t bits = s.bits();
  // Inclusion-exclusion over subsets T of s: (-1)^|T| p(G - T).
  std::uint64_t t = 0;
  while (true) {
    Polynomial term =
        node_poly(eval(induced_subgraph(g, VertexSet::full(n) - VertexSet(t)).graph));
    if (std::popcount(t) % 2 == 0)
      acc = acc + term;
    else
      acc = acc - term;
    if (t == bits) break;
    t = (t - bits) & bits;  // next submask in increasing order
  }
  return acc;
}

Polynomial PmsEngine::open_ear_combine(const Graph& g,
                                       const std::vector<int>& ear) {
  int n = g.vertex_count();
  if (ear.size() < 3)
    throw RuleInapplicableError("ear needs at least one internal vertex");
  VertexSet seen;
  for (int x : ear) {
    if (x < 0 || x >= n) throw ArgumentError("ear vertex out of range");
    if (seen.contains(x)) throw RuleInapplicableError("ear revisits a vertex");
    seen = seen.with(x);
  }
  for (size_t i = 0; i + 1 < ear.size(); ++i)
    if (!g.has_edge(ear[i], ear[i + 1]))
      throw RuleInapplicableError("ear path edge missing from the graph");
  for (size_t i = 1; i + 1 < ear.size(); ++i)
    if (g.degree(ear[i]) != 2)
      throw RuleInapplicableError("ear internal vertex has degree != 2");
  return ear_terms(g, ear).result;
}

std::pair<Polynomial, ComputationTrace> pms_poly(const Graph& g, PmsConfig cfg) {
  PmsEngine engine(cfg);
  Polynomial p = engine.pms(g);
  return {std::move(p), engine.trace()};
}

Polynomial edge_recurrence(const Graph& g, int u, int v, PmsConfig cfg) {
  return PmsEngine(cfg).edge_recurrence(g, u, v);
}

Polynomial vertex_recurrence(const Graph& g, int v, PmsConfig cfg) {
  return PmsEngine(cfg).vertex_recurrence(g, v);
}

Polynomial marked_pms_poly(const Graph& g, VertexSet s, PmsConfig cfg) {
  return PmsEngine(cfg).marked_pms_poly(g, s);
}

Polynomial open_ear_combine(const Graph& g, const std::vector<int>& ear,
                            PmsConfig cfg) {
  return PmsEngine(cfg).open_ear_combine(g, ear);
}

Polynomial replay_trace(const ComputationTrace& trace) {
  if (trace.root < 0) throw ConsistencyError("trace has no root");
  std::vector<std::optional<Polynomial>> cache(trace.nodes.size());

  auto replay = [&](auto&& self, int id) -> Polynomial {
    if (cache[id]) return *cache[id];
    const TraceNode& node = trace.nodes[id];
    Polynomial out;
    switch (node.rule) {
      case Rule::kEmpty:
        out = Polynomial::one();
        break;
      case Rule::kComponents: {
        out = Polynomial::one();
        for (int c : node.children) out = out * self(self, c);
        break;
      }
      case Rule::kFamilyPath:
        out = path_poly(node.params[0]);
        break;
      case Rule::kFamilyCycle:
        out = cycle_poly(node.params[0]);
        break;
      case Rule::kFamilyCaterpillar:
        out = caterpillar_poly(node.params[0], node.params[1]);
        break;
      case Rule::kFamilyKaryTree:
        out = kary_tree_poly(node.params[0], node.params[1]);
        break;
      case Rule::kCutVertex: {
        Polynomial c0 = self(self, node.children[0]);
        Polynomial c1 = self(self, node.children[1]);
        Polynomial c2 = self(self, node.children[2]);
        Polynomial c3 = self(self, node.children[3]);
        out = cut_vertex_combine(c0, c0 - c2, c1, c1 - c3);
        break;
      }
      case Rule::kEdgeRecurrence:
        out = self(self, node.children[0]) +
              self(self, node.children[1]).shifted(1);
        break;
      case Rule::kOpenEar: {
        int m = static_cast<int>(node.params.size());
        Polynomial c0 = self(self, node.children[0]);
        Polynomial c1 = self(self, node.children[1]);
        Polynomial c2 = self(self, node.children[2]);
        Polynomial c3 = self(self, node.children[3]);
        Polynomial pv_g = c0 - c1, pw_g = c0 - c2;
        Polynomial pvw_g = c0 - c1 - c2 + c3;
        out = open_ear_combine_terms(c0, path_poly(m), pv_g,
                                     path_marked_one_end(m), pw_g,
                                     path_marked_one_end(m), pvw_g,
                                     path_marked_both_ends(m), node.correction);
        break;
      }
      case Rule::kOracle: {
        Graph g = parse_graph6(node.graph6);
        MatchingLimits limits;
        limits.oracle_vertices = g.vertex_count();
        out = pms_poly_oracle(g, limits);
        break;
      }
    }
    cache[id] = out;
    return out;
  };
  return replay(replay, trace.root);
}

}  // namespace pmsp
