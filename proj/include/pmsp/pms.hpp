#ifndef PMSP_PMS_HPP_
#define PMSP_PMS_HPP_

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pmsp/graph.hpp"
#include "pmsp/matchings.hpp"
#include "pmsp/polynomial.hpp"

namespace pmsp {

struct PmsConfig {
  MatchingLimits limits;
};

// Rule applied at one step of a PMS-polynomial computation.
enum class Rule {
  kEmpty,             // no vertices / no edges
  kComponents,        // product over connected components
  kFamilyPath,        // closed form p(P_n)
  kFamilyCycle,       // closed form p(C_n)
  kFamilyCaterpillar, // closed form p(cat(n, k))
  kFamilyKaryTree,    // closed form p(Lambda_{k, r})
  kCutVertex,         // p(G1) p(G2) - p_v(G1) p_v(G2)
  kEdgeRecurrence,    // p(G\e) + z p(G - {v, w}), e in no even cycle
  kOpenEar,           // ear corollary on an open ear
  kOracle,            // brute-force subset sweep
};

std::string rule_name(Rule rule);

// One node per distinct (relabeled) subgraph encountered; shared subresults
// appear once and are referenced by several parents, so the trace is a DAG.
struct TraceNode {
  std::string graph6;
  Rule rule = Rule::kEmpty;
  // Rule parameters in the node's own labels: family sizes, the cut vertex,
  // the recurrence edge, or the ear vertex path.
  std::vector<int> params;
  std::vector<int> children;
  Polynomial correction;  // open-ear correction sum
  Polynomial result;
};

struct ComputationTrace {
  std::vector<TraceNode> nodes;
  int root = -1;
};

// Recomputes every node from its children according to its rule (closed
// forms and oracle leaves are recomputed from the stored graph) and returns
// the root polynomial. Used to certify that a trace is faithful.
Polynomial replay_trace(const ComputationTrace& trace);

// Dispatcher for p(G; z). Strategy order: connected components multiply;
// recognized families use closed forms; cut vertices split the graph; an
// edge in no even cycle drives the deletion recurrence; otherwise an open
// ear is peeled; a brute-force oracle is the last resort (SizeError past its
// limit). Output is bit-identical to pms_poly_oracle wherever the oracle is
// feasible.
class PmsEngine {
 public:
  explicit PmsEngine(PmsConfig cfg = {}) : cfg_(cfg) {}

  Polynomial pms(const Graph& g);

  // p(G\e) + z p(G - {v, w}); requires uv to lie in no even cycle,
  // RuleInapplicableError otherwise.
  Polynomial edge_recurrence(const Graph& g, int u, int v);

  // p(G - v) + z sum_i p(G - {v, w_i}); requires that no edge at v lies in
  // an even cycle.
  Polynomial vertex_recurrence(const Graph& g, int v);

  // Generating function of the perfectly matchable sets containing every
  // element of s, via inclusion-exclusion over vertex deletions.
  Polynomial marked_pms_poly(const Graph& g, VertexSet s);

  // p(g) from an open ear given as its vertex path (endpoints first/last,
  // internal vertices of degree 2 in g, at least one internal vertex).
  Polynomial open_ear_combine(const Graph& g, const std::vector<int>& ear);

  const ComputationTrace& trace() const { return trace_; }
  const PmsConfig& config() const { return cfg_; }

 private:
  struct EarTerms;
  int eval(const Graph& g);
  int eval_minus(const Graph& g, VertexSet removed);
  EarTerms ear_terms(const Graph& g, const std::vector<int>& ear);
  Polynomial node_poly(int id) const { return trace_.nodes[id].result; }

  PmsConfig cfg_;
  ComputationTrace trace_;
  std::unordered_map<std::string, int> memo_;
};

// Convenience wrappers constructing a fresh engine.
std::pair<Polynomial, ComputationTrace> pms_poly(const Graph& g,
                                                 PmsConfig cfg = {});
Polynomial edge_recurrence(const Graph& g, int u, int v, PmsConfig cfg = {});
Polynomial vertex_recurrence(const Graph& g, int v, PmsConfig cfg = {});
Polynomial marked_pms_poly(const Graph& g, VertexSet s, PmsConfig cfg = {});
Polynomial open_ear_combine(const Graph& g, const std::vector<int>& ear,
                            PmsConfig cfg = {});

// p(G') = p(G) p(H) - p_u(G) p_w(H) for gluing G and H at u = w.
Polynomial cut_vertex_combine(const Polynomial& p_g, const Polynomial& pu_g,
                              const Polynomial& p_h, const Polynomial& pw_h);

// The ear corollary at the level of its polynomial terms:
//   p(G) p(P) - p_v(G) p_v(P) - p_w(G) p_w(P) + p_vw(G) p_vw(P) - correction.
Polynomial open_ear_combine_terms(
    const Polynomial& p_g, const Polynomial& p_p, const Polynomial& pv_g,
    const Polynomial& pv_p, const Polynomial& pw_g, const Polynomial& pw_p,
    const Polynomial& pvw_g, const Polynomial& pvw_p,
    const Polynomial& correction);

}  // namespace pmsp

#endif  // PMSP_PMS_HPP_
