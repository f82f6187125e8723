#ifndef PMSP_FAMILIES_HPP_
#define PMSP_FAMILIES_HPP_

#include <optional>

#include "pmsp/graph.hpp"

namespace pmsp {

// Constructors for the named graph families. Labels are deterministic:
// paths and cycles are numbered along the walk, caterpillars spine-first,
// k-ary trees in breadth-first order from the root.
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
// Spine of n vertices, each spine vertex carrying k leaves.
Graph make_caterpillar(int n, int k);
// Complete k-ary tree with every leaf at depth r.
Graph make_kary_tree(int k, int r);

// Exact recognizers used by the computation dispatcher. Recognition is
// conservative: a value is returned only with a full structural witness, so
// misrecognition is impossible; anything unusual falls through to the
// general rules.
std::optional<int> recognize_path(const Graph& g);
std::optional<int> recognize_cycle(const Graph& g);

struct CaterpillarShape {
  int spine;
  int leaves_per_spine;
};
// Requires every spine vertex to carry exactly k >= 1 leaves; bare paths are
// reported by recognize_path instead.
std::optional<CaterpillarShape> recognize_caterpillar(const Graph& g);

struct KaryTreeShape {
  int arity;  // >= 2; arity-1 trees are paths
  int rank;
};
std::optional<KaryTreeShape> recognize_kary_tree(const Graph& g);

}  // namespace pmsp

#endif  // PMSP_FAMILIES_HPP_
