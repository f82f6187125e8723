#ifndef PMSP_EHRHART_HPP_
#define PMSP_EHRHART_HPP_

#include <vector>

#include "pmsp/graph.hpp"
#include "pmsp/integer.hpp"
#include "pmsp/polynomial.hpp"

namespace pmsp {

struct EhrhartConfig {
  // Largest dimension for which dilate counting is attempted.
  int counting_limit = 14;
  // Exhaustive limit of the perfectness test.
  int perfect_limit = 12;
  // Exhaustive limit of stable-set enumeration.
  int stable_set_limit = 20;
};

// 0/1-coefficient inequality <support, x> <= rhs; the t-th dilate scales the
// right-hand side to rhs * t.
struct HRow {
  VertexSet support;
  int rhs = 1;
};

// H-representation of a stable set polytope: implicit nonnegativity rows,
// one row per maximal clique (rhs 1), plus optional extra rank rows for the
// odd-antihole case.
struct HRepresentation {
  int dimension = 0;
  std::vector<HRow> clique_rows;
  std::vector<HRow> extra_rows;
};

// All stable sets of g including the empty set, ascending by bitmask.
// SizeError past the configured limit.
std::vector<VertexSet> stable_sets(const Graph& g, int limit = 20);

// Clique H-representation of P_g; exact iff g is perfect (Lovasz), so
// non-perfect inputs are rejected with a PreconditionError.
HRepresentation stable_set_hrep(const Graph& g,
                                const EhrhartConfig& config = {});

// Number of integer points x >= 0 with <chi_C, x> <= t rhs for every row,
// by coordinate backtracking with per-row slack pruning. This is the
// performance hot spot of the Ehrhart pipeline.
Integer count_dilate(const HRepresentation& h, int t);

// h*_j = sum_{i<=j} (-1)^{j-i} C(n+1, j-i) counts[i]. Verifies counts[0]=1,
// nonnegativity of every h*_j and the reconstruction identity
// sum_j h*_j C(t+n-j, n) = counts[t]; ConsistencyError on any failure.
Polynomial hstar_from_counts(const std::vector<Integer>& counts, int n);

struct EhrhartData {
  std::vector<Integer> counts;          // L_P(0..n)
  std::vector<Rational> ehrhart_coeffs; // exact L_P(t) coefficients, ascending
  Polynomial hstar;
};

// Full pipeline: H-representation, dilate counts for t = 0..n, h* transform.
// Perfect graphs use the Lovasz clique description. Complements of odd
// cycles (odd antiholes), which are not perfect, use the clique rows plus
// the rank row sum x_i <= 2; that description is certified exact by the
// decomposition cross-count below. Everything else is rejected.
EhrhartData ehrhart_data_stable_set_polytope(const Graph& g,
                                             const EhrhartConfig& config = {});
Polynomial hstar_stable_set_polytope(const Graph& g,
                                     const EhrhartConfig& config = {});

// Independent counter for dilates of P_{complement(C_n)}: counts the integer
// vectors expressible as a sum of at most t stable-set indicators of the
// antihole (multiplicities on vertices and on adjacent pairs of the cycle).
// Always a lower bound for the true dilate count; equality with count_dilate
// certifies both the H-representation and the count.
Integer antihole_decomposition_count(int n, int t);

}  // namespace pmsp

#endif  // PMSP_EHRHART_HPP_
