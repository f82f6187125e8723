#include "pmsp/ehrhart.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <functional>
#include <string>

#include "pmsp/families.hpp"
#include "pmsp/graph_algos.hpp"

namespace pmsp {

std::vector<VertexSet> stable_sets(const Graph& g, int limit) {
  int n = g.vertex_count();
  if (n > limit)
    throw SizeError("stable-set enumeration limited to " +
                    std::to_string(limit) + " vertices");
  std::vector<std::uint64_t> masks(n);
  for (int v = 0; v < n; ++v) masks[v] = g.neighbor_mask(v);
  std::vector<VertexSet> out;
  std::uint64_t all = VertexSet::full(n).bits();
  for (std::uint64_t s = 0;; ++s) {
    bool stable = true;
    for (std::uint64_t m = s; m && stable; m &= m - 1)
      if (masks[std::countr_zero(m)] & s) stable = false;
    if (stable) out.emplace_back(s);
    if (s == all) break;
  }
  return out;
}

HRepresentation stable_set_hrep(const Graph& g, const EhrhartConfig& config) {
  if (!is_perfect(g, config.perfect_limit))
    throw PreconditionError(
        "the maximal-clique H-representation equals the stable set polytope "
        "only for perfect graphs (Lovasz); input graph is not perfect");
  HRepresentation h;
  h.dimension = g.vertex_count();
  for (VertexSet c : maximal_cliques(g)) h.clique_rows.push_back({c, 1});
  return h;
}

namespace {

struct DilateCounter {
  int n = 0;
  int t = 0;
  std::vector<std::uint64_t> row_support;
  std::vector<long long> slack;
  // Row indices touching each coordinate.
  std::vector<std::vector<int>> rows_at;

  template <typename Acc>
  Acc count(int coord) {
    // Backtracking over coordinates with per-row slack pruning; the final
    // coordinate contributes its whole feasible range at once.
    long long bound = -1;
    for (int r : rows_at[coord])
      bound = bound < 0 ? slack[r] : std::min(bound, slack[r]);
    if (bound < 0)
      throw ConsistencyError("dilate counting needs every coordinate covered");
    if (coord == n - 1) return Acc(bound + 1);
    Acc total = 0;
    for (long long x = 0; x <= bound; ++x) {
      total += count<Acc>(coord + 1);
      for (int r : rows_at[coord]) --slack[r];
    }
    for (int r : rows_at[coord]) slack[r] += bound + 1;
    return total;
  }
};

DilateCounter make_counter(const HRepresentation& h, int t) {
  DilateCounter c;
  c.n = h.dimension;
  c.t = t;
  auto add_rows = [&](const std::vector<HRow>& rows) {
    for (const HRow& row : rows) {
      c.row_support.push_back(row.support.bits());
      c.slack.push_back(static_cast<long long>(row.rhs) * t);
    }
  };
  add_rows(h.clique_rows);
  add_rows(h.extra_rows);
  c.rows_at.assign(c.n, {});
  for (size_t r = 0; r < c.row_support.size(); ++r)
    for (int v : VertexSet(c.row_support[r]).to_vector()) c.rows_at[v].push_back(static_cast<int>(r));
  return c;
}

}  // namespace

Integer count_dilate(const HRepresentation& h, int t) {
  if (t < 0) throw ArgumentError("dilate parameter must be nonnegative");
  if (h.dimension == 0) return 1;
  DilateCounter counter = make_counter(h, t);
  // The count is bounded by (t+1)^n; stay in machine words when that
  // provably fits, otherwise recurse with big integers.
  Integer bound = 1;
  for (int i = 0; i < h.dimension; ++i) bound *= t + 1;
  if (bound < (Integer(1) << 62))
    return Integer(counter.count<unsigned long long>(0));
  return counter.count<Integer>(0);
}

Polynomial hstar_from_counts(const std::vector<Integer>& counts, int n) {
  if (static_cast<int>(counts.size()) != n + 1)
    throw ArgumentError("need exactly n+1 dilate counts");
  if (counts[0] != 1)
    throw ConsistencyError("L_P(0) must be 1");
  std::vector<Integer> h(n + 1, Integer(0));
  for (int j = 0; j <= n; ++j) {
    Integer acc = 0;
    for (int i = 0; i <= j; ++i) {
      Integer term = binomial(n + 1, j - i) * counts[i];
      if ((j - i) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    if (acc < 0)
      throw ConsistencyError(
          "negative h* coefficient; wrong dimension or unsound "
          "H-representation");
    h[j] = acc;
  }
  for (int t = 0; t <= n; ++t) {
    Integer rec = 0;
    for (int j = 0; j <= n; ++j) rec += h[j] * binomial(t + n - j, n);
    if (rec != counts[t])
      throw ConsistencyError("Ehrhart reconstruction identity failed at t=" +
                             std::to_string(t));
  }
  return Polynomial(std::move(h));
}

namespace {

std::vector<Rational> interpolate_ehrhart(const std::vector<Integer>& counts) {
  int n = static_cast<int>(counts.size()) - 1;
  std::vector<Rational> acc(n + 1, Rational(0));
  for (int t0 = 0; t0 <= n; ++t0) {
    // Lagrange basis polynomial for node t0, expanded in t.
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (int j = 0; j <= n; ++j) {
      if (j == t0) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (size_t i = 0; i < basis.size(); ++i) {
        next[i] -= basis[i] * j;
        next[i + 1] += basis[i];
      }
      basis = std::move(next);
      denom *= t0 - j;
    }
    Rational scale = Rational(counts[t0]) / denom;
    for (size_t i = 0; i < basis.size(); ++i) acc[i] += basis[i] * scale;
  }
  return acc;
}

bool is_odd_antihole(const Graph& g) {
  auto cyc = recognize_cycle(complement(g));
  return cyc && *cyc >= 5 && *cyc % 2 == 1;
}

// Largest sum(d) with d_i >= 0 integer and d_{i-1} + d_i <= y_i around the
// cycle; d_i is the multiplicity of the stable pair {i, i+1} of the antihole
// complement(C_n). Fix d_{n-1} and run a value-indexed DP along the rest.
long long max_pair_multiplicity(const std::vector<long long>& y) {
  int n = static_cast<int>(y.size());
  long long best = 0;
  long long vcap = std::min(y[n - 1], y[0]);
  for (long long v = 0; v <= vcap; ++v) {
    std::vector<long long> f(y[0] - v + 1);  // f[x] = best sum with d_0 = x
    for (size_t x = 0; x < f.size(); ++x) f[x] = static_cast<long long>(x);
    for (int i = 1; i <= n - 2; ++i) {
      std::vector<long long> pref(f.size());
      long long run = LLONG_MIN;
      for (size_t x = 0; x < f.size(); ++x) {
        run = std::max(run, f[x]);
        pref[x] = run;
      }
      long long hi = y[i];
      if (i == n - 2) hi = std::min(hi, y[n - 1] - v);
      std::vector<long long> next(hi + 1, LLONG_MIN);
      for (long long x = 0; x <= hi; ++x) {
        long long pc =
            std::min<long long>(y[i] - x, static_cast<long long>(f.size()) - 1);
        if (pc >= 0 && pref[pc] != LLONG_MIN) next[x] = x + pref[pc];
      }
      f = std::move(next);
    }
    for (long long val : f)
      if (val != LLONG_MIN) best = std::max(best, val + v);
  }
  return best;
}

// Minimum number of stable-set indicators of complement(C_n) summing to y:
// each pair covers two units, so minimizing parts maximizes sum(d).
long long min_parts(const std::vector<long long>& y) {
  long long total = 0;
  for (long long v : y) total += v;
  return total - max_pair_multiplicity(y);
}

}  // namespace

Integer antihole_decomposition_count(int n, int t) {
  if (n < 5 || n % 2 == 0)
    throw ArgumentError("antihole certificate needs odd n >= 5");
  Graph g = complement(make_cycle(n));
  HRepresentation h;
  h.dimension = n;
  for (VertexSet c : maximal_cliques(g)) h.clique_rows.push_back({c, 1});
  h.extra_rows.push_back({VertexSet::full(n), 2});

  std::vector<std::uint64_t> supports;
  std::vector<long long> slack;
  for (const auto& row : h.clique_rows) {
    supports.push_back(row.support.bits());
    slack.push_back(t);
  }
  supports.push_back(VertexSet::full(n).bits());
  slack.push_back(2LL * t);

  std::vector<long long> y(n, 0);
  Integer count = 0;
  std::function<void(int)> rec = [&](int coord) {
    if (coord == n) {
      if (min_parts(y) <= t) count += 1;
      return;
    }
    long long bound = -1;
    for (size_t r = 0; r < supports.size(); ++r)
      if ((supports[r] >> coord) & 1)
        bound = bound < 0 ? slack[r] : std::min(bound, slack[r]);
    for (long long x = 0; x <= bound; ++x) {
      y[coord] = x;
      rec(coord + 1);
      for (size_t r = 0; r < supports.size(); ++r)
        if ((supports[r] >> coord) & 1) --slack[r];
    }
    for (size_t r = 0; r < supports.size(); ++r)
      if ((supports[r] >> coord) & 1) slack[r] += bound + 1;
    y[coord] = 0;
  };
  rec(0);
  return count;
}

EhrhartData ehrhart_data_stable_set_polytope(const Graph& g,
                                             const EhrhartConfig& config) {
  int n = g.vertex_count();
  if (n > config.counting_limit)
    throw SizeError("dilate counting limited to " +
                    std::to_string(config.counting_limit) + " vertices");

  HRepresentation h;
  bool antihole = false;
  if (n == 0) {
    h.dimension = 0;
  } else if (is_perfect(g, config.perfect_limit)) {
    h = stable_set_hrep(g, config);
  } else if (is_odd_antihole(g)) {
    // Complements of odd cycles are not perfect, but their stable set
    // polytope is the clique polytope cut with the rank row sum x_i <= 2
    // (stable sets of an odd antihole have at most 2 elements). The
    // description is certified below by an independent decomposition count.
    antihole = true;
    h.dimension = n;
    for (VertexSet c : maximal_cliques(g)) h.clique_rows.push_back({c, 1});
    h.extra_rows.push_back({VertexSet::full(n), 2});
  } else {
    throw PreconditionError(
        "no exact H-representation available: graph is neither perfect "
        "(Lovasz clique description) nor the complement of an odd cycle");
  }

  // P_g contains the origin and every unit vector, so it is full-dimensional
  // and the h* transform below runs at dimension n.
  for (const HRow& row : h.clique_rows)
    if (row.rhs < 1) throw ConsistencyError("clique row cannot hold at e_i");

  EhrhartData data;
  for (int t = 0; t <= n; ++t) data.counts.push_back(count_dilate(h, t));

  if (antihole && n <= 9) {
    // Cheap sizes: certify at run time that every counted point of every
    // dilate decomposes into stable-set indicators; larger sizes are
    // certified by the test suite.
    for (int t = 0; t <= n; ++t)
      if (antihole_decomposition_count(n, t) != data.counts[t])
        throw ConsistencyError(
            "antihole H-representation failed the decomposition certificate");
  }

  data.hstar = hstar_from_counts(data.counts, n);
  data.ehrhart_coeffs = interpolate_ehrhart(data.counts);
  return data;
}

Polynomial hstar_stable_set_polytope(const Graph& g,
                                     const EhrhartConfig& config) {
  return ehrhart_data_stable_set_polytope(g, config).hstar;
}

}  // namespace pmsp
