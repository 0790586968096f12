#pragma once

// Test-only reference implementations. Everything here is brute force and
// shares no code path with the library beyond the graph container.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "kcover/graph.hpp"

namespace kcover::testing {

inline WeightedGraph make_graph(std::size_t n, std::vector<std::tuple<Vertex, Vertex, Weight>> list) {
  std::vector<std::pair<Edge, Weight>> edges;
  for (auto [u, v, w] : list) edges.emplace_back(Edge(u, v), w);
  return WeightedGraph(n, std::move(edges));
}

inline WeightedGraph cycle_graph(std::size_t n) {
  std::vector<std::pair<Edge, Weight>> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(Edge(i, static_cast<Vertex>((i + 1) % n)), 1);
  return WeightedGraph(n, std::move(edges));
}

inline WeightedGraph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<Edge, Weight>> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(Edge(u, static_cast<Vertex>(a + v)), 1);
  return WeightedGraph(a + b, std::move(edges));
}

/// G(n, p) with uniform integer weights in [1, max_weight].
inline WeightedGraph random_graph(std::mt19937_64& rng, std::size_t n, double p, Weight max_weight) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<Weight> weight(1, max_weight);
  std::vector<std::pair<Edge, Weight>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(Edge(u, v), weight(rng));
  return WeightedGraph(n, std::move(edges));
}

inline bool adjacent(const WeightedGraph& g, Vertex a, Vertex b) { return g.has_edge(Edge(a, b)); }

/// Calls f on every k-subset of the vertex list.
inline void for_each_subset(const std::vector<Vertex>& vs, std::size_t k,
                            const std::function<void(const std::vector<Vertex>&)>& f) {
  if (k > vs.size()) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Vertex> pick(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) pick[i] = vs[idx[i]];
    f(pick);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == vs.size() - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// k-cliques by checking every k-subset.
inline std::size_t brute_count_cliques(const WeightedGraph& g, std::size_t k) {
  std::size_t count = 0;
  for_each_subset(g.vertices(), k, [&](const std::vector<Vertex>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!adjacent(g, s[i], s[j])) return;
    ++count;
  });
  return count;
}

/// k-cycles by trying every cyclic order of every k-subset: fix the first
/// vertex, permute the rest, halve for the two orientations.
inline std::size_t brute_count_cycles(const WeightedGraph& g, std::size_t k) {
  std::size_t directed = 0;
  for_each_subset(g.vertices(), k, [&](const std::vector<Vertex>& s) {
    std::vector<Vertex> rest(s.begin() + 1, s.end());
    do {
      Vertex prev = s[0];
      bool ok = true;
      for (Vertex v : rest) {
        ok = ok && adjacent(g, prev, v);
        prev = v;
      }
      if (ok && adjacent(g, prev, s[0])) ++directed;
    } while (std::next_permutation(rest.begin(), rest.end()));
  });
  return directed / 2;
}

inline std::size_t brute_count(const WeightedGraph& g, std::size_t k, bool cycles) {
  return cycles ? brute_count_cycles(g, k) : brute_count_cliques(g, k);
}

/// Minimum-weight cover by trying every edge subset (edge_count <= 24).
inline Weight brute_min_cover(const WeightedGraph& g, std::size_t k, bool cycles) {
  const std::size_t m = g.edge_count();
  Weight best = -1;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Weight w = 0;
    std::vector<std::pair<Edge, Weight>> kept;
    for (std::size_t e = 0; e < m; ++e) {
      if (mask & (1u << e))
        w += g.weight(e);
      else
        kept.emplace_back(g.edges()[e], g.weight(e));
    }
    if (best >= 0 && w >= best) continue;
    const WeightedGraph rest(g.vertices(), std::move(kept));
    if (brute_count(rest, k, cycles) == 0) best = w;
  }
  return best;
}

/// Maximum number of pairwise edge-disjoint k-cliques by plain include/exclude
/// recursion without bounds.
inline std::size_t brute_max_packing(const WeightedGraph& g, std::size_t k) {
  std::vector<std::vector<Edge>> cliques;
  for_each_subset(g.vertices(), k, [&](const std::vector<Vertex>& s) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (!adjacent(g, s[i], s[j])) return;
        edges.emplace_back(s[i], s[j]);
      }
    cliques.push_back(edges);
  });
  std::vector<bool> used(g.edge_count(), false);
  std::size_t best = 0;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t count) {
    best = std::max(best, count);
    for (std::size_t j = i; j < cliques.size(); ++j) {
      bool free = true;
      for (const Edge& e : cliques[j]) free = free && !used[*g.edge_index(e)];
      if (!free) continue;
      for (const Edge& e : cliques[j]) used[*g.edge_index(e)] = true;
      go(j + 1, count + 1);
      for (const Edge& e : cliques[j]) used[*g.edge_index(e)] = false;
    }
  };
  go(0, 0);
  return best;
}

/// Solves a square rational system by Gauss-Jordan; nullopt when singular.
inline std::optional<std::vector<mpq_class>> solve_square(std::vector<std::vector<mpq_class>> a,
                                                          std::vector<mpq_class> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

/// Minimum of w.x over { A x >= 1, 0 <= x <= 1 } by enumerating every basic
/// solution: choose n tight constraints among the 2n bounds and the rows.
inline mpq_class brute_lp_optimum(const std::vector<std::vector<std::size_t>>& rows,
                                  const std::vector<Weight>& w) {
  const std::size_t n = w.size();
  // Constraint i as (coefficients, rhs) with "coef.x >= rhs" or bound equality.
  std::vector<std::pair<std::vector<mpq_class>, mpq_class>> cons;
  for (const auto& r : rows) {
    std::vector<mpq_class> c(n, 0);
    for (std::size_t j : r) c[j] = 1;
    cons.emplace_back(c, 1);
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<mpq_class> lo(n, 0), hi(n, 0);
    lo[j] = 1;
    hi[j] = 1;
    cons.emplace_back(lo, 0);
    cons.emplace_back(hi, 1);
  }
  std::optional<mpq_class> best;
  std::vector<Vertex> ids(cons.size());
  std::iota(ids.begin(), ids.end(), 0);
  for_each_subset(ids, n, [&](const std::vector<Vertex>& pick) {
    std::vector<std::vector<mpq_class>> a;
    std::vector<mpq_class> b;
    for (Vertex i : pick) {
      a.push_back(cons[i].first);
      b.push_back(cons[i].second);
    }
    auto x = solve_square(a, b);
    if (!x) return;
    for (std::size_t j = 0; j < n; ++j)
      if ((*x)[j] < 0 || (*x)[j] > 1) return;
    for (const auto& r : rows) {
      mpq_class s = 0;
      for (std::size_t j : r) s += (*x)[j];
      if (s < 1) return;
    }
    mpq_class obj = 0;
    for (std::size_t j = 0; j < n; ++j) obj += w[j] * (*x)[j];
    if (!best || obj < *best) best = obj;
  });
  return *best;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::int64_t factorial(std::int64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace kcover::testing
