#include "kcover/cover.hpp"

#include <stdexcept>

namespace kcover {

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::cycle_basic: return "cycle-basic";
    case Algorithm::cycle_odd: return "cycle-odd";
    case Algorithm::clique_basic: return "clique-basic";
    case Algorithm::clique_improved: return "clique-improved";
  }
  return "unknown";
}

namespace {

StructureKind kind_of(Algorithm a) {
  return a == Algorithm::cycle_basic || a == Algorithm::cycle_odd ? StructureKind::cycle
                                                                   : StructureKind::clique;
}

// Edges per structure: k for cycles, C(k,2) for cliques.
long structure_edges(Algorithm a, int k) {
  return static_cast<long>(structure_size(kind_of(a), k));
}

void require_k(int k) {
  if (k < 3) throw std::invalid_argument("k must be at least 3, got " + std::to_string(k));
}

struct Relaxation {
  std::size_t structure_count = 0;
  FractionalSolution lp;
};

Relaxation relax(const WeightedGraph& g, int k, StructureKind kind, const CoverOptions& options) {
  auto structures = enumerate_structures(g, k, kind, options.enumeration);
  Relaxation out;
  out.structure_count = structures.size();
  const IncidenceMatrix m = build_incidence(g, std::move(structures));
  out.lp = solve_covering_lp(m, g, options.lp);
  return out;
}

CoverResult basic(const WeightedGraph& g, int k, Algorithm algorithm, const CoverOptions& options) {
  require_k(k);
  CoverResult r;
  r.algorithm = algorithm;
  r.kind = kind_of(algorithm);
  r.k = k;
  auto [count, lp] = relax(g, k, r.kind, options);
  r.structure_count = count;
  r.lp = std::move(lp);
  r.cover = round_threshold(g, r.lp, fraction(1, structure_edges(algorithm, k)));
  r.cover_weight = total_weight(g, r.cover);
  r.lp_objective = r.lp.objective;
  r.ratio_bound = ratio_bound(algorithm, k);
  return r;
}

CoverResult improved(const WeightedGraph& g, int k, Algorithm algorithm,
                     const CoverOptions& options) {
  require_k(k);
  CoverResult r;
  r.algorithm = algorithm;
  r.kind = kind_of(algorithm);
  r.k = k;
  auto [count, lp] = relax(g, k, r.kind, options);
  r.structure_count = count;
  r.lp = std::move(lp);

  const long t = structure_edges(algorithm, k);
  const Rational upper = fraction(2, 2 * t - 1);
  const Rational lower = fraction(1, 2 * t - 1);

  Decomposition d;
  d.rounded = round_threshold(g, r.lp, upper);
  const WeightedGraph rest = remove_edges(g, d.rounded);
  d.residual_edges =
      union_structure_edges(enumerate_structures(rest, k, r.kind, options.enumeration));

  // A surviving structure has every edge below `upper` and row sum >= 1, so
  // each of its edges carries at least 1 - (t-1)*upper = lower.
  for (const Edge& e : d.residual_edges) {
    const Rational& x = r.lp.values[*g.edge_index(e)];
    if (x < lower || x >= upper)
      throw std::logic_error("residual edge " + to_string(e) + " has LP value " + to_string(x) +
                             " outside [" + to_string(lower) + ", " + to_string(upper) + ")");
  }

  const WeightedGraph residual = edge_induced_subgraph(g, d.residual_edges);
  d.bipartition = bipartize_half_weight(residual);
  d.bipartized = d.bipartition.inner_edges;

  r.cover = d.rounded.united(d.bipartized);
  r.cover_weight = total_weight(g, r.cover);
  r.lp_objective = r.lp.objective;
  r.ratio_bound = ratio_bound(algorithm, k);
  r.parts = std::move(d);
  return r;
}

}  // namespace

EdgeSet round_threshold(const WeightedGraph& g, const FractionalSolution& x,
                        const Rational& theta) {
  if (sgn(theta) <= 0) throw std::invalid_argument("rounding threshold must be positive");
  if (x.values.size() != g.edge_count())
    throw std::invalid_argument("solution does not match the graph's edges");
  std::vector<Edge> picked;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (x.values[e] >= theta) picked.push_back(g.edges()[e]);
  return EdgeSet(std::move(picked));
}

Bipartition bipartize_half_weight(const WeightedGraph& sub) {
  // side[v]: 0 = side1, 1 = side2, -1 = not yet placed.
  std::vector<int> side(sub.id_bound(), -1);

  for (Vertex v : sub.vertices()) {
    Weight toward_side1 = 0;
    Weight toward_side2 = 0;
    for (const auto& nb : sub.neighbors(v)) {
      if (side[nb.vertex] == 0) toward_side1 += sub.weight(nb.edge);
      if (side[nb.vertex] == 1) toward_side2 += sub.weight(nb.edge);
    }
    // On side1, the edges toward side2 are cut.
    side[v] = toward_side2 >= toward_side1 ? 0 : 1;
  }

  bool moved = true;
  while (moved) {
    moved = false;
    for (Vertex v : sub.vertices()) {
      Weight same = 0;
      Weight across = 0;
      for (const auto& nb : sub.neighbors(v))
        (side[nb.vertex] == side[v] ? same : across) += sub.weight(nb.edge);
      if (same > across) {
        side[v] = 1 - side[v];
        moved = true;
      }
    }
  }

  Bipartition b;
  for (Vertex v : sub.vertices()) (side[v] == 0 ? b.side1 : b.side2).push_back(v);
  std::vector<Edge> cut;
  std::vector<Edge> inner;
  for (const Edge& e : sub.edges()) (side[e.u] != side[e.v] ? cut : inner).push_back(e);
  b.cut_edges = EdgeSet(std::move(cut));
  b.inner_edges = EdgeSet(std::move(inner));
  return b;
}

Rational ratio_bound(Algorithm algorithm, int k) {
  const Rational t = fraction(structure_edges(algorithm, k), 1);
  switch (algorithm) {
    case Algorithm::cycle_basic:
    case Algorithm::clique_basic: return t;
    case Algorithm::cycle_odd:
    case Algorithm::clique_improved: return t - fraction(1, 2);
  }
  return t;
}

CoverResult cover_k_cycles_basic(const WeightedGraph& g, int k, const CoverOptions& options) {
  return basic(g, k, Algorithm::cycle_basic, options);
}

CoverResult cover_k_cliques_basic(const WeightedGraph& g, int k, const CoverOptions& options) {
  return basic(g, k, Algorithm::clique_basic, options);
}

CoverResult cover_k_cycles_odd(const WeightedGraph& g, int k, const CoverOptions& options) {
  if (k % 2 == 0)
    throw std::invalid_argument("the bipartizing cycle cover needs odd k, got " +
                                std::to_string(k));
  return improved(g, k, Algorithm::cycle_odd, options);
}

CoverResult cover_k_cliques_improved(const WeightedGraph& g, int k,
                                     const CoverOptions& options) {
  return improved(g, k, Algorithm::clique_improved, options);
}

CoverResult run_cover(const WeightedGraph& g, int k, Algorithm algorithm,
                      const CoverOptions& options) {
  switch (algorithm) {
    case Algorithm::cycle_basic: return cover_k_cycles_basic(g, k, options);
    case Algorithm::cycle_odd: return cover_k_cycles_odd(g, k, options);
    case Algorithm::clique_basic: return cover_k_cliques_basic(g, k, options);
    case Algorithm::clique_improved: return cover_k_cliques_improved(g, k, options);
  }
  throw std::invalid_argument("unknown algorithm");
}

bool is_certified(const WeightedGraph& g, const CoverResult& r) {
  return verify_cover(g, r.k, r.kind, r.cover) &&
         Rational(r.cover_weight) <= r.ratio_bound * r.lp_objective;
}

}  // namespace kcover
