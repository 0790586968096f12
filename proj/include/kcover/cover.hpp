#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kcover/graph.hpp"
#include "kcover/lp.hpp"
#include "kcover/structures.hpp"

namespace kcover {

enum class Algorithm {
  cycle_basic,      ///< round at 1/k, ratio k
  cycle_odd,        ///< round at 2/(2k-1) then bipartize, ratio k - 1/2, odd k only
  clique_basic,     ///< round at 1/C(k,2), ratio C(k,2)
  clique_improved,  ///< round at 2/(2C(k,2)-1) then bipartize, ratio C(k,2) - 1/2
};

std::string to_string(Algorithm a);

/// Two-sided split of a graph's vertices. cut_edges cross the split,
/// inner_edges stay within one side.
struct Bipartition {
  std::vector<Vertex> side1;
  std::vector<Vertex> side2;
  EdgeSet cut_edges;
  EdgeSet inner_edges;
};

/// Half-weight cut by greedy placement followed by single-vertex local search.
///
/// Vertices are placed in ascending id order on the side that cuts more
/// weight towards already placed vertices (ties go to side1). Then any vertex
/// with more incident weight on its own side than across is moved, scanning
/// in ascending order, until a full pass makes no move. At that point every
/// vertex has at least half its incident weight cut, so the cut carries at
/// least half the total weight.
Bipartition bipartize_half_weight(const WeightedGraph& sub);

/// Intermediate sets of the bipartizing variants.
struct Decomposition {
  EdgeSet rounded;         ///< edges at or above 2/(2t-1)
  EdgeSet residual_edges;  ///< edges of structures surviving `rounded`
  EdgeSet bipartized;      ///< residual edges left inside a side
  Bipartition bipartition;
};

struct CoverResult {
  Algorithm algorithm = Algorithm::cycle_basic;
  StructureKind kind = StructureKind::cycle;
  int k = 0;
  EdgeSet cover;
  Weight cover_weight = 0;
  Rational lp_objective;
  Rational ratio_bound;
  std::size_t structure_count = 0;
  FractionalSolution lp;  ///< values follow the input graph's edge order
  std::optional<Decomposition> parts;
};

struct CoverOptions {
  EnumerationOptions enumeration;
  LpOptions lp;
};

/// Edges whose LP value is at least theta.
EdgeSet round_threshold(const WeightedGraph& g, const FractionalSolution& x, const Rational& theta);

CoverResult cover_k_cycles_basic(const WeightedGraph& g, int k, const CoverOptions& options = {});
CoverResult cover_k_cliques_basic(const WeightedGraph& g, int k, const CoverOptions& options = {});

/// Throws std::invalid_argument for even k; the bipartite leftover only rules
/// out odd cycles.
CoverResult cover_k_cycles_odd(const WeightedGraph& g, int k, const CoverOptions& options = {});
CoverResult cover_k_cliques_improved(const WeightedGraph& g, int k,
                                     const CoverOptions& options = {});

CoverResult run_cover(const WeightedGraph& g, int k, Algorithm algorithm,
                      const CoverOptions& options = {});

/// Feasible cover whose weight is within ratio_bound of the LP optimum.
bool is_certified(const WeightedGraph& g, const CoverResult& r);

/// k, k - 1/2, C(k,2) or C(k,2) - 1/2.
Rational ratio_bound(Algorithm algorithm, int k);

}  // namespace kcover
