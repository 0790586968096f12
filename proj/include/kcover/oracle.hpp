#pragma once

#include <cstdint>
#include <vector>

#include "kcover/graph.hpp"
#include "kcover/structures.hpp"

namespace kcover {

enum class SolveStatus { solved, unsolved };

struct OracleOptions {
  EnumerationOptions enumeration;
  std::uint64_t node_budget = 10'000'000;
  /// Residual systems up to this many rows get the exact LP bound; larger
  /// ones fall back to the disjoint-structure bound.
  std::size_t lp_bound_max_rows = 500;
};

/// Minimum-weight cover. When status is unsolved, cover/weight hold the best
/// cover found so far and carry no optimality claim.
struct ExactCover {
  SolveStatus status = SolveStatus::unsolved;
  EdgeSet cover;
  Weight weight = 0;
  std::uint64_t node_count = 0;

  bool solved() const noexcept { return status == SolveStatus::solved; }
};

/// Maximum family of pairwise edge-disjoint k-cliques.
struct ExactPacking {
  SolveStatus status = SolveStatus::unsolved;
  std::vector<EdgeStructure> cliques;
  std::uint64_t node_count = 0;

  std::size_t count() const noexcept { return cliques.size(); }
  bool solved() const noexcept { return status == SolveStatus::solved; }
};

struct Sandwich {
  SolveStatus status = SolveStatus::unsolved;
  std::size_t nu = 0;  ///< maximum k-clique packing
  Weight tau = 0;      ///< minimum k-clique cover, unit weights
  bool ok = false;     ///< nu <= tau <= C(k,2) * nu

  bool solved() const noexcept { return status == SolveStatus::solved; }
};

/// Branch and bound over the covering ILP.
///
/// Branches on the uncovered structure with the fewest still-allowed edges:
/// child i takes its i-th edge (heaviest first) and forbids the earlier ones.
/// Nodes are pruned with the exact LP of the residual system when it is
/// small, otherwise with a greedy edge-disjoint structure bound.
ExactCover exact_min_cover(const WeightedGraph& g, int k, StructureKind kind,
                           const OracleOptions& options = {});

/// Include/exclude search over k-cliques in canonical order.
ExactPacking exact_max_packing(const WeightedGraph& g, int k, const OracleOptions& options = {});

/// Packing and unit-weight covering numbers of g for k-cliques.
Sandwich sandwich_check(const WeightedGraph& g, int k, const OracleOptions& options = {});

/// k-clique covering number of K_n: C(n,2) minus the edge count of the
/// balanced complete (k-1)-partite graph on n vertices. 0 when n < k.
std::int64_t turan_tau_complete(int n, int k);

}  // namespace kcover
