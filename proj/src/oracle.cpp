#include "kcover/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "kcover/lp.hpp"

namespace kcover {

namespace {

struct BudgetExhausted {};

class CoverSearch {
 public:
  CoverSearch(const WeightedGraph& g, const IncidenceMatrix& m, const OracleOptions& options)
      : g_(g), rows_(m.row_columns), options_(options) {
    const std::size_t n = g.edge_count();
    state_.assign(n, State::free);
    rows_of_edge_.assign(n, {});
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t c : rows_[r]) rows_of_edge_[c].push_back(r);
    chosen_in_row_.assign(rows_.size(), 0);
    excluded_in_row_.assign(rows_.size(), 0);
  }

  ExactCover run() {
    ExactCover out;
    seed_incumbent();
    try {
      search();
      out.status = SolveStatus::solved;
    } catch (const BudgetExhausted&) {
      out.status = SolveStatus::unsolved;
    }
    std::vector<Edge> edges;
    for (std::size_t e : best_) edges.push_back(g_.edges()[e]);
    out.cover = EdgeSet(std::move(edges));
    out.weight = best_weight_;
    out.node_count = nodes_;
    return out;
  }

 private:
  enum class State : unsigned char { free, chosen, excluded };

  // Greedy: repeatedly take the edge covering the most uncovered rows per
  // unit weight.
  void seed_incumbent() {
    std::vector<bool> covered(rows_.size(), false);
    std::size_t remaining = rows_.size();
    best_.clear();
    best_weight_ = 0;
    while (remaining > 0) {
      std::size_t pick = 0;
      std::size_t pick_hits = 0;
      for (std::size_t e = 0; e < g_.edge_count(); ++e) {
        std::size_t hits = 0;
        for (std::size_t r : rows_of_edge_[e]) hits += covered[r] ? 0 : 1;
        // hits/w > pick_hits/w_pick
        if (hits > 0 && (pick_hits == 0 || static_cast<__int128>(hits) * g_.weight(pick) >
                                               static_cast<__int128>(pick_hits) * g_.weight(e))) {
          pick = e;
          pick_hits = hits;
        }
      }
      for (std::size_t r : rows_of_edge_[pick]) {
        if (!covered[r]) --remaining;
        covered[r] = true;
      }
      best_.push_back(pick);
      best_weight_ += g_.weight(pick);
    }
    std::sort(best_.begin(), best_.end());
  }

  void choose(std::size_t e) {
    state_[e] = State::chosen;
    for (std::size_t r : rows_of_edge_[e]) ++chosen_in_row_[r];
    current_.push_back(e);
    current_weight_ += g_.weight(e);
  }

  void unchoose(std::size_t e) {
    state_[e] = State::free;
    for (std::size_t r : rows_of_edge_[e]) --chosen_in_row_[r];
    current_.pop_back();
    current_weight_ -= g_.weight(e);
  }

  void exclude(std::size_t e) {
    state_[e] = State::excluded;
    for (std::size_t r : rows_of_edge_[e]) ++excluded_in_row_[r];
  }

  void unexclude(std::size_t e) {
    state_[e] = State::free;
    for (std::size_t r : rows_of_edge_[e]) --excluded_in_row_[r];
  }

  std::size_t free_in_row(std::size_t r) const { return rows_[r].size() - excluded_in_row_[r]; }

  Weight disjoint_bound(const std::vector<std::size_t>& open) const {
    std::vector<bool> used(g_.edge_count(), false);
    Weight bound = 0;
    for (std::size_t r : open) {
      bool clash = false;
      Weight cheapest = std::numeric_limits<Weight>::max();
      for (std::size_t c : rows_[r]) {
        if (state_[c] != State::free) continue;
        clash = clash || used[c];
        cheapest = std::min(cheapest, g_.weight(c));
      }
      if (clash) continue;
      for (std::size_t c : rows_[r])
        if (state_[c] == State::free) used[c] = true;
      bound += cheapest;
    }
    return bound;
  }

  Weight lp_bound(const std::vector<std::size_t>& open) const {
    std::vector<std::size_t> column_of(g_.edge_count(), 0);
    std::vector<Weight> weights;
    for (std::size_t e = 0; e < g_.edge_count(); ++e) {
      if (state_[e] != State::free) continue;
      column_of[e] = weights.size();
      weights.push_back(g_.weight(e));
    }
    std::vector<std::vector<std::size_t>> sub;
    sub.reserve(open.size());
    for (std::size_t r : open) {
      std::vector<std::size_t> row;
      for (std::size_t c : rows_[r])
        if (state_[c] == State::free) row.push_back(column_of[c]);
      sub.push_back(std::move(row));
    }
    const auto lp = solve_covering_lp(sub, weights);
    // Integral covers cost at least the rounded-up LP value.
    mpz_class ceil_value;
    mpz_cdiv_q(ceil_value.get_mpz_t(), lp.objective.get_num_mpz_t(), lp.objective.get_den_mpz_t());
    return static_cast<Weight>(ceil_value.get_si());
  }

  void search() {
    if (++nodes_ > options_.node_budget) throw BudgetExhausted{};

    std::vector<std::size_t> open;
    std::size_t branch_row = 0;
    std::size_t branch_free = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (chosen_in_row_[r] > 0) continue;
      const std::size_t f = free_in_row(r);
      if (f == 0) return;  // some structure can no longer be hit
      open.push_back(r);
      if (f < branch_free) {
        branch_free = f;
        branch_row = r;
      }
    }

    if (open.empty()) {
      if (current_weight_ < best_weight_) {
        best_weight_ = current_weight_;
        best_ = current_;
        std::sort(best_.begin(), best_.end());
      }
      return;
    }

    if (current_weight_ + disjoint_bound(open) >= best_weight_) return;
    if (open.size() <= options_.lp_bound_max_rows &&
        current_weight_ + lp_bound(open) >= best_weight_)
      return;

    std::vector<std::size_t> edges;
    for (std::size_t c : rows_[branch_row])
      if (state_[c] == State::free) edges.push_back(c);
    std::stable_sort(edges.begin(), edges.end(), [&](std::size_t a, std::size_t b) {
      return g_.weight(a) > g_.weight(b);
    });

    std::size_t excluded = 0;
    for (std::size_t e : edges) {
      choose(e);
      search();
      unchoose(e);
      exclude(e);
      ++excluded;
    }
    for (std::size_t i = 0; i < excluded; ++i) unexclude(edges[i]);
  }

  const WeightedGraph& g_;
  const std::vector<std::vector<std::size_t>>& rows_;
  const OracleOptions& options_;

  std::vector<State> state_;
  std::vector<std::vector<std::size_t>> rows_of_edge_;
  std::vector<std::size_t> chosen_in_row_;
  std::vector<std::size_t> excluded_in_row_;

  std::vector<std::size_t> current_;
  Weight current_weight_ = 0;
  std::vector<std::size_t> best_;
  Weight best_weight_ = 0;
  std::uint64_t nodes_ = 0;
};

class PackingSearch {
 public:
  PackingSearch(const WeightedGraph& g, std::vector<EdgeStructure> cliques, int k,
                const OracleOptions& options)
      : g_(g), cliques_(std::move(cliques)), k_(k), options_(options) {
    for (const auto& c : cliques_) {
      std::vector<std::size_t> cols;
      for (const Edge& e : c.edges) cols.push_back(*g.edge_index(e));
      columns_.push_back(std::move(cols));
    }
    used_.assign(g.edge_count(), false);
  }

  ExactPacking run() {
    ExactPacking out;
    try {
      search(0);
      out.status = SolveStatus::solved;
    } catch (const BudgetExhausted&) {
      out.status = SolveStatus::unsolved;
    }
    for (std::size_t i : best_) out.cliques.push_back(cliques_[i]);
    out.node_count = nodes_;
    return out;
  }

 private:
  bool available(std::size_t i) const {
    return std::none_of(columns_[i].begin(), columns_[i].end(),
                        [&](std::size_t c) { return used_[c]; });
  }

  // Upper bound on how many more cliques fit using cliques from index `from`.
  std::size_t bound(std::size_t from) const {
    std::size_t count = 0;
    std::vector<bool> useful(g_.edge_count(), false);
    for (std::size_t i = from; i < cliques_.size(); ++i) {
      if (!available(i)) continue;
      ++count;
      for (std::size_t c : columns_[i]) useful[c] = true;
    }
    const std::size_t per_clique = structure_size(StructureKind::clique, k_);
    std::vector<std::size_t> degree(g_.id_bound(), 0);
    std::size_t useful_edges = 0;
    for (std::size_t e = 0; e < g_.edge_count(); ++e) {
      if (!useful[e]) continue;
      ++useful_edges;
      ++degree[g_.edges()[e].u];
      ++degree[g_.edges()[e].v];
    }
    // Each clique uses k-1 edges at each of its k vertices.
    std::size_t vertex_slots = 0;
    for (std::size_t d : degree) vertex_slots += d / static_cast<std::size_t>(k_ - 1);
    return std::min({count, useful_edges / per_clique, vertex_slots / static_cast<std::size_t>(k_)});
  }

  void search(std::size_t from) {
    if (++nodes_ > options_.node_budget) throw BudgetExhausted{};
    std::size_t next = from;
    while (next < cliques_.size() && !available(next)) ++next;
    if (next == cliques_.size()) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    if (current_.size() + bound(next) <= best_.size()) return;

    for (std::size_t c : columns_[next]) used_[c] = true;
    current_.push_back(next);
    search(next + 1);
    current_.pop_back();
    for (std::size_t c : columns_[next]) used_[c] = false;

    search(next + 1);
  }

  const WeightedGraph& g_;
  std::vector<EdgeStructure> cliques_;
  std::vector<std::vector<std::size_t>> columns_;
  int k_;
  const OracleOptions& options_;
  std::vector<bool> used_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ExactCover exact_min_cover(const WeightedGraph& g, int k, StructureKind kind,
                           const OracleOptions& options) {
  const IncidenceMatrix m = build_incidence(g, enumerate_structures(g, k, kind, options.enumeration));
  ExactCover out = CoverSearch(g, m, options).run();
  if (out.solved()) {
    const auto lp = solve_covering_lp(m, g);
    if (lp.objective > Rational(out.weight))
      throw std::logic_error("exact cover weight below the LP relaxation");
  }
  return out;
}

ExactPacking exact_max_packing(const WeightedGraph& g, int k, const OracleOptions& options) {
  return PackingSearch(g, enumerate_k_cliques(g, k, options.enumeration), k, options).run();
}

Sandwich sandwich_check(const WeightedGraph& g, int k, const OracleOptions& options) {
  Sandwich out;
  const auto packing = exact_max_packing(g, k, options);
  const auto cover = exact_min_cover(g.with_unit_weights(), k, StructureKind::clique, options);
  out.nu = packing.count();
  out.tau = cover.weight;
  if (!packing.solved() || !cover.solved()) return out;
  out.status = SolveStatus::solved;
  const auto nu = static_cast<Weight>(out.nu);
  out.ok = nu <= out.tau &&
           out.tau <= static_cast<Weight>(structure_size(StructureKind::clique, k)) * nu;
  return out;
}

std::int64_t turan_tau_complete(int n, int k) {
  if (k < 3) throw std::invalid_argument("k must be at least 3");
  if (n < k) return 0;
  // Removing the edges inside the parts of the balanced (k-1)-partite
  // Turán graph is a minimum k-clique cover of K_n.
  const std::int64_t parts = k - 1;
  const std::int64_t q = n / parts;
  const std::int64_t big = n % parts;  // parts of size q + 1
  return big * (q + 1) * q / 2 + (parts - big) * q * (q - 1) / 2;
}

}  // namespace kcover
