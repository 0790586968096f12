#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kcover/graph.hpp"
#include "kcover/structures.hpp"

namespace kcover {

using Rational = mpq_class;

/// Canonical num/den. den must be nonzero.
Rational fraction(std::int64_t num, std::int64_t den);

/// Exact fraction text, e.g. "9/2" or "2".
std::string to_string(const Rational& q);

/// Optimal vertex of min{ w.x : A x >= 1, 0 <= x <= 1 }.
struct FractionalSolution {
  std::vector<Rational> values;  ///< one per column (edge), in [0, 1]
  Rational objective;            ///< sum_e w_e * values[e]
  /// Packing certificate: y >= 0 with A^T y <= w and sum(y) == objective.
  std::vector<Rational> duals;
  std::size_t iterations = 0;
};

class LpIterationLimit : public std::runtime_error {
 public:
  explicit LpIterationLimit(std::size_t iterations);
};

struct LpOptions {
  std::size_t max_iterations = 1'000'000;
};

/// Solves the covering LP given rows as sorted column-index lists and one
/// positive weight per column.
///
/// Runs a revised primal simplex with Bland's rule on the packing dual
/// max{ 1.y : A^T y <= w, y >= 0 }, whose origin is feasible. The covering
/// solution is read off the simplex multipliers at optimality; it is
/// feasible, and the two objectives agree exactly. The bound x <= 1 never
/// binds at an optimum because every weight is at least 1.
///
/// Throws std::invalid_argument for an empty row (infeasible system) or a
/// weight below 1, LpIterationLimit when the pivot budget runs out.
FractionalSolution solve_covering_lp(std::span<const std::vector<std::size_t>> rows,
                                     std::span<const Weight> weights,
                                     const LpOptions& options = {});

FractionalSolution solve_covering_lp(const IncidenceMatrix& m, const WeightedGraph& g,
                                     const LpOptions& options = {});

/// CPLEX-LP text of the covering relaxation. Variables are x<edge index>,
/// rows are named after structure keys.
std::string to_lp_format(const IncidenceMatrix& m, const WeightedGraph& g);

}  // namespace kcover
