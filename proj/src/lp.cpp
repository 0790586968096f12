#include "kcover/lp.hpp"

#include <sstream>

namespace kcover {

Rational fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

LpIterationLimit::LpIterationLimit(std::size_t iterations)
    : std::runtime_error("simplex iteration limit reached after " +
                         std::to_string(iterations) + " pivots") {}

namespace {

// Revised simplex over the packing dual
//
//   max 1.y   s.t.   A^T y + s = w,   y, s >= 0
//
// with one constraint per edge. Variables 0..m-1 are the structure duals y,
// variables m..m+n-1 the slacks s. The explicit basis inverse is n x n.
class PackingSimplex {
 public:
  PackingSimplex(std::span<const std::vector<std::size_t>> rows, std::span<const Weight> weights)
      : rows_(rows), m_(rows.size()), n_(weights.size()) {
    basic_.resize(n_);
    position_.assign(m_ + n_, npos);
    inverse_.assign(n_, std::vector<Rational>(n_, 0));
    beta_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      basic_[i] = m_ + i;
      position_[m_ + i] = i;
      inverse_[i][i] = 1;
      beta_[i] = weights[i];
    }
  }

  std::size_t solve(std::size_t max_iterations) {
    std::size_t iterations = 0;
    std::size_t degenerate_run = 0;
    pi_.assign(n_, 0);
    for (;;) {
      const bool bland = degenerate_run >= kBlandAfter;
      const std::size_t entering = bland ? choose_bland() : choose_dantzig();
      if (entering == npos) return iterations;
      if (iterations == max_iterations) throw LpIterationLimit(iterations);
      degenerate_run = pivot(entering) ? 0 : degenerate_run + 1;
      ++iterations;
    }
  }

  const std::vector<Rational>& multipliers() const { return pi_; }

  std::vector<Rational> structure_values() const {
    std::vector<Rational> y(m_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      if (basic_[i] < m_) y[basic_[i]] = beta_[i];
    return y;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool is_structure(std::size_t var) const { return var < m_; }

  // Consecutive degenerate pivots tolerated before switching to Bland's rule.
  static constexpr std::size_t kBlandAfter = 50;

  void reduced_cost(std::size_t var, Rational& out) const {
    if (is_structure(var)) {
      out = 1;
      for (std::size_t e : rows_[var]) out -= pi_[e];
    } else {
      out = -pi_[var - m_];
    }
  }

  // Largest reduced cost, ties to the lowest index.
  std::size_t choose_dantzig() {
    std::size_t best = npos;
    Rational reduced;
    for (std::size_t j = 0; j < m_ + n_; ++j) {
      if (position_[j] != npos) continue;
      reduced_cost(j, reduced);
      if (sgn(reduced) > 0 && (best == npos || reduced > best_reduced_)) {
        best = j;
        best_reduced_ = reduced;
      }
    }
    return best;
  }

  // Bland: lowest-index variable with positive reduced cost.
  std::size_t choose_bland() {
    for (std::size_t j = 0; j < m_ + n_; ++j) {
      if (position_[j] != npos) continue;
      reduced_cost(j, best_reduced_);
      if (sgn(best_reduced_) > 0) return j;
    }
    return npos;
  }

  // Returns false for a degenerate pivot. Expects best_reduced_ to hold the
  // entering reduced cost.
  bool pivot(std::size_t entering) {
    std::vector<Rational> column(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      if (is_structure(entering)) {
        for (std::size_t e : rows_[entering]) column[i] += inverse_[i][e];
      } else {
        column[i] = inverse_[i][entering - m_];
      }
    }

    // Ratio test; ties go to the lowest-index basic variable.
    std::size_t leave = npos;
    Rational best;
    Rational ratio;
    for (std::size_t i = 0; i < n_; ++i) {
      if (sgn(column[i]) <= 0) continue;
      ratio = beta_[i] / column[i];
      if (leave == npos || ratio < best || (ratio == best && basic_[i] < basic_[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Every y_j is bounded by the weights of its edges.
    if (leave == npos) throw std::logic_error("packing LP reported unbounded");

    const Rational pivot_value = column[leave];
    auto& pivot_row = inverse_[leave];
    for (auto& v : pivot_row)
      if (sgn(v) != 0) v /= pivot_value;
    beta_[leave] /= pivot_value;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == leave || sgn(column[i]) == 0) continue;
      const Rational factor = column[i];
      auto& row = inverse_[i];
      for (std::size_t e = 0; e < n_; ++e)
        if (sgn(pivot_row[e]) != 0) row[e] -= factor * pivot_row[e];
      beta_[i] -= factor * beta_[leave];
    }

    for (std::size_t e = 0; e < n_; ++e)
      if (sgn(pivot_row[e]) != 0) pi_[e] += best_reduced_ * pivot_row[e];

    position_[basic_[leave]] = npos;
    basic_[leave] = entering;
    position_[entering] = leave;
    return sgn(best) != 0;
  }

  std::span<const std::vector<std::size_t>> rows_;
  std::size_t m_;
  std::size_t n_;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> position_;
  std::vector<std::vector<Rational>> inverse_;
  std::vector<Rational> beta_;
  std::vector<Rational> pi_;
  Rational best_reduced_;
};

}  // namespace

FractionalSolution solve_covering_lp(std::span<const std::vector<std::size_t>> rows,
                                     std::span<const Weight> weights,
                                     const LpOptions& options) {
  for (Weight w : weights)
    if (w < 1) throw std::invalid_argument("covering LP weights must be positive");
  for (const auto& row : rows) {
    if (row.empty()) throw std::invalid_argument("covering LP has an empty row");
    for (std::size_t c : row)
      if (c >= weights.size()) throw std::invalid_argument("covering LP column out of range");
  }

  PackingSimplex simplex(rows, weights);
  FractionalSolution out;
  out.iterations = simplex.solve(options.max_iterations);
  out.values = simplex.multipliers();
  out.duals = simplex.structure_values();
  out.objective = 0;
  for (std::size_t e = 0; e < weights.size(); ++e) out.objective += weights[e] * out.values[e];

  Rational packed = 0;
  for (const auto& y : out.duals) packed += y;
  if (packed != out.objective)
    throw std::logic_error("covering LP duality gap: " + to_string(out.objective) + " vs " +
                           to_string(packed));
  return out;
}

FractionalSolution solve_covering_lp(const IncidenceMatrix& m, const WeightedGraph& g,
                                     const LpOptions& options) {
  if (m.columns != g.edges())
    throw std::invalid_argument("incidence columns do not match the graph's edge order");
  return solve_covering_lp(m.row_columns, g.weights(), options);
}

std::string to_lp_format(const IncidenceMatrix& m, const WeightedGraph& g) {
  std::ostringstream out;
  out << "\\ covering relaxation: " << m.row_count() << " rows, " << m.column_count()
      << " columns\n";
  out << "Minimize\n obj:";
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    out << (e ? " + " : " ") << g.weight(e) << " x" << e;
  if (g.edge_count() == 0) out << " 0";
  out << "\nSubject To\n";
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    out << " s_" << key_string(m.rows[r]) << ":";
    const auto& cols = m.row_columns[r];
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? " + " : " ") << "x" << cols[i];
    out << " >= 1\n";
  }
  out << "Bounds\n";
  for (std::size_t e = 0; e < g.edge_count(); ++e) out << " 0 <= x" << e << " <= 1\n";
  out << "End\n";
  return out.str();
}

}  // namespace kcover
