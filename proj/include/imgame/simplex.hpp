// Copyright 2026 The imgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "imgame/rational.hpp"

namespace imgame {

enum class Direction
{
  maximize,
  minimize,
};

enum class Sense
{
  less_equal,
  greater_equal,
  equal,
};

enum class LpStatus
{
  optimal,
  infeasible,
  unbounded,
};

/// Dense LP: optimise objective . x subject to constraints * x (senses) rhs, x >= 0.
template <typename Scalar> struct LinearProgram
{
  Direction direction = Direction::maximize;
  VectorX<Scalar> objective;
  MatrixX<Scalar> constraints;
  std::vector<Sense> senses;
  VectorX<Scalar> rhs;
  /// Optional; used only when writing the LP out as text.
  std::vector<std::string> variable_names;
  std::vector<std::string> row_names;

  Eigen::Index variables() const { return objective.size(); }
  Eigen::Index rows() const { return rhs.size(); }

  void validate() const
  {
    if (constraints.rows() != rhs.size() || constraints.cols() != objective.size() ||
        static_cast<Eigen::Index>(senses.size()) != rhs.size()) {
      throw std::invalid_argument("linear program dimensions are inconsistent: " +
                                  std::to_string(constraints.rows()) + "x" + std::to_string(constraints.cols()) +
                                  " matrix, " + std::to_string(objective.size()) + " objective entries, " +
                                  std::to_string(rhs.size()) + " right-hand sides, " +
                                  std::to_string(senses.size()) + " senses");
    }
    if (!variable_names.empty() && static_cast<Eigen::Index>(variable_names.size()) != variables()) {
      throw std::invalid_argument("variable name count does not match variable count");
    }
    if (!row_names.empty() && static_cast<Eigen::Index>(row_names.size()) != rows()) {
      throw std::invalid_argument("row name count does not match row count");
    }
  }
};

template <typename Scalar> struct LpResult
{
  LpStatus status = LpStatus::infeasible;
  /// Basic solution in the original variables (empty unless optimal).
  VectorX<Scalar> x;
  Scalar value{0};
  /// Basic variable per surviving row, in tableau column numbering.
  std::vector<Eigen::Index> basis;
  std::size_t pivots = 0;
};

namespace detail {

/// Dense simplex tableau. The last row holds reduced costs for minimisation
/// and minus the current objective value in its last column.
template <typename Scalar> class Tableau
{
public:
  Tableau(MatrixX<Scalar> table, std::vector<Eigen::Index> basis) : t_(std::move(table)), basis_(std::move(basis)) {}

  Eigen::Index rows() const { return t_.rows() - 1; }
  Eigen::Index columns() const { return t_.cols() - 1; }
  MatrixX<Scalar> &table() { return t_; }
  const MatrixX<Scalar> &table() const { return t_; }
  std::vector<Eigen::Index> &basis() { return basis_; }

  void pivot(Eigen::Index row, Eigen::Index col)
  {
    const Scalar p = t_(row, col);
    t_.row(row) /= p;
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      if (i == row) continue;
      const Scalar f = t_(i, col);
      if (f != 0) t_.row(i) -= f * t_.row(row);
    }
    basis_[static_cast<std::size_t>(row)] = col;
    ++pivots_;
  }

  /// Writes the reduced-cost row for the given column costs (zero for columns past costs.size()).
  void price(const VectorX<Scalar> &costs)
  {
    const Eigen::Index m = rows();
    t_.row(m).setZero();
    t_.row(m).head(costs.size()) = costs.transpose();
    for (Eigen::Index i = 0; i < m; ++i) {
      const Eigen::Index b = basis_[static_cast<std::size_t>(i)];
      const Scalar cb = b < costs.size() ? costs(b) : Scalar(0);
      if (cb != 0) t_.row(m) -= cb * t_.row(i);
    }
  }

  /// Bland's rule over columns [0, eligible). Returns false when unbounded.
  bool optimise(Eigen::Index eligible)
  {
    const Eigen::Index m = rows();
    const Eigen::Index rhs = columns();
    while (true) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < eligible; ++j) {
        if (t_(m, j) < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Scalar best_ratio{0};
      for (Eigen::Index i = 0; i < m; ++i) {
        if (t_(i, enter) <= 0) continue;
        const Scalar ratio = t_(i, rhs) / t_(i, enter);
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void drop_row(Eigen::Index row)
  {
    const Eigen::Index last = t_.rows() - 1;
    MatrixX<Scalar> kept(t_.rows() - 1, t_.cols());
    kept.topRows(row) = t_.topRows(row);
    kept.bottomRows(last - row) = t_.bottomRows(last - row);
    t_ = std::move(kept);
    basis_.erase(basis_.begin() + row);
  }

  std::size_t pivots() const { return pivots_; }

private:
  MatrixX<Scalar> t_;
  std::vector<Eigen::Index> basis_;
  std::size_t pivots_ = 0;
};

} // namespace detail

/// Two-phase primal simplex with Bland's rule, exact in Scalar. Terminates
/// under degeneracy. Returns an optimal basic solution or the
/// infeasible/unbounded status. Throws std::invalid_argument on
/// inconsistent dimensions.
template <typename Scalar> LpResult<Scalar> solve_general(const LinearProgram<Scalar> &lp)
{
  lp.validate();
  const Eigen::Index n = lp.variables();
  const Eigen::Index m = lp.rows();

  // Normalise to nonnegative right-hand sides.
  MatrixX<Scalar> a = lp.constraints;
  VectorX<Scalar> b = lp.rhs;
  std::vector<Sense> senses = lp.senses;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (b(i) < 0) {
      a.row(i) *= Scalar(-1);
      b(i) = -b(i);
      auto &s = senses[static_cast<std::size_t>(i)];
      if (s == Sense::less_equal) s = Sense::greater_equal;
      else if (s == Sense::greater_equal) s = Sense::less_equal;
    }
  }

  Eigen::Index slacks = 0;
  Eigen::Index artificials = 0;
  for (const Sense s : senses) {
    if (s != Sense::equal) ++slacks;
    if (s != Sense::less_equal) ++artificials;
  }
  // Column layout: originals | slack/surplus | artificials | rhs.
  const Eigen::Index structural = n + slacks;
  const Eigen::Index total = structural + artificials;
  MatrixX<Scalar> table = MatrixX<Scalar>::Zero(m + 1, total + 1);
  table.topLeftCorner(m, n) = a;
  table.col(total).head(m) = b;
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  Eigen::Index next_slack = n;
  Eigen::Index next_artificial = structural;
  for (Eigen::Index i = 0; i < m; ++i) {
    const Sense s = senses[static_cast<std::size_t>(i)];
    if (s == Sense::less_equal) {
      table(i, next_slack) = Scalar(1);
      basis[static_cast<std::size_t>(i)] = next_slack++;
    } else {
      if (s == Sense::greater_equal) table(i, next_slack++) = Scalar(-1);
      table(i, next_artificial) = Scalar(1);
      basis[static_cast<std::size_t>(i)] = next_artificial++;
    }
  }
  detail::Tableau<Scalar> tab(std::move(table), std::move(basis));

  LpResult<Scalar> result;
  if (artificials > 0) {
    VectorX<Scalar> phase1 = VectorX<Scalar>::Zero(total);
    phase1.tail(artificials).setOnes();
    tab.price(phase1);
    tab.optimise(total);
    if (tab.table()(tab.rows(), total) != 0) {
      result.status = LpStatus::infeasible;
      result.pivots = tab.pivots();
      return result;
    }
    // Drive remaining (zero-valued) artificials out of the basis; rows with
    // no structural entry are redundant and are dropped.
    for (Eigen::Index i = tab.rows() - 1; i >= 0; --i) {
      if (tab.basis()[static_cast<std::size_t>(i)] < structural) continue;
      Eigen::Index col = -1;
      for (Eigen::Index j = 0; j < structural; ++j) {
        if (tab.table()(i, j) != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) tab.pivot(i, col);
      else tab.drop_row(i);
    }
  }

  VectorX<Scalar> costs = VectorX<Scalar>::Zero(structural);
  costs.head(n) = lp.direction == Direction::minimize ? lp.objective : VectorX<Scalar>(-lp.objective);
  tab.price(costs);
  if (!tab.optimise(structural)) {
    result.status = LpStatus::unbounded;
    result.pivots = tab.pivots();
    return result;
  }

  result.status = LpStatus::optimal;
  result.x = VectorX<Scalar>::Zero(n);
  for (Eigen::Index i = 0; i < tab.rows(); ++i) {
    const Eigen::Index col = tab.basis()[static_cast<std::size_t>(i)];
    if (col < n) result.x(col) = tab.table()(i, total);
  }
  result.value = n > 0 ? Scalar(lp.objective.dot(result.x)) : Scalar(0);
  result.basis = tab.basis();
  result.pivots = tab.pivots();
  return result;
}

} // namespace imgame
