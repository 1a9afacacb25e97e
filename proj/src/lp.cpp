// Copyright 2026 The leakgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "leakgame/lp.hpp"

#include <string>
#include <utility>

#include "leakgame/error.hpp"

namespace leakgame {
namespace {

// An original variable x = offset + z[plus] - z[minus], with z >= 0.
struct VariableMap {
  Rational offset;
  int plus = -1;
  int minus = -1;
};

// Row-major simplex tableau in canonical form. Column `width` holds the rhs.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<int> basis,
          int width)
      : rows_(std::move(rows)), basis_(std::move(basis)), width_(width) {}

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }
  const Rational& at(int r, int c) const { return rows_[r][c]; }
  const Rational& rhs(int r) const { return rows_[r][width_]; }
  int basic(int r) const { return basis_[r]; }

  void RemoveRow(int r) {
    rows_.erase(rows_.begin() + r);
    basis_.erase(basis_.begin() + r);
  }

  // Pivots on (r, c) and applies the same elimination to `objective`.
  void Pivot(int r, int c, std::vector<Rational>& objective) {
    std::vector<Rational>& pivot_row = rows_[r];
    const Rational inverse = Rational(1) / pivot_row[c];
    std::vector<int> nonzero;
    for (int j = 0; j <= width_; ++j) {
      if (pivot_row[j].IsZero()) continue;
      pivot_row[j] *= inverse;
      nonzero.push_back(j);
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[c].IsZero()) return;
      const Rational factor = row[c];
      for (int j : nonzero) row[j] -= factor * pivot_row[j];
    };
    for (int i = 0; i < num_rows(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(objective);
    basis_[r] = c;
  }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> basis_;
  int width_;
};

enum class PhaseResult { kOptimal, kUnbounded };

// Reduced-cost row for `cost` with respect to the current basis; the last
// entry is minus the objective value.
std::vector<Rational> ReducedCosts(const Tableau& t,
                                   const std::vector<Rational>& cost) {
  std::vector<Rational> z(cost);
  z.resize(t.width() + 1);
  for (int i = 0; i < t.num_rows(); ++i) {
    const Rational& cb = cost[t.basic(i)];
    if (cb.IsZero()) continue;
    for (int j = 0; j <= t.width(); ++j) {
      if (!t.at(i, j).IsZero()) z[j] -= cb * t.at(i, j);
    }
  }
  return z;
}

// Consecutive degenerate pivots tolerated before switching to Bland's rule.
constexpr int kDegenerateLimit = 32;

// Minimizes `cost` from the current basic feasible solution. Entering column
// is the most negative reduced cost until the objective stalls, then Bland's
// rule (lowest eligible index) for the rest of the phase, which rules out
// cycling. Ties in the ratio test go to the lowest basic variable index.
PhaseResult Minimize(Tableau& t, const std::vector<Rational>& cost,
                     int eligible_columns) {
  std::vector<Rational> z = ReducedCosts(t, cost);
  int degenerate_run = 0;
  bool bland = false;
  while (true) {
    int entering = -1;
    for (int j = 0; j < eligible_columns; ++j) {
      if (z[j].Sign() >= 0) continue;
      if (entering < 0 || (!bland && z[j] < z[entering])) entering = j;
      if (bland) break;
    }
    if (entering < 0) return PhaseResult::kOptimal;

    int leaving = -1;
    Rational best_ratio;
    for (int i = 0; i < t.num_rows(); ++i) {
      if (t.at(i, entering).Sign() <= 0) continue;
      Rational ratio = t.rhs(i) / t.at(i, entering);
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && t.basic(i) < t.basic(leaving))) {
        leaving = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leaving < 0) return PhaseResult::kUnbounded;
    if (best_ratio.IsZero()) {
      if (++degenerate_run > kDegenerateLimit) bland = true;
    } else {
      degenerate_run = 0;
    }
    t.Pivot(leaving, entering, z);
  }
}

void CheckShape(const LinearProgram& lp) {
  const std::size_t n = lp.num_variables();
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    if (lp.constraints[i].coefficients.size() != n) {
      ThrowInvalid("malformed linear program: constraint " +
                   std::to_string(i) + " has " +
                   std::to_string(lp.constraints[i].coefficients.size()) +
                   " coefficients, objective has " + std::to_string(n));
    }
  }
  if (!lp.bounds.empty() && lp.bounds.size() != n) {
    ThrowInvalid("malformed linear program: " +
                 std::to_string(lp.bounds.size()) + " bounds for " +
                 std::to_string(n) + " variables");
  }
}

}  // namespace

LpOutcome SolveLp(const LinearProgram& lp) {
  CheckShape(lp);
  const std::size_t n = lp.num_variables();

  // Map original variables onto non-negative standard-form columns.
  std::vector<VariableMap> vars(n);
  std::vector<Constraint> rows;  // rows over standard-form columns, built below
  int columns = 0;
  std::vector<std::pair<int, Rational>> upper_rows;  // z[col] <= value
  for (std::size_t j = 0; j < n; ++j) {
    const VariableBounds b = lp.bounds.empty() ? VariableBounds::Free()
                                               : lp.bounds[j];
    VariableMap& v = vars[j];
    if (b.lower) {
      v.offset = *b.lower;
      v.plus = columns++;
      if (b.upper) upper_rows.emplace_back(v.plus, *b.upper - *b.lower);
    } else if (b.upper) {
      v.offset = *b.upper;
      v.minus = columns++;
    } else {
      v.plus = columns++;
      v.minus = columns++;
    }
  }
  const int structural = columns;

  for (const Constraint& c : lp.constraints) {
    Constraint row;
    row.coefficients.assign(structural, Rational(0));
    row.relation = c.relation;
    row.rhs = c.rhs;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& a = c.coefficients[j];
      if (a.IsZero()) continue;
      row.rhs -= a * vars[j].offset;
      if (vars[j].plus >= 0) row.coefficients[vars[j].plus] += a;
      if (vars[j].minus >= 0) row.coefficients[vars[j].minus] -= a;
    }
    rows.push_back(std::move(row));
  }
  for (auto& [col, value] : upper_rows) {
    Constraint row;
    row.coefficients.assign(structural, Rational(0));
    row.coefficients[col] = Rational(1);
    row.relation = Relation::kLessEqual;
    row.rhs = value;
    rows.push_back(std::move(row));
  }
  // Make rhs >= 0; zero-rhs ">=" rows are flipped too so their slack can
  // start in the basis instead of an artificial.
  for (Constraint& row : rows) {
    if (row.rhs.Sign() < 0 ||
        (row.rhs.IsZero() && row.relation == Relation::kGreaterEqual)) {
      for (Rational& a : row.coefficients) a = -a;
      row.rhs = -row.rhs;
      if (row.relation == Relation::kLessEqual) {
        row.relation = Relation::kGreaterEqual;
      } else if (row.relation == Relation::kGreaterEqual) {
        row.relation = Relation::kLessEqual;
      }
    }
  }

  // Column layout: structural | slack/surplus | artificial | rhs.
  const int m = static_cast<int>(rows.size());
  int slack_count = 0;
  int artificial_count = 0;
  for (const Constraint& row : rows) {
    if (row.relation != Relation::kEqual) ++slack_count;
    if (row.relation != Relation::kLessEqual) ++artificial_count;
  }
  const int first_artificial = structural + slack_count;
  const int width = first_artificial + artificial_count;

  std::vector<std::vector<Rational>> table(m);
  std::vector<int> basis(m);
  int next_slack = structural;
  int next_artificial = first_artificial;
  for (int i = 0; i < m; ++i) {
    std::vector<Rational>& t = table[i];
    t.assign(width + 1, Rational(0));
    for (int j = 0; j < structural; ++j) t[j] = rows[i].coefficients[j];
    t[width] = rows[i].rhs;
    switch (rows[i].relation) {
      case Relation::kLessEqual:
        t[next_slack] = Rational(1);
        basis[i] = next_slack++;
        break;
      case Relation::kGreaterEqual:
        t[next_slack++] = Rational(-1);
        t[next_artificial] = Rational(1);
        basis[i] = next_artificial++;
        break;
      case Relation::kEqual:
        t[next_artificial] = Rational(1);
        basis[i] = next_artificial++;
        break;
    }
  }
  Tableau tableau(std::move(table), std::move(basis), width);

  LpOutcome outcome;
  if (artificial_count > 0) {
    std::vector<Rational> phase1(width, Rational(0));
    for (int j = first_artificial; j < width; ++j) phase1[j] = Rational(1);
    Minimize(tableau, phase1, width);
    Rational infeasibility;
    for (int i = 0; i < tableau.num_rows(); ++i) {
      if (tableau.basic(i) >= first_artificial) {
        infeasibility += tableau.rhs(i);
      }
    }
    if (infeasibility.Sign() > 0) {
      outcome.status = LpStatus::kInfeasible;
      return outcome;
    }
    // Drive zero-valued artificials out of the basis; drop redundant rows.
    std::vector<Rational> scratch(width + 1, Rational(0));
    for (int i = tableau.num_rows() - 1; i >= 0; --i) {
      if (tableau.basic(i) < first_artificial) continue;
      int column = -1;
      for (int j = 0; j < first_artificial; ++j) {
        if (!tableau.at(i, j).IsZero()) {
          column = j;
          break;
        }
      }
      if (column >= 0) {
        tableau.Pivot(i, column, scratch);
      } else {
        tableau.RemoveRow(i);
      }
    }
  }

  std::vector<Rational> cost(width, Rational(0));
  const bool maximize = lp.sense == Sense::kMaximize;
  for (std::size_t j = 0; j < n; ++j) {
    Rational c = maximize ? -lp.objective[j] : lp.objective[j];
    if (vars[j].plus >= 0) cost[vars[j].plus] += c;
    if (vars[j].minus >= 0) cost[vars[j].minus] -= c;
  }
  if (Minimize(tableau, cost, first_artificial) == PhaseResult::kUnbounded) {
    outcome.status = LpStatus::kUnbounded;
    return outcome;
  }

  std::vector<Rational> z(width, Rational(0));
  for (int i = 0; i < tableau.num_rows(); ++i) z[tableau.basic(i)] = tableau.rhs(i);
  outcome.status = LpStatus::kOptimal;
  outcome.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational x = vars[j].offset;
    if (vars[j].plus >= 0) x += z[vars[j].plus];
    if (vars[j].minus >= 0) x -= z[vars[j].minus];
    outcome.value += lp.objective[j] * x;
    outcome.point[j] = std::move(x);
  }
  return outcome;
}

bool IsFeasiblePoint(const LinearProgram& lp,
                     const std::vector<Rational>& point) {
  if (point.size() != lp.num_variables()) return false;
  for (const Constraint& c : lp.constraints) {
    if (c.coefficients.size() != point.size()) return false;
    Rational lhs;
    for (std::size_t j = 0; j < point.size(); ++j) {
      if (!c.coefficients[j].IsZero()) lhs += c.coefficients[j] * point[j];
    }
    switch (c.relation) {
      case Relation::kLessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != c.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  for (std::size_t j = 0; j < lp.bounds.size() && j < point.size(); ++j) {
    if (lp.bounds[j].lower && point[j] < *lp.bounds[j].lower) return false;
    if (lp.bounds[j].upper && point[j] > *lp.bounds[j].upper) return false;
  }
  return true;
}

}  // namespace leakgame
