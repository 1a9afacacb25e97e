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

#ifndef LEAKGAME_LP_HPP_
#define LEAKGAME_LP_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "leakgame/rational.hpp"

namespace leakgame {

enum class Sense { kMinimize, kMaximize };
enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// Absent bounds mean unbounded on that side.
struct VariableBounds {
  std::optional<Rational> lower;
  std::optional<Rational> upper;

  static VariableBounds Free() { return {}; }
  static VariableBounds NonNegative() { return {Rational(0), std::nullopt}; }
};

// A dense linear program over exact rationals. An empty `bounds` vector means
// every variable is free; otherwise it must have one entry per variable.
struct LinearProgram {
  Sense sense = Sense::kMinimize;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  std::vector<VariableBounds> bounds;

  std::size_t num_variables() const { return objective.size(); }

  void AddConstraint(std::vector<Rational> coefficients, Relation relation,
                     Rational rhs) {
    constraints.push_back(
        Constraint{std::move(coefficients), relation, std::move(rhs)});
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> point;  // set only when optimal
  Rational value;               // set only when optimal

  bool optimal() const { return status == LpStatus::kOptimal; }
};

// Two-phase dense simplex with Dantzig pricing and a fallback to Bland's rule
// after a run of degenerate pivots. The returned optimum is
// exact and is a basic feasible solution of the internal standard form.
// Throws Error(kInvalidArgument) when rows or bounds do not match the
// objective width; infeasibility and unboundedness are reported in the outcome.
LpOutcome SolveLp(const LinearProgram& lp);

// True iff `point` satisfies every constraint and bound of `lp` exactly.
bool IsFeasiblePoint(const LinearProgram& lp, const std::vector<Rational>& point);

}  // namespace leakgame

#endif  // LEAKGAME_LP_HPP_
