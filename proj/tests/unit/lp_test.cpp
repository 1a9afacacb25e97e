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

#include "doctest.h"
#include "leakgame/error.hpp"
#include "leakgame/lp.hpp"

using leakgame::LinearProgram;
using leakgame::LpStatus;
using leakgame::Rational;
using leakgame::Relation;
using leakgame::Sense;
using leakgame::VariableBounds;

TEST_SUITE("lp") {

TEST_CASE("textbook maximization") {
  // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18: optimum 36 at (2, 6).
  LinearProgram lp;
  lp.sense = Sense::kMaximize;
  lp.objective = {Rational(3), Rational(5)};
  lp.bounds.assign(2, VariableBounds::NonNegative());
  lp.AddConstraint({Rational(1), Rational(0)}, Relation::kLessEqual, Rational(4));
  lp.AddConstraint({Rational(0), Rational(2)}, Relation::kLessEqual, Rational(12));
  lp.AddConstraint({Rational(3), Rational(2)}, Relation::kLessEqual, Rational(18));
  const auto out = leakgame::SolveLp(lp);
  REQUIRE(out.optimal());
  CHECK(out.value == Rational(36));
  CHECK(out.point == std::vector<Rational>{Rational(2), Rational(6)});
}

TEST_CASE("equality rows and free variables") {
  // min t s.t. t >= x, t >= 1 - x, x free in [0, 1]: 1/2.
  LinearProgram lp;
  lp.objective = {Rational(1), Rational(0)};
  lp.bounds = {VariableBounds::Free(), {Rational(0), Rational(1)}};
  lp.AddConstraint({Rational(1), Rational(-1)}, Relation::kGreaterEqual, Rational(0));
  lp.AddConstraint({Rational(1), Rational(1)}, Relation::kGreaterEqual, Rational(1));
  auto out = leakgame::SolveLp(lp);
  REQUIRE(out.optimal());
  CHECK(out.value == Rational(1, 2));
  CHECK(out.point[1] == Rational(1, 2));

  LinearProgram eq;
  eq.objective = {Rational(1), Rational(1)};
  eq.AddConstraint({Rational(1), Rational(2)}, Relation::kEqual, Rational(3));
  eq.AddConstraint({Rational(1), Rational(-1)}, Relation::kEqual, Rational(0));
  out = leakgame::SolveLp(eq);
  REQUIRE(out.optimal());
  CHECK(out.value == Rational(2));
}

TEST_CASE("infeasible and unbounded programs are reported") {
  LinearProgram lp;
  lp.objective = {Rational(1)};
  lp.bounds = {VariableBounds::NonNegative()};
  lp.AddConstraint({Rational(1)}, Relation::kLessEqual, Rational(-1));
  CHECK(leakgame::SolveLp(lp).status == LpStatus::kInfeasible);

  LinearProgram up;
  up.sense = Sense::kMaximize;
  up.objective = {Rational(1)};
  up.bounds = {VariableBounds::NonNegative()};
  CHECK(leakgame::SolveLp(up).status == LpStatus::kUnbounded);
}

TEST_CASE("degenerate program terminates") {
  // Many redundant constraints through the optimum.
  LinearProgram lp;
  lp.sense = Sense::kMaximize;
  lp.objective = {Rational(1), Rational(1), Rational(1)};
  lp.bounds.assign(3, VariableBounds::NonNegative());
  for (int k = 1; k <= 12; ++k) {
    lp.AddConstraint({Rational(k), Rational(1), Rational(0)},
                     Relation::kLessEqual, Rational(0));
    lp.AddConstraint({Rational(0), Rational(k), Rational(1)},
                     Relation::kLessEqual, Rational(0));
  }
  lp.AddConstraint({Rational(1), Rational(1), Rational(1)},
                   Relation::kLessEqual, Rational(1));
  const auto out = leakgame::SolveLp(lp);
  REQUIRE(out.optimal());
  CHECK(out.value == Rational(0));
}

TEST_CASE("shape mismatches throw") {
  LinearProgram lp;
  lp.objective = {Rational(1), Rational(1)};
  lp.AddConstraint({Rational(1)}, Relation::kLessEqual, Rational(1));
  CHECK_THROWS_AS(leakgame::SolveLp(lp), leakgame::Error);
  LinearProgram bad_bounds;
  bad_bounds.objective = {Rational(1)};
  bad_bounds.bounds.assign(2, VariableBounds::Free());
  CHECK_THROWS_AS(leakgame::SolveLp(bad_bounds), leakgame::Error);
}

TEST_CASE("feasibility check") {
  LinearProgram lp;
  lp.objective = {Rational(1)};
  lp.bounds = {{Rational(0), Rational(2)}};
  lp.AddConstraint({Rational(1)}, Relation::kGreaterEqual, Rational(1));
  CHECK(leakgame::IsFeasiblePoint(lp, {Rational(3, 2)}));
  CHECK_FALSE(leakgame::IsFeasiblePoint(lp, {Rational(1, 2)}));
  CHECK_FALSE(leakgame::IsFeasiblePoint(lp, {Rational(3)}));
}

}  // TEST_SUITE
