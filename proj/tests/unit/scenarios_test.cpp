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
#include "leakgame/scenarios.hpp"
#include "testing.hpp"

using leakgame::Label;
using leakgame::PasswordConfig;
using leakgame::Rational;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

}  // namespace

TEST_SUITE("scenarios") {

TEST_CASE("running example channels") {
  const auto spec = leakgame::RunningExample();
  CHECK(spec.channel(0, 0).entries() ==
        leakgame::Matrix{{R(1), R(0)}, {R(1), R(0)}});
  CHECK(spec.channel(1, 1).entries() ==
        leakgame::Matrix{{R(1, 3), R(2, 3)}, {R(2, 3), R(1, 3)}});
  const auto modified = leakgame::ModifiedRunningExample();
  CHECK(modified.channel(1, 1) == spec.channel(0, 0));
  CHECK(modified.channel(0, 1) == spec.channel(0, 1));
}

TEST_CASE("bit strings and outputs") {
  CHECK(leakgame::BitStrings(2) == std::vector<std::string>{"00", "01", "10", "11"});
  PasswordConfig cfg = PasswordConfig::Default();
  CHECK(cfg.orders.size() == 6);
  CHECK(cfg.orders.front() == "123");
  const auto outputs = leakgame::PasswordOutputs(cfg);
  REQUIRE(outputs.size() == 4);
  CHECK(outputs[0] == Label::Pair("F", "1"));
  CHECK(outputs[3] == Label::Pair("T", "3"));
  cfg.constant_time = true;
  CHECK(leakgame::PasswordOutputs(cfg).size() == 2);
}

TEST_CASE("default prior is the renormalized rounded prior") {
  const auto prior = leakgame::DefaultPasswordPrior();
  Rational raw_sum;
  for (const char* p : leakgame_test::kPasswordPrior) {
    raw_sum += Rational::Parse(p);
  }
  CHECK(raw_sum == R(10001, 10000));
  for (std::size_t x = 0; x < 8; ++x) {
    CHECK(prior[x] ==
          Rational::Parse(leakgame_test::kPasswordPrior[x]) / raw_sum);
  }
}

TEST_CASE("iterations match the simulated checker") {
  for (bool constant_time : {false, true}) {
    PasswordConfig cfg = PasswordConfig::Default();
    cfg.constant_time = constant_time;
    for (const auto& order : cfg.orders) {
      for (const auto& guess : leakgame::BitStrings(3)) {
        for (const auto& secret : leakgame::BitStrings(3)) {
          const auto run = leakgame_test::SimulateChecker(order, guess, secret,
                                                          constant_time);
          CHECK(leakgame::Iterations(cfg, order, guess, secret) == run.iterations);
        }
      }
    }
  }
}

TEST_CASE("password channels are deterministic and accept only the guess") {
  const PasswordConfig cfg = PasswordConfig::Default();
  const auto secrets = leakgame::BitStrings(3);
  for (const auto& order : cfg.orders) {
    for (std::size_t g = 0; g < secrets.size(); ++g) {
      const auto c = leakgame::PasswordChannel(cfg, order, secrets[g]);
      for (std::size_t x = 0; x < secrets.size(); ++x) {
        int ones = 0;
        for (std::size_t y = 0; y < c.num_outputs(); ++y) {
          if (c(x, y) == R(1)) ++ones;
          else CHECK(c(x, y) == R(0));
        }
        CHECK(ones == 1);
        const auto run =
            leakgame_test::SimulateChecker(order, secrets[g], secrets[x], false);
        const std::size_t y = run.accepted ? 3 : run.iterations - 1;
        CHECK(c(x, y) == R(1));
        // Order never changes the verdict.
        CHECK(run.accepted ==
              leakgame_test::SimulateChecker("123", secrets[g], secrets[x], false)
                  .accepted);
      }
      const std::size_t accept = c.num_outputs() - 1;
      for (std::size_t x = 0; x < secrets.size(); ++x) {
        CHECK((c(x, accept) == R(1)) == (x == g));
      }
    }
  }
}

TEST_CASE("expected iterations") {
  PasswordConfig cfg = PasswordConfig::Default();
  const auto point = leakgame::Mix::PointMass(cfg.orders, 0);
  // Direct summation from the simulated checker.
  Rational expected;
  const auto secrets = leakgame::BitStrings(3);
  for (std::size_t x = 0; x < secrets.size(); ++x) {
    expected += cfg.prior[x] *
                leakgame_test::SimulateChecker("123", "101", secrets[x], false)
                    .iterations;
  }
  CHECK(leakgame::ExpectedIterations(cfg, point, "101") == expected);
  cfg.constant_time = true;
  CHECK(leakgame::ExpectedIterations(cfg, leakgame::Mix::Uniform(cfg.orders),
                                     "010") == R(3));
}

TEST_CASE("config validation") {
  PasswordConfig cfg = PasswordConfig::Default();
  cfg.orders = {"124"};
  CHECK_THROWS_AS(leakgame::ValidatePasswordConfig(cfg), leakgame::Error);
  cfg.orders = {"112"};
  CHECK_THROWS_AS(leakgame::ValidatePasswordConfig(cfg), leakgame::Error);
  cfg = PasswordConfig::Default(2);
  CHECK(cfg.orders == std::vector<std::string>{"12", "21"});
  CHECK(cfg.prior[0] == R(1, 4));
  CHECK_NOTHROW(leakgame::ValidatePasswordConfig(cfg));
  cfg.prior = leakgame::DefaultPasswordPrior();
  CHECK_THROWS_AS(leakgame::ValidatePasswordConfig(cfg), leakgame::Error);
  CHECK_THROWS_AS(PasswordConfig::Default(0), leakgame::Error);
}

TEST_CASE("two-bit game solves") {
  const auto spec = leakgame::PasswordGame(PasswordConfig::Default(2));
  CHECK(spec.num_defender_actions() == 2);
  CHECK(spec.num_attacker_actions() == 4);
  const auto iv = leakgame::SolveGameIV(spec);
  CHECK(iv.value == leakgame_test::HiddenPiecewiseOracle(spec, {0, 1, 2, 3}).value);
}

}  // TEST_SUITE
