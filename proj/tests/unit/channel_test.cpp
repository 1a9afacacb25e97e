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
#include "leakgame/channel.hpp"
#include "leakgame/error.hpp"
#include "testing.hpp"

using leakgame::Channel;
using leakgame::Label;
using leakgame::Matrix;
using leakgame::Rational;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

Channel Make(Matrix m, const std::string& prefix = "y") {
  const std::size_t nx = m.size(), ny = m[0].size();
  return leakgame::ValidateChannel(leakgame_test::Names("x", nx),
                                   leakgame_test::OutputLabels(prefix, ny),
                                   std::move(m));
}

}  // namespace

TEST_SUITE("channel") {

TEST_CASE("labels") {
  const Label pair = Label::Pair("F", "1");
  CHECK(pair.ToString() == "(F,1)");
  CHECK(Label::Pair("y", Label::Pair("a", "b")).ToString() == "(y,(a,b))");
  CHECK(Label::Fresh(0).ToString() == "#0");
  CHECK(pair.first() == Label("F"));
  CHECK(Label("a") < Label("b"));
  CHECK(pair != Label("(F,1)"));
}

TEST_CASE("validation rejects malformed matrices") {
  CHECK_THROWS_AS(Make({{R(1, 2), R(1, 3)}, {R(1), R(0)}}), leakgame::Error);
  CHECK_THROWS_AS(Make({{R(3, 2), R(-1, 2)}, {R(1), R(0)}}), leakgame::Error);
  CHECK_THROWS_AS(leakgame::ValidateChannel({"x0", "x1"}, {"y0"},
                                            {{R(1)}, {R(1), R(0)}}),
                  leakgame::Error);
  CHECK_THROWS_AS(leakgame::ValidateChannel({"x0", "x0"}, {"y0"},
                                            {{R(1)}, {R(1)}}),
                  leakgame::Error);
  CHECK_THROWS_AS(leakgame::ValidateChannel({"x0"}, {"y0", "y0"},
                                            {{R(1), R(0)}}),
                  leakgame::Error);
  CHECK_NOTHROW(Make({{R(1, 3), R(2, 3)}, {R(0), R(1)}}));
}

TEST_CASE("pushing a prior yields the posterior decomposition") {
  const Channel c = Make({{R(1), R(0)}, {R(1, 2), R(1, 2)}});
  const auto prior = leakgame::Prior::Create({"x0", "x1"}, {R(1, 2), R(1, 2)});
  const leakgame::Hyper h = leakgame::PushPrior(prior, c);
  REQUIRE(h.outer.size() == 2);
  CHECK(h.outer[0] == R(3, 4));
  CHECK(h.outer[1] == R(1, 4));
  CHECK(h.posteriors[0].probabilities() == std::vector<Rational>{R(2, 3), R(1, 3)});
  CHECK(h.posteriors[1].probabilities() == std::vector<Rational>{R(0), R(1)});
}

TEST_CASE("unreachable outputs are omitted from the hyper") {
  const Channel c = Make({{R(1), R(0), R(0)}, {R(0), R(1), R(0)}});
  const auto prior = leakgame::Prior::Create({"x0", "x1"}, {R(1), R(0)});
  const leakgame::Hyper h = leakgame::PushPrior(prior, c);
  REQUIRE(h.outputs.size() == 1);
  CHECK(h.outputs[0] == Label("y0"));
}

TEST_CASE("zero-column extension adds one fresh column") {
  const Channel c = Make({{R(1), R(0)}, {R(0), R(1)}});
  const Channel z = leakgame::ZeroColumnExtension(c);
  REQUIRE(z.num_outputs() == 3);
  CHECK(z(0, 2) == R(0));
  CHECK(z(1, 2) == R(0));
  CHECK(z.outputs()[2].kind() == Label::Kind::kFresh);
  const Channel zz = leakgame::ZeroColumnExtension(z);
  CHECK(zz.outputs()[3] != zz.outputs()[2]);
}

TEST_CASE("post-processing witness") {
  const Channel identity = Make({{R(1), R(0)}, {R(0), R(1)}});
  const Channel noisy = Make({{R(2, 3), R(1, 3)}, {R(1, 3), R(2, 3)}}, "z");
  const auto r = leakgame::FindPostProcessing(identity, noisy);
  REQUIRE(r.has_value());
  CHECK(*r == noisy.entries());
  CHECK_FALSE(leakgame::FindPostProcessing(noisy, identity).has_value());
}

TEST_CASE("equivalence examples") {
  const Channel constant = Make({{R(1), R(0)}, {R(1), R(0)}});
  const Channel identity = Make({{R(1), R(0)}, {R(0), R(1)}});
  const Channel swapped = Make({{R(0), R(1)}, {R(1), R(0)}}, "z");
  const Channel one_column = Make({{R(1)}, {R(1)}}, "z");
  CHECK(leakgame::ChannelsEquivalent(constant, constant));
  CHECK(leakgame::ChannelsEquivalent(constant, one_column));
  const auto permuted = leakgame::CheckEquivalence(identity, swapped);
  CHECK(permuted.equivalent);
  REQUIRE(permuted.forward.has_value());
  CHECK(*permuted.forward == swapped.entries());
  const auto differs = leakgame::CheckEquivalence(constant, identity);
  CHECK_FALSE(differs.equivalent);
  CHECK(differs.failing_column.has_value());
  CHECK(leakgame_test::EquivalenceOracle(identity, swapped));
  CHECK_FALSE(leakgame_test::EquivalenceOracle(constant, identity));
}

TEST_CASE("strict post-processing is not equivalence") {
  // Each column of `noisy` lies in the cone of the identity columns and
  // vice versa fails only through stochasticity of the witness.
  const Channel identity = Make({{R(1), R(0)}, {R(0), R(1)}});
  const Channel noisy = Make({{R(2, 3), R(1, 3)}, {R(1, 3), R(2, 3)}}, "z");
  CHECK_FALSE(leakgame::ChannelsEquivalent(identity, noisy));
  CHECK_FALSE(leakgame_test::EquivalenceOracle(identity, noisy));
}

TEST_CASE("equivalence requires compatible inputs") {
  const Channel a = Make({{R(1)}, {R(1)}});
  const Channel b = leakgame::ValidateChannel({"u", "v"}, {"y0"}, {{R(1)}, {R(1)}});
  CHECK_THROWS_AS(leakgame::CheckEquivalence(a, b), leakgame::Error);
}

}  // TEST_SUITE
