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

#ifndef LEAKGAME_CHANNEL_HPP_
#define LEAKGAME_CHANNEL_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leakgame/distribution.hpp"
#include "leakgame/label.hpp"
#include "leakgame/rational.hpp"

namespace leakgame {

using Matrix = std::vector<std::vector<Rational>>;

// Row-stochastic matrix C(x, y) = P(output y | secret x).
class Channel {
 public:
  const std::vector<std::string>& inputs() const { return inputs_; }
  const std::vector<Label>& outputs() const { return outputs_; }
  const Matrix& entries() const { return entries_; }
  std::size_t num_inputs() const { return inputs_.size(); }
  std::size_t num_outputs() const { return outputs_.size(); }
  const Rational& operator()(std::size_t x, std::size_t y) const {
    return entries_[x][y];
  }

  // Same input list (compatible) / same inputs and outputs (same type).
  bool CompatibleWith(const Channel& other) const {
    return inputs_ == other.inputs_;
  }
  bool SameTypeAs(const Channel& other) const {
    return inputs_ == other.inputs_ && outputs_ == other.outputs_;
  }

  friend bool operator==(const Channel& a, const Channel& b) {
    return a.SameTypeAs(b) && a.entries_ == b.entries_;
  }

 private:
  friend Channel ValidateChannel(std::vector<std::string>, std::vector<Label>,
                                 Matrix);
  std::vector<std::string> inputs_;
  std::vector<Label> outputs_;
  Matrix entries_;
};

// Builds a channel, rejecting non-rectangular matrices, duplicate labels,
// negative entries, and rows that do not sum to exactly 1.
Channel ValidateChannel(std::vector<std::string> inputs,
                        std::vector<Label> outputs, Matrix entries);

// Posterior decomposition of a prior through a channel. Outputs with
// p(y) = 0 are omitted.
struct Hyper {
  std::vector<Label> outputs;
  std::vector<Rational> outer;
  std::vector<Prior> posteriors;
};

Hyper PushPrior(const Prior& prior, const Channel& channel);

// Appends one all-zero column under a label not used by `channel`.
Channel ZeroColumnExtension(const Channel& channel);

// Finds a row-stochastic R with from * R = to, i.e. `to` is a
// post-processing of `from`. Requires compatible channels.
std::optional<Matrix> FindPostProcessing(const Channel& from,
                                         const Channel& to);

struct EquivalenceReport {
  bool equivalent = false;
  std::optional<Matrix> forward;   // R with first * R = second
  std::optional<Matrix> backward;  // S with second * S = first
  // Names the column that no non-negative combination of the other
  // channel's columns reproduces, when such a column exists.
  std::optional<std::string> failing_column;
};

// Two compatible channels are equivalent iff each is a post-processing of the
// other; equivalently, they yield equal posterior g-vulnerability for every
// prior and gain function. Throws on incompatible input spaces.
EquivalenceReport CheckEquivalence(const Channel& first, const Channel& second);
bool ChannelsEquivalent(const Channel& first, const Channel& second);

}  // namespace leakgame

#endif  // LEAKGAME_CHANNEL_HPP_
