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

// Hidden choice (the attacker does not learn which channel ran) and visible
// choice (the attacker does) over families of channels.

#ifndef LEAKGAME_CHOICE_HPP_
#define LEAKGAME_CHOICE_HPP_

#include <string>
#include <vector>

#include "leakgame/channel.hpp"
#include "leakgame/distribution.hpp"

namespace leakgame {

// A matrix with channel labels but no stochasticity requirement. Scaled
// operands such as 1/q * C appear inside the associativity laws; only the
// final composed object has to be a channel.
class WeightedMatrix {
 public:
  WeightedMatrix(std::vector<std::string> inputs, std::vector<Label> outputs,
                 Matrix entries);
  static WeightedMatrix Of(const Channel& channel);

  const std::vector<std::string>& inputs() const { return inputs_; }
  const std::vector<Label>& outputs() const { return outputs_; }
  const Matrix& entries() const { return entries_; }

  WeightedMatrix Scaled(const Rational& factor) const;
  Channel ToChannel() const;  // throws unless row-stochastic

  friend bool operator==(const WeightedMatrix&, const WeightedMatrix&) = default;

 private:
  std::vector<std::string> inputs_;
  std::vector<Label> outputs_;
  Matrix entries_;
};

// Entry-wise sum of weight[i] * operand[i]; operands must share one type.
WeightedMatrix WeightedSum(const std::vector<WeightedMatrix>& operands,
                           const std::vector<Rational>& weights);
// Concatenation of weight[i] * operand[i] with outputs tagged (y, tag[i]);
// operands must share their inputs.
WeightedMatrix WeightedConcat(const std::vector<WeightedMatrix>& operands,
                              const std::vector<Rational>& weights,
                              const std::vector<std::string>& tags);

enum class FamilyKind { kSameType, kCompatible };

// Indexed family {C_i}; all members share the input list.
class ChannelFamily {
 public:
  ChannelFamily(std::vector<std::string> index, std::vector<Channel> channels);

  const std::vector<std::string>& index() const { return index_; }
  const std::vector<Channel>& channels() const { return channels_; }
  FamilyKind kind() const { return kind_; }

 private:
  std::vector<std::string> index_;
  std::vector<Channel> channels_;
  FamilyKind kind_;
};

// Sum_i mix(i) * C_i. Requires a same-type family and a mix over its index.
Channel HiddenChoice(const ChannelFamily& family, const Mix& mix);
// Concatenation of mix(i) * C_i with output labels (y, i).
Channel VisibleChoice(const ChannelFamily& family, const Mix& mix);

// Binary forms over the index {"1", "2"} with mix (p, 1 - p).
Channel BinaryHidden(const Channel& first, const Channel& second,
                     const Rational& p);
Channel BinaryVisible(const Channel& first, const Channel& second,
                      const Rational& p);

}  // namespace leakgame

#endif  // LEAKGAME_CHOICE_HPP_
