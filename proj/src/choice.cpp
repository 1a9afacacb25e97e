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

#include "leakgame/choice.hpp"

#include "leakgame/error.hpp"

namespace leakgame {
namespace {

void RequireMixOver(const ChannelFamily& family, const Mix& mix) {
  if (mix.labels() != family.index()) {
    ThrowInvalid("mix is not indexed by the family's index set");
  }
}

std::vector<WeightedMatrix> Operands(const ChannelFamily& family) {
  std::vector<WeightedMatrix> out;
  out.reserve(family.channels().size());
  for (const Channel& c : family.channels()) out.push_back(WeightedMatrix::Of(c));
  return out;
}

Mix BinaryMix(const Rational& p) {
  if (p.Sign() < 0 || p > Rational(1)) {
    ThrowInvalid("choice probability " + p.ToString() + " is outside [0, 1]");
  }
  return Mix::Create({"1", "2"}, {p, Rational(1) - p});
}

}  // namespace

WeightedMatrix::WeightedMatrix(std::vector<std::string> inputs,
                               std::vector<Label> outputs, Matrix entries)
    : inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      entries_(std::move(entries)) {
  if (entries_.size() != inputs_.size()) {
    ThrowInvalid("weighted matrix row count does not match its inputs");
  }
  for (const auto& row : entries_) {
    if (row.size() != outputs_.size()) {
      ThrowInvalid("weighted matrix is not rectangular");
    }
  }
}

WeightedMatrix WeightedMatrix::Of(const Channel& channel) {
  return WeightedMatrix(channel.inputs(), channel.outputs(), channel.entries());
}

WeightedMatrix WeightedMatrix::Scaled(const Rational& factor) const {
  Matrix scaled = entries_;
  for (auto& row : scaled) {
    for (Rational& v : row) v *= factor;
  }
  return WeightedMatrix(inputs_, outputs_, std::move(scaled));
}

Channel WeightedMatrix::ToChannel() const {
  return ValidateChannel(inputs_, outputs_, entries_);
}

WeightedMatrix WeightedSum(const std::vector<WeightedMatrix>& operands,
                           const std::vector<Rational>& weights) {
  if (operands.empty() || operands.size() != weights.size()) {
    ThrowInvalid("hidden choice needs one weight per operand");
  }
  const WeightedMatrix& head = operands.front();
  Matrix sum(head.inputs().size(),
             std::vector<Rational>(head.outputs().size()));
  for (std::size_t i = 0; i < operands.size(); ++i) {
    const WeightedMatrix& m = operands[i];
    if (m.inputs() != head.inputs() || m.outputs() != head.outputs()) {
      ThrowInvalid("hidden choice over channels of different types");
    }
    if (weights[i].IsZero()) continue;
    for (std::size_t x = 0; x < sum.size(); ++x) {
      for (std::size_t y = 0; y < sum[x].size(); ++y) {
        sum[x][y] += weights[i] * m.entries()[x][y];
      }
    }
  }
  return WeightedMatrix(head.inputs(), head.outputs(), std::move(sum));
}

WeightedMatrix WeightedConcat(const std::vector<WeightedMatrix>& operands,
                              const std::vector<Rational>& weights,
                              const std::vector<std::string>& tags) {
  if (operands.empty() || operands.size() != weights.size() ||
      operands.size() != tags.size()) {
    ThrowInvalid("visible choice needs one weight and tag per operand");
  }
  const auto& inputs = operands.front().inputs();
  std::vector<Label> outputs;
  Matrix entries(inputs.size());
  for (std::size_t i = 0; i < operands.size(); ++i) {
    const WeightedMatrix& m = operands[i];
    if (m.inputs() != inputs) {
      ThrowInvalid("visible choice over channels with different inputs");
    }
    for (const Label& y : m.outputs()) outputs.push_back(Label::Pair(y, tags[i]));
    for (std::size_t x = 0; x < inputs.size(); ++x) {
      for (const Rational& v : m.entries()[x]) entries[x].push_back(weights[i] * v);
    }
  }
  return WeightedMatrix(inputs, std::move(outputs), std::move(entries));
}

ChannelFamily::ChannelFamily(std::vector<std::string> index,
                             std::vector<Channel> channels)
    : index_(std::move(index)), channels_(std::move(channels)) {
  if (channels_.empty()) ThrowInvalid("empty channel family");
  if (index_.size() != channels_.size()) {
    ThrowInvalid("channel family index does not match its members");
  }
  kind_ = FamilyKind::kSameType;
  for (const Channel& c : channels_) {
    if (!c.CompatibleWith(channels_.front())) {
      ThrowInvalid("channel family members have different inputs");
    }
    if (!c.SameTypeAs(channels_.front())) kind_ = FamilyKind::kCompatible;
  }
}

Channel HiddenChoice(const ChannelFamily& family, const Mix& mix) {
  RequireMixOver(family, mix);
  if (family.kind() != FamilyKind::kSameType) {
    ThrowInvalid("hidden choice requires channels of the same type");
  }
  return WeightedSum(Operands(family), mix.probabilities()).ToChannel();
}

Channel VisibleChoice(const ChannelFamily& family, const Mix& mix) {
  RequireMixOver(family, mix);
  return WeightedConcat(Operands(family), mix.probabilities(), family.index())
      .ToChannel();
}

Channel BinaryHidden(const Channel& first, const Channel& second,
                     const Rational& p) {
  return HiddenChoice(ChannelFamily({"1", "2"}, {first, second}), BinaryMix(p));
}

Channel BinaryVisible(const Channel& first, const Channel& second,
                      const Rational& p) {
  return VisibleChoice(ChannelFamily({"1", "2"}, {first, second}), BinaryMix(p));
}

}  // namespace leakgame
