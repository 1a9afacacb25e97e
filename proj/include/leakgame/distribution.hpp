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

#ifndef LEAKGAME_DISTRIBUTION_HPP_
#define LEAKGAME_DISTRIBUTION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "leakgame/error.hpp"
#include "leakgame/rational.hpp"

namespace leakgame {

// A finite probability distribution over ordered string labels. The tag keeps
// priors over secrets and mixes over actions/channel indices apart.
template <class Tag>
class Distribution {
 public:
  Distribution() = default;

  // Probabilities must be non-negative and sum to exactly 1.
  static Distribution Create(std::vector<std::string> labels,
                             std::vector<Rational> probabilities) {
    CheckLabels(labels, probabilities.size());
    Rational total;
    for (const Rational& p : probabilities) {
      if (p.Sign() < 0) ThrowInvalid("negative probability " + p.ToString());
      total += p;
    }
    if (total != Rational(1)) {
      ThrowInvalid("probabilities sum to " + total.ToString() + ", not 1");
    }
    return Distribution(std::move(labels), std::move(probabilities));
  }

  // Rescales non-negative weights to sum to 1 when their total is within
  // `tolerance` of 1; rejects larger deviations.
  static Distribution Normalized(std::vector<std::string> labels,
                                 std::vector<Rational> weights,
                                 const Rational& tolerance) {
    CheckLabels(labels, weights.size());
    Rational total;
    for (const Rational& w : weights) {
      if (w.Sign() < 0) ThrowInvalid("negative probability " + w.ToString());
      total += w;
    }
    if (Abs(total - Rational(1)) > tolerance) {
      ThrowInvalid("probabilities sum to " + total.ToString() +
                   ", more than " + tolerance.ToString() + " away from 1");
    }
    for (Rational& w : weights) w /= total;
    return Distribution(std::move(labels), std::move(weights));
  }

  static Distribution Uniform(std::vector<std::string> labels) {
    const auto n = static_cast<std::int64_t>(labels.size());
    std::vector<Rational> p(labels.size(), n > 0 ? Rational(1, n) : Rational());
    return Create(std::move(labels), std::move(p));
  }

  static Distribution PointMass(std::vector<std::string> labels,
                                std::size_t index) {
    std::vector<Rational> p(labels.size(), Rational(0));
    if (index >= p.size()) ThrowInvalid("point mass index out of range");
    p[index] = Rational(1);
    return Create(std::move(labels), std::move(p));
  }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Rational>& probabilities() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  const Rational& operator[](std::size_t i) const { return probs_[i]; }

  std::optional<std::size_t> IndexOf(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == label) return i;
    }
    return std::nullopt;
  }

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.labels_ == b.labels_ && a.probs_ == b.probs_;
  }

 private:
  Distribution(std::vector<std::string> labels, std::vector<Rational> probs)
      : labels_(std::move(labels)), probs_(std::move(probs)) {}

  static void CheckLabels(const std::vector<std::string>& labels,
                          std::size_t count) {
    if (labels.empty()) ThrowInvalid("distribution over an empty set");
    if (labels.size() != count) {
      ThrowInvalid("distribution has " + std::to_string(labels.size()) +
                   " labels but " + std::to_string(count) + " probabilities");
    }
    if (std::set<std::string>(labels.begin(), labels.end()).size() !=
        labels.size()) {
      ThrowInvalid("distribution labels are not unique");
    }
  }

  std::vector<std::string> labels_;
  std::vector<Rational> probs_;
};

struct SecretTag {};
struct ChoiceTag {};

// Attacker's prior knowledge over secrets.
using Prior = Distribution<SecretTag>;
// Convex coefficients over a family index or a player's actions.
using Mix = Distribution<ChoiceTag>;

}  // namespace leakgame

#endif  // LEAKGAME_DISTRIBUTION_HPP_
