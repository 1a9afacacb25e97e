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

#include "leakgame/vulnerability.hpp"

#include <algorithm>
#include <set>

#include "leakgame/error.hpp"

namespace leakgame {
namespace {

Rational ExpectedGain(const GainFunction& gain, std::size_t w,
                      const std::vector<Rational>& weights) {
  Rational total;
  for (std::size_t x = 0; x < weights.size(); ++x) {
    if (!weights[x].IsZero() && !gain(w, x).IsZero()) {
      total += weights[x] * gain(w, x);
    }
  }
  return total;
}

Rational MaxExpectedGain(const GainFunction& gain,
                         const std::vector<Rational>& weights) {
  return ExpectedGain(gain, BestGuess(gain, weights), weights);
}

}  // namespace

GainFunction::GainFunction(std::vector<std::string> guesses,
                           std::vector<std::string> secrets, Matrix gains)
    : guesses_(std::move(guesses)),
      secrets_(std::move(secrets)),
      gains_(std::move(gains)) {
  if (guesses_.empty()) ThrowInvalid("gain function has no guesses");
  if (secrets_.empty()) ThrowInvalid("gain function has no secrets");
  if (std::set<std::string>(guesses_.begin(), guesses_.end()).size() !=
      guesses_.size()) {
    ThrowInvalid("gain function guess labels are not unique");
  }
  if (gains_.size() != guesses_.size()) {
    ThrowInvalid("gain matrix has " + std::to_string(gains_.size()) +
                 " rows for " + std::to_string(guesses_.size()) + " guesses");
  }
  for (const auto& row : gains_) {
    if (row.size() != secrets_.size()) {
      ThrowInvalid("gain matrix row width does not match the secrets");
    }
  }
}

GainFunction GainFunction::Identity(const std::vector<std::string>& secrets) {
  Matrix g(secrets.size(), std::vector<Rational>(secrets.size()));
  for (std::size_t i = 0; i < secrets.size(); ++i) g[i][i] = Rational(1);
  return GainFunction(secrets, secrets, std::move(g));
}

GainFunction VulnerabilityMeasure::ResolveFor(
    const std::vector<std::string>& secrets) const {
  if (is_bayes()) return GainFunction::Identity(secrets);
  if (gain().secrets() != secrets) {
    ThrowInvalid("gain function is not indexed by the prior's secrets");
  }
  return gain();
}

std::size_t BestGuess(const GainFunction& gain,
                      const std::vector<Rational>& weights) {
  if (weights.size() != gain.secrets().size()) {
    ThrowInvalid("weights are not indexed by the gain function's secrets");
  }
  std::size_t best = 0;
  Rational best_value = ExpectedGain(gain, 0, weights);
  for (std::size_t w = 1; w < gain.guesses().size(); ++w) {
    Rational v = ExpectedGain(gain, w, weights);
    if (v > best_value) {
      best = w;
      best_value = std::move(v);
    }
  }
  return best;
}

Rational PriorVulnerability(const VulnerabilityMeasure& measure,
                            const Prior& prior) {
  if (measure.is_bayes()) {
    Rational best = prior[0];
    for (const Rational& p : prior.probabilities()) best = std::max(best, p);
    return best;
  }
  return MaxExpectedGain(measure.ResolveFor(prior.labels()),
                         prior.probabilities());
}

Rational PosteriorVulnerability(const VulnerabilityMeasure& measure,
                                const Prior& prior, const Channel& channel) {
  if (prior.labels() != channel.inputs()) {
    ThrowInvalid("prior is not indexed by the channel's inputs");
  }
  Rational total;
  std::vector<Rational> joint(channel.num_inputs());
  if (measure.is_bayes()) {
    for (std::size_t y = 0; y < channel.num_outputs(); ++y) {
      Rational column_max;
      for (std::size_t x = 0; x < channel.num_inputs(); ++x) {
        Rational v = prior[x] * channel(x, y);
        if (v > column_max) column_max = std::move(v);
      }
      total += column_max;
    }
    return total;
  }
  const GainFunction gain = measure.ResolveFor(prior.labels());
  for (std::size_t y = 0; y < channel.num_outputs(); ++y) {
    bool reachable = false;
    for (std::size_t x = 0; x < channel.num_inputs(); ++x) {
      joint[x] = prior[x] * channel(x, y);
      reachable = reachable || !joint[x].IsZero();
    }
    if (reachable) total += MaxExpectedGain(gain, joint);
  }
  return total;
}

}  // namespace leakgame
