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

#ifndef LEAKGAME_VULNERABILITY_HPP_
#define LEAKGAME_VULNERABILITY_HPP_

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "leakgame/channel.hpp"
#include "leakgame/distribution.hpp"

namespace leakgame {

// Gain g(w, x) of guessing w when the secret is x. Any rationals allowed.
class GainFunction {
 public:
  GainFunction(std::vector<std::string> guesses,
               std::vector<std::string> secrets, Matrix gains);
  // g(w, x) = [w == x]: Bayes vulnerability.
  static GainFunction Identity(const std::vector<std::string>& secrets);

  const std::vector<std::string>& guesses() const { return guesses_; }
  const std::vector<std::string>& secrets() const { return secrets_; }
  const Matrix& gains() const { return gains_; }
  const Rational& operator()(std::size_t w, std::size_t x) const {
    return gains_[w][x];
  }

  friend bool operator==(const GainFunction&, const GainFunction&) = default;

 private:
  std::vector<std::string> guesses_;
  std::vector<std::string> secrets_;
  Matrix gains_;
};

class VulnerabilityMeasure {
 public:
  static VulnerabilityMeasure Bayes() { return VulnerabilityMeasure(); }
  static VulnerabilityMeasure Gain(GainFunction g) {
    VulnerabilityMeasure m;
    m.gain_ = std::move(g);
    return m;
  }

  bool is_bayes() const { return std::holds_alternative<std::monostate>(gain_); }
  const GainFunction& gain() const { return std::get<GainFunction>(gain_); }

  // The gain function this measure evaluates; Bayes becomes the identity
  // gain over `secrets`. Throws if a gain function is indexed differently.
  GainFunction ResolveFor(const std::vector<std::string>& secrets) const;

  friend bool operator==(const VulnerabilityMeasure&,
                         const VulnerabilityMeasure&) = default;

 private:
  std::variant<std::monostate, GainFunction> gain_;
};

Rational PriorVulnerability(const VulnerabilityMeasure& measure,
                            const Prior& prior);

// Sum over outputs of max_w sum_x pi(x) C(x, y) g(w, x); columns with
// p(y) = 0 contribute nothing. For Bayes this is the sum of column maxima of
// the joint matrix.
Rational PosteriorVulnerability(const VulnerabilityMeasure& measure,
                                const Prior& prior, const Channel& channel);

// Index of the best guess against unnormalized weights over secrets (a joint
// column, or a prior). Ties go to the lowest guess index.
std::size_t BestGuess(const GainFunction& gain,
                      const std::vector<Rational>& weights);

}  // namespace leakgame

#endif  // LEAKGAME_VULNERABILITY_HPP_
