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

#include "leakgame/scenarios.hpp"

#include <algorithm>

#include "leakgame/error.hpp"

namespace leakgame {
namespace {

Rational R(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

Channel Binary(Matrix entries) {
  return ValidateChannel({"0", "1"}, {Label("0"), Label("1")},
                         std::move(entries));
}

GameSpec BinaryGame(Channel c00, Channel c01, Channel c10, Channel c11) {
  return GameSpec({"0", "1"}, {"0", "1"},
                  {{std::move(c00), std::move(c01)},
                   {std::move(c10), std::move(c11)}},
                  Prior::Uniform({"0", "1"}), VulnerabilityMeasure::Bayes());
}

std::string Digits(int n) {
  std::string s;
  for (int i = 1; i <= n; ++i) s += static_cast<char>('0' + i);
  return s;
}

void RequireBitString(const PasswordConfig& config, const std::string& s,
                      const char* what) {
  if (static_cast<int>(s.size()) != config.bits ||
      s.find_first_not_of("01") != std::string::npos) {
    ThrowInvalid(std::string(what) + " '" + s + "' is not a " +
                 std::to_string(config.bits) + "-bit string");
  }
}

void RequireOrder(const PasswordConfig& config, const std::string& order) {
  std::string sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != Digits(config.bits)) {
    ThrowInvalid("order '" + order + "' is not a permutation of " +
                 Digits(config.bits));
  }
}

Label Observable(bool accepted, int iterations) {
  return Label::Pair(Label(accepted ? "T" : "F"),
                     Label(std::to_string(iterations)));
}

}  // namespace

GameSpec RunningExample() {
  return BinaryGame(Binary({{R(1), R(0)}, {R(1), R(0)}}),
                    Binary({{R(1), R(0)}, {R(0), R(1)}}),
                    Binary({{R(0), R(1)}, {R(1), R(0)}}),
                    Binary({{R(1, 3), R(2, 3)}, {R(2, 3), R(1, 3)}}));
}

GameSpec ModifiedRunningExample() {
  const GameSpec base = RunningExample();
  return base.WithChannel(1, 1, base.channel(0, 0));
}

Prior DefaultPasswordPrior() {
  return Prior::Normalized(
      BitStrings(3),
      {Rational::Parse("0.0137"), Rational::Parse("0.0548"),
       Rational::Parse("0.2191"), Rational::Parse("0.4382"),
       Rational::Parse("0.0002"), Rational::Parse("0.0002"),
       Rational::Parse("0.0548"), Rational::Parse("0.2191")},
      Rational::Parse("0.001"));
}

PasswordConfig PasswordConfig::Default(int bits) {
  if (bits < 1 || bits > 9) ThrowInvalid("password length must be 1..9 bits");
  PasswordConfig config;
  config.bits = bits;
  std::string order = Digits(bits);
  do {
    config.orders.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  config.prior =
      bits == 3 ? DefaultPasswordPrior() : Prior::Uniform(BitStrings(bits));
  return config;
}

std::vector<std::string> BitStrings(int bits) {
  if (bits < 1 || bits > 20) ThrowInvalid("bit length out of range");
  std::vector<std::string> out;
  for (unsigned v = 0; v < (1u << bits); ++v) {
    std::string s(bits, '0');
    for (int i = 0; i < bits; ++i) {
      if (v & (1u << (bits - 1 - i))) s[i] = '1';
    }
    out.push_back(s);
  }
  return out;
}

std::vector<Label> PasswordOutputs(const PasswordConfig& config) {
  std::vector<Label> out;
  const int first = config.constant_time ? config.bits : 1;
  for (int k = first; k <= config.bits; ++k) out.push_back(Observable(false, k));
  out.push_back(Observable(true, config.bits));
  return out;
}

void ValidatePasswordConfig(const PasswordConfig& config) {
  if (config.bits < 1 || config.bits > 9) {
    ThrowInvalid("password length must be 1..9 bits");
  }
  if (config.orders.empty()) ThrowInvalid("no comparison orders");
  for (const std::string& order : config.orders) RequireOrder(config, order);
  if (config.prior.labels() != BitStrings(config.bits)) {
    ThrowInvalid("password prior is not over the " +
                 std::to_string(config.bits) + "-bit strings");
  }
}

int Iterations(const PasswordConfig& config, const std::string& order,
               const std::string& guess, const std::string& secret) {
  RequireOrder(config, order);
  RequireBitString(config, guess, "guess");
  RequireBitString(config, secret, "secret");
  if (config.constant_time) return config.bits;
  for (int i = 0; i < config.bits; ++i) {
    const int bit = order[i] - '1';
    if (guess[bit] != secret[bit]) return i + 1;
  }
  return config.bits;
}

Channel PasswordChannel(const PasswordConfig& config, const std::string& order,
                        const std::string& guess) {
  const std::vector<Label> outputs = PasswordOutputs(config);
  const std::vector<std::string> secrets = BitStrings(config.bits);
  Matrix entries(secrets.size(), std::vector<Rational>(outputs.size()));
  for (std::size_t x = 0; x < secrets.size(); ++x) {
    const Label y = Observable(guess == secrets[x],
                               Iterations(config, order, guess, secrets[x]));
    const auto it = std::find(outputs.begin(), outputs.end(), y);
    entries[x][it - outputs.begin()] = Rational(1);
  }
  return ValidateChannel(secrets, outputs, std::move(entries));
}

GameSpec PasswordGame(const PasswordConfig& config) {
  ValidatePasswordConfig(config);
  const std::vector<std::string> guesses = BitStrings(config.bits);
  std::vector<std::vector<Channel>> channels;
  for (const std::string& order : config.orders) {
    std::vector<Channel> row;
    for (const std::string& guess : guesses) {
      row.push_back(PasswordChannel(config, order, guess));
    }
    channels.push_back(std::move(row));
  }
  return GameSpec(config.orders, guesses, std::move(channels), config.prior,
                  VulnerabilityMeasure::Bayes());
}

Rational ExpectedIterations(const PasswordConfig& config, const Mix& delta,
                            const std::string& guess) {
  if (delta.labels() != config.orders) {
    ThrowInvalid("defender mix is not over the configured orders");
  }
  const std::vector<std::string>& secrets = config.prior.labels();
  Rational total;
  for (std::size_t d = 0; d < delta.size(); ++d) {
    if (delta[d].IsZero()) continue;
    Rational runtime;
    for (std::size_t x = 0; x < secrets.size(); ++x) {
      runtime += config.prior[x] *
                 Rational(Iterations(config, config.orders[d], guess, secrets[x]));
    }
    total += delta[d] * runtime;
  }
  return total;
}

}  // namespace leakgame
