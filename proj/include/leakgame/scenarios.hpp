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

// Built-in game instances: a two-program example over a binary secret and a
// bitwise password checker whose running time leaks through a timing channel.

#ifndef LEAKGAME_SCENARIOS_HPP_
#define LEAKGAME_SCENARIOS_HPP_

#include <string>
#include <vector>

#include "leakgame/channel.hpp"
#include "leakgame/distribution.hpp"
#include "leakgame/games.hpp"

namespace leakgame {

// D = A = X = Y = {0, 1}. Program 0 outputs x*a; program 1 outputs x with
// probability a/3 and its complement otherwise. Uniform prior, Bayes.
GameSpec RunningExample();
// Same game with C_11 replaced by C_00.
GameSpec ModifiedRunningExample();

// The rounded skewed prior over 3-bit passwords 000..111, renormalized
// (the rounded weights sum to 1.0001).
Prior DefaultPasswordPrior();

struct PasswordConfig {
  int bits = 3;
  // Defender actions: bit-comparison orders, e.g. "231" checks bit 2, then 3,
  // then 1. Bit 1 is the leftmost character of a password.
  std::vector<std::string> orders;
  Prior prior;
  // Padded checker that always runs all iterations.
  bool constant_time = false;

  // All orders in lexicographic order and DefaultPasswordPrior() for 3 bits;
  // a uniform prior otherwise.
  static PasswordConfig Default(int bits = 3);
};

// "00..0" to "11..1" in increasing binary order; secrets and guesses.
std::vector<std::string> BitStrings(int bits);

// {(F,1), ..., (F,n), (T,n)}, or {(F,n), (T,n)} for the constant-time
// checker.
std::vector<Label> PasswordOutputs(const PasswordConfig& config);

// Throws unless every order is a permutation of 1..n, the prior is over the
// n-bit strings, and n is between 1 and 9.
void ValidatePasswordConfig(const PasswordConfig& config);

// Loop iterations the checker runs: the position within `order` of the first
// mismatching bit, or n on acceptance (always n when constant time).
int Iterations(const PasswordConfig& config, const std::string& order,
               const std::string& guess, const std::string& secret);

// Deterministic channel from secrets to (accepted, iterations).
Channel PasswordChannel(const PasswordConfig& config, const std::string& order,
                        const std::string& guess);

// D = orders, A = guesses, Bayes vulnerability.
GameSpec PasswordGame(const PasswordConfig& config);

// sum_d delta(d) sum_x pi(x) Iterations(d, guess, x). `delta` is a mix over
// config.orders.
Rational ExpectedIterations(const PasswordConfig& config, const Mix& delta,
                            const std::string& guess);

}  // namespace leakgame

#endif  // LEAKGAME_SCENARIOS_HPP_
