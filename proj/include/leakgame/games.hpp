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

// Zero-sum leakage games. The attacker's payoff for a pure profile (d, a) is
// the posterior vulnerability of channel C_da; the six games differ in move
// order (simultaneous, defender first, attacker first) and in whether the
// defender's choice is visible to the attacker when observing the output.
//
//   Game I    simultaneous,     visible     matrix game, primal/dual LP
//   Game II   defender first,   visible     deterministic min-max
//   Game III  attacker first,   visible     deterministic max-min
//   Game IV   simultaneous,     hidden      epigraph LP + extended game
//   Game V    defender first,   hidden      same as Game IV
//   Game VI   attacker first,   hidden      per-action epigraph LP
//
// Ties are always broken toward the lowest index in the declared action order.

#ifndef LEAKGAME_GAMES_HPP_
#define LEAKGAME_GAMES_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "leakgame/channel.hpp"
#include "leakgame/distribution.hpp"
#include "leakgame/vulnerability.hpp"

namespace leakgame {

class GameSpec {
 public:
  // channels[d][a] is C_da. All channels must share one type, and the prior
  // must be indexed by their inputs.
  GameSpec(std::vector<std::string> defender_actions,
           std::vector<std::string> attacker_actions,
           std::vector<std::vector<Channel>> channels, Prior prior,
           VulnerabilityMeasure measure);

  const std::vector<std::string>& defender_actions() const { return defender_; }
  const std::vector<std::string>& attacker_actions() const { return attacker_; }
  const Channel& channel(std::size_t d, std::size_t a) const {
    return channels_[d][a];
  }
  const Prior& prior() const { return prior_; }
  const VulnerabilityMeasure& measure() const { return measure_; }
  std::size_t num_defender_actions() const { return defender_.size(); }
  std::size_t num_attacker_actions() const { return attacker_.size(); }

  // Copy with C_da replaced; the replacement must have the shared type.
  GameSpec WithChannel(std::size_t d, std::size_t a, Channel channel) const;

  friend bool operator==(const GameSpec&, const GameSpec&) = default;

 private:
  std::vector<std::string> defender_;
  std::vector<std::string> attacker_;
  std::vector<std::vector<Channel>> channels_;
  Prior prior_;
  VulnerabilityMeasure measure_;
};

using PayoffMatrix = std::vector<std::vector<Rational>>;  // [d][a]

// u(d, a) = posterior vulnerability of C_da.
PayoffMatrix ComputePayoffMatrix(const GameSpec& spec);

enum class GameId { kI = 1, kII, kIII, kIV, kV, kVI };

std::string GameName(GameId game);                       // "I".."VI"
std::optional<GameId> ParseGameName(const std::string& name);

struct PureDefender { std::size_t action; };
struct PureAttacker { std::size_t action; };
struct MixedDefender { Mix mix; };
struct MixedAttacker { Mix mix; };
// s_a : D -> A, response[d] is an attacker action index.
struct AttackerFunction { std::vector<std::size_t> response; };
// s_d : A -> D, response[a] is a defender action index.
struct DefenderFunction { std::vector<std::size_t> response; };

using Strategy = std::variant<PureDefender, PureAttacker, MixedDefender,
                              MixedAttacker, AttackerFunction, DefenderFunction>;

struct Certificate {
  std::string name;
  Rational value;
};

struct Solution {
  GameId game = GameId::kI;
  Rational value;
  Strategy defender;
  Strategy attacker;
  std::vector<Certificate> certificates;
  // Game VI: the defender's optimal hidden mix for every attacker action.
  std::vector<Mix> defender_responses;

  const Rational* FindCertificate(const std::string& name) const;
};

struct SolverOptions {
  // Upper bound on |W|^|Y| guess functions enumerated for the Game IV
  // attacker side.
  std::uint64_t guess_budget = 65536;
};

Solution SolveGameI(const GameSpec& spec);
Solution SolveGameII(const GameSpec& spec);
Solution SolveGameIII(const GameSpec& spec);
// Throws Error(kCapacity) when |W|^|Y| exceeds options.guess_budget.
Solution SolveGameIV(const GameSpec& spec, const SolverOptions& options = {});
Solution SolveGameV(const GameSpec& spec, const SolverOptions& options = {});
Solution SolveGameVI(const GameSpec& spec);
Solution SolveGame(const GameSpec& spec, GameId game,
                   const SolverOptions& options = {});

// Equilibrium of a 2x2 matrix game from the indifference conditions:
// (delta*(d0), alpha*(a0)). Absent when the denominator vanishes or a value
// falls outside [0, 1].
std::optional<std::pair<Rational, Rational>> ClosedForm2x2(
    const PayoffMatrix& payoffs);

// Expected payoff sum_d sum_a delta(d) alpha(a) u(d, a) (visible choice).
Rational VisiblePayoff(const PayoffMatrix& payoffs,
                       const std::vector<Rational>& delta,
                       const std::vector<Rational>& alpha);
// Hidden choice over the defender's actions for a fixed attacker action.
Channel HiddenDefenderChannel(const GameSpec& spec,
                              const std::vector<Rational>& delta,
                              std::size_t attacker_action);
// V[pi |> hidden_delta C_{., a}].
Rational HiddenPayoff(const GameSpec& spec, const std::vector<Rational>& delta,
                      std::size_t attacker_action);

struct HierarchyReport {
  std::array<Rational, 6> values;  // indexed by game I..VI
  std::array<Solution, 6> solutions;
  std::vector<std::string> violations;  // empty when every relation holds
  bool iii_above_iv = false;            // informational; no order is implied

  const Rational& value(GameId game) const {
    return values[static_cast<std::size_t>(game) - 1];
  }
};

// Solves all six games and checks II >= I >= III >= VI and
// I >= IV = V >= VI.
HierarchyReport VerifyHierarchy(const GameSpec& spec,
                                const SolverOptions& options = {});

}  // namespace leakgame

#endif  // LEAKGAME_GAMES_HPP_
