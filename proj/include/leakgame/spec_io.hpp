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

// JSON game documents:
//
//   {
//     "secrets": ["0", "1"],
//     "outputs": ["y0", ["F", "1"]],          // string or [label, tag]
//     "prior": ["1/2", "1/2"],
//     "defender_actions": ["0", "1"],
//     "attacker_actions": ["0", "1"],
//     "channels": {"0|0": [["1", "0"], ["1", "0"]], ...},
//     "measure": "bayes"                      // or {"guesses", "gains"}
//   }
//
// Numbers are exact rationals written as strings ("2/3", "0.25"); plain JSON
// numbers are read through their decimal text. Priors within 1e-3 of summing
// to 1 are rescaled. Action labels may not contain '|'.

#ifndef LEAKGAME_SPEC_IO_HPP_
#define LEAKGAME_SPEC_IO_HPP_

#include <string>

#include "leakgame/games.hpp"

namespace leakgame {

// Throws Error(kInvalidArgument) naming the offending field.
GameSpec ParseGameSpec(const std::string& json_text);
GameSpec LoadGameSpec(const std::string& path);

// Inverse of ParseGameSpec; rationals are written exactly.
std::string SerializeGameSpec(const GameSpec& spec);

// Splits "d|a" into defender and attacker action indices of `spec`.
std::pair<std::size_t, std::size_t> ParseChannelRef(const GameSpec& spec,
                                                    const std::string& ref);

}  // namespace leakgame

#endif  // LEAKGAME_SPEC_IO_HPP_
