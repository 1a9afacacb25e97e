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

#ifndef LEAKGAME_CASESTUDY_HPP_
#define LEAKGAME_CASESTUDY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "leakgame/games.hpp"
#include "leakgame/report.hpp"

namespace leakgame {

// "running-example", "running-example-modified", "password",
// "password-constant-time".
std::vector<std::string> BuiltinNames();
// Throws Error(kInvalidArgument) for unknown names.
GameSpec BuiltinSpec(const std::string& name);

// Recomputes the reference numbers of "running-example" or "password" and
// checks each against its expected value and tolerance.
CaseStudyReport RunCaseStudy(const std::string& name,
                             const SolverOptions& options = {});

// Remark attached to the hierarchy table of the running example, empty for
// any other spec.
std::string HierarchyNote(const GameSpec& spec);

}  // namespace leakgame

#endif  // LEAKGAME_CASESTUDY_HPP_
