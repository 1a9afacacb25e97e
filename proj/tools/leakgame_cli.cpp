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

// Command-line front end over the C interface.
//
//   leakgame solve --game IV --builtin password --format json
//   leakgame compare --spec game.json
//   leakgame equiv "0|1" "1|0" --builtin running-example
//   leakgame casestudy password
//   leakgame export --builtin running-example > game.json
//
// Exit codes: 0 ok, 1 failed check, 2 input error, 3 capacity error.
// LEAKGAME_GUESS_BUDGET overrides the guess-function budget of games IV/V.

#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "leakgame/leakgame.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

int ExitCode(lg_status status) {
  switch (status) {
    case LG_OK:
      return kExitOk;
    case LG_INPUT:
      return kExitInput;
    case LG_CAPACITY:
      return kExitCapacity;
    case LG_ASSERTION:
    case LG_INTERNAL:
      break;
  }
  return kExitFailedCheck;
}

int Report(lg_status status) {
  std::cerr << "leakgame: error: " << lg_last_error() << "\n";
  return ExitCode(status);
}

// Prints and frees a library-owned string.
void Emit(char* text) {
  std::cout << text;
  lg_string_free(text);
}

struct SpecSource {
  std::string file;
  std::string builtin;
};

void AddSpecOptions(CLI::App* cmd, SpecSource* source) {
  auto* file = cmd->add_option("--spec", source->file, "JSON game spec");
  auto* builtin = cmd->add_option("--builtin", source->builtin,
                                  "running-example, running-example-modified, "
                                  "password, password-constant-time");
  file->excludes(builtin);
}

lg_status LoadSpec(const SpecSource& source, lg_spec** spec) {
  if (!source.file.empty()) return lg_spec_load_file(source.file.c_str(), spec);
  return lg_spec_builtin(
      source.builtin.empty() ? "running-example" : source.builtin.c_str(), spec);
}

bool GuessBudget(std::uint64_t* budget) {
  *budget = 0;
  const char* env = std::getenv("LEAKGAME_GUESS_BUDGET");
  if (env == nullptr || *env == '\0') return true;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || v == 0 || env[0] == '-') return false;
  *budget = v;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information-leakage games: channels, choice operators and "
               "equilibria"};
  app.require_subcommand(1);

  const std::map<std::string, lg_format> formats = {
      {"text", LG_FORMAT_TEXT}, {"csv", LG_FORMAT_CSV}, {"json", LG_FORMAT_JSON}};
  lg_format format = LG_FORMAT_TEXT;
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  SpecSource source;
  std::string game;
  auto* solve = app.add_subcommand("solve", "solve one game");
  solve->add_option("--game", game, "I, II, III, IV, V or VI")->required();
  AddSpecOptions(solve, &source);
  add_format(solve);

  auto* compare = app.add_subcommand("compare", "solve all six games and "
                                                "check their order");
  AddSpecOptions(compare, &source);
  add_format(compare);

  std::string first, second;
  auto* equiv = app.add_subcommand("equiv", "test two channels for equivalence");
  equiv->add_option("first", first, "channel reference d|a")->required();
  equiv->add_option("second", second, "channel reference d|a")->required();
  AddSpecOptions(equiv, &source);
  add_format(equiv);

  std::string study;
  auto* casestudy = app.add_subcommand("casestudy", "recompute a case study");
  casestudy->add_option("name", study, "running-example or password")
      ->required();
  add_format(casestudy);

  auto* exporter = app.add_subcommand("export", "print a spec as JSON");
  AddSpecOptions(exporter, &source);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  std::uint64_t budget = 0;
  if (!GuessBudget(&budget)) {
    std::cerr << "leakgame: error: LEAKGAME_GUESS_BUDGET must be a positive "
                 "integer\n";
    return kExitInput;
  }

  if (*casestudy) {
    char* text = nullptr;
    int all_pass = 0;
    const lg_status s =
        lg_casestudy(study.c_str(), budget, format, &text, &all_pass);
    if (s != LG_OK) return Report(s);
    Emit(text);
    return all_pass ? kExitOk : kExitFailedCheck;
  }

  lg_spec* spec = nullptr;
  lg_status s = LoadSpec(source, &spec);
  if (s != LG_OK) return Report(s);
  int code = kExitOk;
  char* text = nullptr;
  if (*solve) {
    lg_solution* solution = nullptr;
    s = lg_solve(spec, game.c_str(), budget, &solution);
    if (s == LG_OK) {
      s = lg_solution_render(solution, format, &text);
      lg_solution_free(solution);
    }
  } else if (*compare) {
    int holds = 0;
    s = lg_compare(spec, budget, format, &text, &holds);
    if (s == LG_OK && !holds) code = kExitFailedCheck;
  } else if (*equiv) {
    s = lg_equiv(spec, first.c_str(), second.c_str(), format, &text, nullptr);
  } else {
    s = lg_spec_to_json(spec, &text);
  }
  lg_spec_free(spec);
  if (s != LG_OK) return Report(s);
  Emit(text);
  return code;
}
