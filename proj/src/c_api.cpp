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

#include "leakgame/leakgame.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "leakgame/casestudy.hpp"
#include "leakgame/error.hpp"
#include "leakgame/report.hpp"
#include "leakgame/spec_io.hpp"

struct lg_spec {
  leakgame::GameSpec spec;
};

struct lg_solution {
  leakgame::GameSpec spec;
  leakgame::Solution solution;
};

namespace {

thread_local std::string last_error;

lg_status Fail(lg_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `body`, mapping exceptions onto status codes.
template <class F>
lg_status Guard(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const leakgame::Error& e) {
    switch (e.kind()) {
      case leakgame::ErrorKind::kInvalidArgument:
        return Fail(LG_INPUT, e.what());
      case leakgame::ErrorKind::kCapacity:
        return Fail(LG_CAPACITY, e.what());
      case leakgame::ErrorKind::kInternal:
        break;
    }
    return Fail(LG_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(LG_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(LG_INTERNAL, e.what());
  } catch (...) {
    return Fail(LG_INTERNAL, "unknown error");
  }
}

char* Duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

leakgame::ReportFormat Format(lg_format format) {
  switch (format) {
    case LG_FORMAT_TEXT:
      return leakgame::ReportFormat::kText;
    case LG_FORMAT_CSV:
      return leakgame::ReportFormat::kCsv;
    case LG_FORMAT_JSON:
      return leakgame::ReportFormat::kJson;
  }
  leakgame::ThrowInvalid("unknown report format");
}

leakgame::SolverOptions Options(uint64_t guess_budget) {
  leakgame::SolverOptions options;
  if (guess_budget != 0) options.guess_budget = guess_budget;
  return options;
}

void RequireArg(const void* p, const char* name) {
  if (p == nullptr) leakgame::ThrowInvalid(std::string(name) + " is NULL");
}

}  // namespace

extern "C" {

lg_status lg_spec_load_file(const char* path, lg_spec** out) {
  return Guard([&] {
    RequireArg(path, "path");
    RequireArg(out, "out");
    *out = new lg_spec{leakgame::LoadGameSpec(path)};
    return LG_OK;
  });
}

lg_status lg_spec_load_json(const char* json, lg_spec** out) {
  return Guard([&] {
    RequireArg(json, "json");
    RequireArg(out, "out");
    *out = new lg_spec{leakgame::ParseGameSpec(json)};
    return LG_OK;
  });
}

lg_status lg_spec_builtin(const char* name, lg_spec** out) {
  return Guard([&] {
    RequireArg(name, "name");
    RequireArg(out, "out");
    *out = new lg_spec{leakgame::BuiltinSpec(name)};
    return LG_OK;
  });
}

lg_status lg_spec_to_json(const lg_spec* spec, char** out) {
  return Guard([&] {
    RequireArg(spec, "spec");
    RequireArg(out, "out");
    *out = Duplicate(leakgame::SerializeGameSpec(spec->spec));
    return LG_OK;
  });
}

void lg_spec_free(lg_spec* spec) { delete spec; }

lg_status lg_solve(const lg_spec* spec, const char* game,
                   uint64_t guess_budget, lg_solution** out) {
  return Guard([&] {
    RequireArg(spec, "spec");
    RequireArg(game, "game");
    RequireArg(out, "out");
    const auto id = leakgame::ParseGameName(game);
    if (!id) leakgame::ThrowInvalid(std::string("unknown game '") + game + "'");
    *out = new lg_solution{
        spec->spec,
        leakgame::SolveGame(spec->spec, *id, Options(guess_budget))};
    return LG_OK;
  });
}

lg_status lg_solution_render(const lg_solution* solution, lg_format format,
                             char** out) {
  return Guard([&] {
    RequireArg(solution, "solution");
    RequireArg(out, "out");
    *out = Duplicate(leakgame::RenderSolution(solution->spec,
                                              solution->solution,
                                              Format(format)));
    return LG_OK;
  });
}

lg_status lg_solution_value(const lg_solution* solution, char** exact,
                            double* approx) {
  return Guard([&] {
    RequireArg(solution, "solution");
    if (exact != nullptr) *exact = Duplicate(solution->solution.value.ToString());
    if (approx != nullptr) *approx = solution->solution.value.ToDouble();
    return LG_OK;
  });
}

void lg_solution_free(lg_solution* solution) { delete solution; }

lg_status lg_compare(const lg_spec* spec, uint64_t guess_budget,
                     lg_format format, char** report, int* holds) {
  return Guard([&] {
    RequireArg(spec, "spec");
    RequireArg(report, "report");
    const leakgame::HierarchyReport h =
        leakgame::VerifyHierarchy(spec->spec, Options(guess_budget));
    *report = Duplicate(leakgame::RenderHierarchy(
        h, Format(format), leakgame::HierarchyNote(spec->spec)));
    if (holds != nullptr) *holds = h.violations.empty() ? 1 : 0;
    return LG_OK;
  });
}

lg_status lg_equiv(const lg_spec* spec, const char* first, const char* second,
                   lg_format format, char** report, int* equivalent) {
  return Guard([&] {
    RequireArg(spec, "spec");
    RequireArg(first, "first");
    RequireArg(second, "second");
    RequireArg(report, "report");
    const auto [d1, a1] = leakgame::ParseChannelRef(spec->spec, first);
    const auto [d2, a2] = leakgame::ParseChannelRef(spec->spec, second);
    const leakgame::EquivalenceReport r = leakgame::CheckEquivalence(
        spec->spec.channel(d1, a1), spec->spec.channel(d2, a2));
    *report = Duplicate(
        leakgame::RenderEquivalence(first, second, r, Format(format)));
    if (equivalent != nullptr) *equivalent = r.equivalent ? 1 : 0;
    return LG_OK;
  });
}

lg_status lg_casestudy(const char* name, uint64_t guess_budget,
                       lg_format format, char** report, int* all_pass) {
  return Guard([&] {
    RequireArg(name, "name");
    RequireArg(report, "report");
    const leakgame::CaseStudyReport r =
        leakgame::RunCaseStudy(name, Options(guess_budget));
    *report = Duplicate(leakgame::RenderCaseStudy(r, Format(format)));
    if (all_pass != nullptr) *all_pass = r.all_pass() ? 1 : 0;
    return LG_OK;
  });
}

const char* lg_last_error(void) { return last_error.c_str(); }

void lg_string_free(char* s) { std::free(s); }

}  // extern "C"
