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

// Text, CSV and JSON renderings of solver results. Every number is printed as
// an exact rational together with a 10-digit decimal; output never depends on
// the process locale.

#ifndef LEAKGAME_REPORT_HPP_
#define LEAKGAME_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "leakgame/channel.hpp"
#include "leakgame/games.hpp"

namespace leakgame {

enum class ReportFormat { kText, kCsv, kJson };

std::optional<ReportFormat> ParseReportFormat(const std::string& name);

std::string RenderSolution(const GameSpec& spec, const Solution& solution,
                           ReportFormat format);

// `note` is printed under the table when non-empty.
std::string RenderHierarchy(const HierarchyReport& report, ReportFormat format,
                            const std::string& note = "");

std::string RenderEquivalence(const std::string& first,
                              const std::string& second,
                              const EquivalenceReport& report,
                              ReportFormat format);

// One checked number of a case study.
struct CaseCheck {
  std::string name;
  std::string expected;  // e.g. "4/5" or "0.6577 +- 5e-5"
  std::string computed;
  bool pass = false;
};

struct CaseStudyReport {
  std::string name;
  std::vector<CaseCheck> checks;
  std::vector<std::string> notes;

  bool all_pass() const;
};

std::string RenderCaseStudy(const CaseStudyReport& report, ReportFormat format);

}  // namespace leakgame

#endif  // LEAKGAME_REPORT_HPP_
