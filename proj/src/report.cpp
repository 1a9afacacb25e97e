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

#include "leakgame/report.hpp"

#include <sstream>

#include "json.hpp"

namespace leakgame {
namespace {

using Json = nlohmann::ordered_json;

const char* Describe(GameId game) {
  switch (game) {
    case GameId::kI:
      return "simultaneous, visible choice";
    case GameId::kII:
      return "defender first, visible choice";
    case GameId::kIII:
      return "attacker first, visible choice";
    case GameId::kIV:
      return "simultaneous, hidden choice";
    case GameId::kV:
      return "defender first, hidden choice";
    case GameId::kVI:
      return "attacker first, hidden choice";
  }
  return "";
}

std::string Decimal(const Rational& r) { return r.ToDecimal(10); }

std::string Exact(const Rational& r) {
  return r.ToString() + "  " + Decimal(r);
}

Json NumberJson(const Rational& r) {
  return Json{{"exact", r.ToString()}, {"decimal", Decimal(r)}};
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void CsvRow(std::ostringstream& out, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const std::string& c : cells) {
    if (!first) out << ',';
    out << CsvField(c);
    first = false;
  }
  out << '\n';
}

std::string MixText(const Mix& mix) {
  std::string out;
  bool uniform = true;
  for (std::size_t i = 0; i < mix.size(); ++i) {
    out += (i ? "  " : "") + mix.labels()[i] + ": " + mix[i].ToString();
    uniform = uniform && mix[i] == mix[0];
  }
  if (uniform && mix.size() > 1) {
    out += "  (uniform " + mix[0].ToString() + " ×" +
           std::to_string(mix.size()) + ")";
  }
  return out;
}

Json MixJson(const Mix& mix) {
  Json out = Json::array();
  for (std::size_t i = 0; i < mix.size(); ++i) {
    Json entry = NumberJson(mix[i]);
    entry["action"] = mix.labels()[i];
    out.push_back(entry);
  }
  return out;
}

const std::vector<std::string>& Own(const GameSpec& spec, bool defender) {
  return defender ? spec.defender_actions() : spec.attacker_actions();
}
const std::vector<std::string>& Other(const GameSpec& spec, bool defender) {
  return defender ? spec.attacker_actions() : spec.defender_actions();
}

std::string StrategyText(const GameSpec& spec, const Strategy& s,
                         bool defender) {
  if (const auto* p = std::get_if<PureDefender>(&s)) {
    return "pure " + spec.defender_actions()[p->action];
  }
  if (const auto* p = std::get_if<PureAttacker>(&s)) {
    return "pure " + spec.attacker_actions()[p->action];
  }
  if (const auto* m = std::get_if<MixedDefender>(&s)) return "mixed  " + MixText(m->mix);
  if (const auto* m = std::get_if<MixedAttacker>(&s)) return "mixed  " + MixText(m->mix);
  const std::vector<std::size_t>& response =
      std::holds_alternative<AttackerFunction>(s)
          ? std::get<AttackerFunction>(s).response
          : std::get<DefenderFunction>(s).response;
  std::string out = "response";
  for (std::size_t i = 0; i < response.size(); ++i) {
    out += (i ? ", " : " ") + Other(spec, defender)[i] + " -> " +
           Own(spec, defender)[response[i]];
  }
  return out;
}

Json StrategyJson(const GameSpec& spec, const Strategy& s, bool defender) {
  if (const auto* p = std::get_if<PureDefender>(&s)) {
    return Json{{"kind", "pure"}, {"action", spec.defender_actions()[p->action]}};
  }
  if (const auto* p = std::get_if<PureAttacker>(&s)) {
    return Json{{"kind", "pure"}, {"action", spec.attacker_actions()[p->action]}};
  }
  if (const auto* m = std::get_if<MixedDefender>(&s)) {
    return Json{{"kind", "mixed"}, {"probabilities", MixJson(m->mix)}};
  }
  if (const auto* m = std::get_if<MixedAttacker>(&s)) {
    return Json{{"kind", "mixed"}, {"probabilities", MixJson(m->mix)}};
  }
  const std::vector<std::size_t>& response =
      std::holds_alternative<AttackerFunction>(s)
          ? std::get<AttackerFunction>(s).response
          : std::get<DefenderFunction>(s).response;
  Json map = Json::object();
  for (std::size_t i = 0; i < response.size(); ++i) {
    map[Other(spec, defender)[i]] = Own(spec, defender)[response[i]];
  }
  return Json{{"kind", "response"}, {"response", map}};
}

void StrategyCsv(std::ostringstream& out, const GameSpec& spec,
                 const Strategy& s, bool defender) {
  const std::string section = defender ? "defender" : "attacker";
  auto mix_rows = [&](const Mix& mix) {
    for (std::size_t i = 0; i < mix.size(); ++i) {
      CsvRow(out, {section, mix.labels()[i], mix[i].ToString(), Decimal(mix[i])});
    }
  };
  if (const auto* p = std::get_if<PureDefender>(&s)) {
    mix_rows(Mix::PointMass(spec.defender_actions(), p->action));
  } else if (const auto* p = std::get_if<PureAttacker>(&s)) {
    mix_rows(Mix::PointMass(spec.attacker_actions(), p->action));
  } else if (const auto* m = std::get_if<MixedDefender>(&s)) {
    mix_rows(m->mix);
  } else if (const auto* m = std::get_if<MixedAttacker>(&s)) {
    mix_rows(m->mix);
  } else {
    const std::vector<std::size_t>& response =
        std::holds_alternative<AttackerFunction>(s)
            ? std::get<AttackerFunction>(s).response
            : std::get<DefenderFunction>(s).response;
    for (std::size_t i = 0; i < response.size(); ++i) {
      CsvRow(out, {section + "_response", Other(spec, defender)[i],
                   Own(spec, defender)[response[i]], ""});
    }
  }
}

struct RelationRow {
  std::string name;
  std::string status;
};

std::vector<RelationRow> Relations(const HierarchyReport& r) {
  auto ge = [&](GameId hi, GameId lo) {
    return RelationRow{GameName(hi) + " >= " + GameName(lo),
                    r.value(hi) >= r.value(lo) ? "holds" : "VIOLATED"};
  };
  return {ge(GameId::kII, GameId::kI),
          ge(GameId::kI, GameId::kIII),
          ge(GameId::kIII, GameId::kVI),
          ge(GameId::kI, GameId::kIV),
          {"IV = V", r.value(GameId::kIV) == r.value(GameId::kV) ? "holds"
                                                                 : "VIOLATED"},
          ge(GameId::kV, GameId::kVI),
          {"III ? IV", std::string("incomparable (III ") +
                           (r.iii_above_iv ? ">" : "<=") + " IV here)"}};
}

}  // namespace

std::optional<ReportFormat> ParseReportFormat(const std::string& name) {
  if (name == "text") return ReportFormat::kText;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  return std::nullopt;
}

std::string RenderSolution(const GameSpec& spec, const Solution& solution,
                           ReportFormat format) {
  std::ostringstream out;
  const std::string game = GameName(solution.game);
  switch (format) {
    case ReportFormat::kText: {
      out << "game " << game << " (" << Describe(solution.game) << ")\n";
      out << "value       " << Exact(solution.value) << "\n";
      out << "defender    " << StrategyText(spec, solution.defender, true) << "\n";
      out << "attacker    " << StrategyText(spec, solution.attacker, false)
          << "\n";
      for (std::size_t a = 0; a < solution.defender_responses.size(); ++a) {
        out << "  best hidden mix vs " << spec.attacker_actions()[a] << ": "
            << MixText(solution.defender_responses[a]) << "\n";
      }
      if (!solution.certificates.empty()) out << "certificates\n";
      for (const Certificate& c : solution.certificates) {
        out << "  " << c.name << "  " << Exact(c.value) << "\n";
      }
      break;
    }
    case ReportFormat::kCsv: {
      CsvRow(out, {"section", "label", "exact", "decimal"});
      CsvRow(out, {"game", game, "", ""});
      CsvRow(out, {"value", "", solution.value.ToString(), Decimal(solution.value)});
      StrategyCsv(out, spec, solution.defender, true);
      StrategyCsv(out, spec, solution.attacker, false);
      for (std::size_t a = 0; a < solution.defender_responses.size(); ++a) {
        const Mix& mix = solution.defender_responses[a];
        for (std::size_t d = 0; d < mix.size(); ++d) {
          CsvRow(out, {"defender_vs_" + spec.attacker_actions()[a],
                       mix.labels()[d], mix[d].ToString(), Decimal(mix[d])});
        }
      }
      for (const Certificate& c : solution.certificates) {
        CsvRow(out, {"certificate", c.name, c.value.ToString(), Decimal(c.value)});
      }
      break;
    }
    case ReportFormat::kJson: {
      Json doc;
      doc["game"] = game;
      doc["description"] = Describe(solution.game);
      doc["value"] = NumberJson(solution.value);
      doc["defender"] = StrategyJson(spec, solution.defender, true);
      doc["attacker"] = StrategyJson(spec, solution.attacker, false);
      if (!solution.defender_responses.empty()) {
        Json responses = Json::object();
        for (std::size_t a = 0; a < solution.defender_responses.size(); ++a) {
          responses[spec.attacker_actions()[a]] =
              MixJson(solution.defender_responses[a]);
        }
        doc["defender_responses"] = responses;
      }
      Json certs = Json::array();
      for (const Certificate& c : solution.certificates) {
        Json entry = NumberJson(c.value);
        entry["name"] = c.name;
        certs.push_back(entry);
      }
      doc["certificates"] = certs;
      out << doc.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

std::string RenderHierarchy(const HierarchyReport& report, ReportFormat format,
                            const std::string& note) {
  std::ostringstream out;
  const std::vector<RelationRow> relations = Relations(report);
  switch (format) {
    case ReportFormat::kText: {
      out << "game  value\n";
      for (int g = 1; g <= 6; ++g) {
        const std::string name = GameName(static_cast<GameId>(g));
        out << name << std::string(6 - name.size(), ' ')
            << Exact(report.values[g - 1]) << "\n";
      }
      out << "relations\n";
      for (const RelationRow& r : relations) {
        out << "  " << r.name << "  " << r.status << "\n";
      }
      if (!note.empty()) out << "note: " << note << "\n";
      break;
    }
    case ReportFormat::kCsv: {
      CsvRow(out, {"kind", "name", "exact", "decimal", "status"});
      for (int g = 1; g <= 6; ++g) {
        const Rational& v = report.values[g - 1];
        CsvRow(out, {"value", GameName(static_cast<GameId>(g)), v.ToString(),
                     Decimal(v), ""});
      }
      for (const RelationRow& r : relations) {
        CsvRow(out, {"relation", r.name, "", "", r.status});
      }
      if (!note.empty()) CsvRow(out, {"note", "", "", "", note});
      break;
    }
    case ReportFormat::kJson: {
      Json doc;
      Json values = Json::object();
      for (int g = 1; g <= 6; ++g) {
        values[GameName(static_cast<GameId>(g))] =
            NumberJson(report.values[g - 1]);
      }
      doc["values"] = values;
      Json rel = Json::array();
      for (const RelationRow& r : relations) {
        rel.push_back(Json{{"relation", r.name}, {"status", r.status}});
      }
      doc["relations"] = rel;
      doc["violations"] = report.violations;
      if (!note.empty()) doc["note"] = note;
      out << doc.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

std::string RenderEquivalence(const std::string& first,
                              const std::string& second,
                              const EquivalenceReport& report,
                              ReportFormat format) {
  std::ostringstream out;
  auto matrix_text = [&](const Matrix& m) {
    for (const auto& row : m) {
      out << "   ";
      for (const Rational& v : row) out << " " << v.ToString();
      out << "\n";
    }
  };
  auto matrix_json = [](const Matrix& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
      Json r = Json::array();
      for (const Rational& v : row) r.push_back(v.ToString());
      rows.push_back(r);
    }
    return rows;
  };
  switch (format) {
    case ReportFormat::kText:
      out << first << " vs " << second << ": "
          << (report.equivalent ? "equivalent" : "not equivalent") << "\n";
      if (report.forward) {
        out << "  " << first << " * R = " << second << " with R =\n";
        matrix_text(*report.forward);
      }
      if (report.backward) {
        out << "  " << second << " * S = " << first << " with S =\n";
        matrix_text(*report.backward);
      }
      if (report.failing_column) {
        out << "  failing column: " << *report.failing_column << "\n";
      }
      break;
    case ReportFormat::kCsv:
      CsvRow(out, {"first", "second", "equivalent", "failing_column"});
      CsvRow(out, {first, second, report.equivalent ? "true" : "false",
                   report.failing_column.value_or("")});
      break;
    case ReportFormat::kJson: {
      Json doc;
      doc["first"] = first;
      doc["second"] = second;
      doc["equivalent"] = report.equivalent;
      if (report.forward) doc["forward"] = matrix_json(*report.forward);
      if (report.backward) doc["backward"] = matrix_json(*report.backward);
      if (report.failing_column) doc["failing_column"] = *report.failing_column;
      out << doc.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

bool CaseStudyReport::all_pass() const {
  for (const CaseCheck& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::string RenderCaseStudy(const CaseStudyReport& report,
                            ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::kText: {
      out << "case study: " << report.name << "\n";
      for (const CaseCheck& c : report.checks) {
        out << (c.pass ? "PASS  " : "FAIL  ") << c.name << ": expected "
            << c.expected << ", computed " << c.computed << "\n";
      }
      for (const std::string& n : report.notes) out << "note: " << n << "\n";
      std::size_t passed = 0;
      for (const CaseCheck& c : report.checks) passed += c.pass;
      out << passed << "/" << report.checks.size() << " checks passed\n";
      break;
    }
    case ReportFormat::kCsv:
      CsvRow(out, {"check", "expected", "computed", "status"});
      for (const CaseCheck& c : report.checks) {
        CsvRow(out, {c.name, c.expected, c.computed, c.pass ? "PASS" : "FAIL"});
      }
      break;
    case ReportFormat::kJson: {
      Json doc;
      doc["case_study"] = report.name;
      Json checks = Json::array();
      for (const CaseCheck& c : report.checks) {
        checks.push_back(Json{{"check", c.name},
                              {"expected", c.expected},
                              {"computed", c.computed},
                              {"status", c.pass ? "PASS" : "FAIL"}});
      }
      doc["checks"] = checks;
      doc["notes"] = report.notes;
      doc["all_pass"] = report.all_pass();
      out << doc.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace leakgame
