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

#include "leakgame/casestudy.hpp"

#include <algorithm>

#include "leakgame/error.hpp"
#include "leakgame/scenarios.hpp"

namespace leakgame {
namespace {

// Four-decimal reference utilities of the password game, rows in the default
// order list 123..321, columns 000..111.
constexpr const char* kPasswordTable[6][8] = {
    {"0.7257", "0.7257", "0.9311", "0.9311", "0.6577", "0.6577", "0.7122", "0.7122"},
    {"0.8900", "0.9311", "0.8900", "0.9311", "0.7122", "0.7122", "0.7122", "0.7122"},
    {"0.5068", "0.5068", "0.9311", "0.9311", "0.4934", "0.4934", "0.7668", "0.7668"},
    {"0.5068", "0.5068", "0.7668", "0.9311", "0.5068", "0.5068", "0.7668", "0.9311"},
    {"0.7257", "0.9311", "0.7257", "0.9311", "0.7122", "0.8766", "0.7122", "0.8766"},
    {"0.6712", "0.7122", "0.7257", "0.9311", "0.6712", "0.7122", "0.7257", "0.9311"},
};

Rational Q(const char* text) { return Rational::Parse(text); }

// Shortest decimal rendering that is exact, e.g. "0.00005".
std::string Short(const Rational& r) {
  for (int digits = 0; digits < 12; ++digits) {
    std::string text = r.ToDecimal(digits);
    if (Rational::Parse(text) == r) return text;
  }
  return r.ToString();
}

class Checker {
 public:
  explicit Checker(std::string name) { report_.name = std::move(name); }

  void Exact(const std::string& name, const Rational& expected,
             const Rational& computed) {
    Add(name, expected.ToString(), computed.ToString(), expected == computed);
  }
  void Near(const std::string& name, const Rational& expected,
            const Rational& tolerance, const Rational& computed) {
    Add(name, Short(expected) + " +- " + Short(tolerance),
        computed.ToDecimal(6),
        Abs(computed - expected) <= tolerance);
  }
  void AtMost(const std::string& name, const Rational& bound,
              const Rational& computed) {
    Add(name, "<= " + Short(bound), computed.ToDecimal(6),
        computed <= bound);
  }
  void Add(const std::string& name, std::string expected, std::string computed,
           bool pass) {
    report_.checks.push_back(
        {name, std::move(expected), std::move(computed), pass});
  }
  void Note(std::string note) { report_.notes.push_back(std::move(note)); }

  CaseStudyReport Take() { return std::move(report_); }

 private:
  CaseStudyReport report_;
};

const Rational& MixAt(const Strategy& s, std::size_t i) {
  if (const auto* m = std::get_if<MixedDefender>(&s)) return m->mix[i];
  return std::get<MixedAttacker>(s).mix[i];
}

std::string MatrixText(const PayoffMatrix& u) {
  std::string out = "(";
  for (std::size_t d = 0; d < u.size(); ++d) {
    out += d ? ", (" : "(";
    for (std::size_t a = 0; a < u[d].size(); ++a) {
      out += (a ? ", " : "") + u[d][a].ToString();
    }
    out += ")";
  }
  return out + ")";
}

std::string Profile(std::size_t d, std::size_t a) {
  return "(" + std::to_string(d) + "," + std::to_string(a) + ")";
}

CaseStudyReport RunningExampleStudy(const SolverOptions& options) {
  Checker check("running-example");
  const GameSpec spec = RunningExample();
  const PayoffMatrix u = ComputePayoffMatrix(spec);
  const PayoffMatrix table = {{Rational(1, 2), Rational(1)},
                              {Rational(1), Rational(2, 3)}};
  check.Add("payoff matrix", MatrixText(table), MatrixText(u), u == table);

  const HierarchyReport h = VerifyHierarchy(spec, options);
  const Solution& g1 = h.solutions[0];
  check.Exact("game I value", Rational(4, 5), g1.value);
  check.Exact("game I delta*(0)", Rational(2, 5), MixAt(g1.defender, 0));
  check.Exact("game I alpha*(0)", Rational(2, 5), MixAt(g1.attacker, 0));
  const auto closed = ClosedForm2x2(u);
  check.Add("game I closed form (delta*(0), alpha*(0))", "(2/5, 2/5)",
            closed ? "(" + closed->first.ToString() + ", " +
                         closed->second.ToString() + ")"
                   : "none",
            closed && closed->first == Rational(2, 5) &&
                closed->second == Rational(2, 5));

  const Solution& g2 = h.solutions[1];
  check.Exact("game II value", Rational(1), g2.value);
  const std::size_t d2 = std::get<PureDefender>(g2.defender).action;
  const std::size_t a2 = std::get<AttackerFunction>(g2.attacker).response[d2];
  check.Add("game II profile", "(0,1)", Profile(d2, a2), d2 == 0 && a2 == 1);

  const Solution& g3 = h.solutions[2];
  check.Exact("game III value", Rational(2, 3), g3.value);
  const std::size_t a3 = std::get<PureAttacker>(g3.attacker).action;
  const std::size_t d3 = std::get<DefenderFunction>(g3.defender).response[a3];
  check.Add("game III profile", "(1,1)", Profile(d3, a3), d3 == 1 && a3 == 1);

  const Solution& g4 = h.solutions[3];
  check.Exact("game IV delta*(0)", Rational(4, 7), MixAt(g4.defender, 0));
  check.Exact("game IV alpha*(0)", Rational(4, 7), MixAt(g4.attacker, 0));
  check.Exact("game IV value", Rational(5, 7), g4.value);
  const Solution& g5 = h.solutions[4];
  check.Add("game V equals game IV", "identical",
            g5.value == g4.value && MixAt(g5.defender, 0) == MixAt(g4.defender, 0)
                ? "identical"
                : "different",
            g5.value == g4.value &&
                MixAt(g5.defender, 0) == MixAt(g4.defender, 0) &&
                MixAt(g5.attacker, 0) == MixAt(g4.attacker, 0));

  const Solution& g6 = h.solutions[5];
  check.Exact("game VI value", Rational(1, 2), g6.value);
  check.Exact("game VI defender p against a=0", Rational(1, 4),
              g6.defender_responses[0][0]);
  check.Add("hierarchy relations", "all hold",
            h.violations.empty() ? "all hold" : h.violations.front(),
            h.violations.empty());

  const HierarchyReport m = VerifyHierarchy(ModifiedRunningExample(), options);
  check.Exact("modified game III value", Rational(1, 2), m.value(GameId::kIII));
  check.Exact("modified game IV value", Rational(2, 3), m.value(GameId::kIV));
  check.Note(HierarchyNote(spec));
  return check.Take();
}

CaseStudyReport PasswordStudy(const SolverOptions& options) {
  Checker check("password");
  const PasswordConfig config = PasswordConfig::Default();
  const GameSpec spec = PasswordGame(config);
  const PayoffMatrix u = ComputePayoffMatrix(spec);
  const Rational tight = Rational(5, 100000);
  const Rational runtime_tolerance = Rational(2, 10000);

  Rational worst;
  std::string where = "-";
  for (std::size_t d = 0; d < 6; ++d) {
    for (std::size_t a = 0; a < 8; ++a) {
      const Rational dev = Abs(u[d][a] - Q(kPasswordTable[d][a]));
      if (dev > worst) {
        worst = dev;
        where = spec.defender_actions()[d] + "," + spec.attacker_actions()[a];
      }
    }
  }
  check.Add("payoff matrix vs reference table (48 entries)",
            "max deviation <= 0.00005",
            "max deviation " + worst.ToDecimal(6) + " at (" + where + ")",
            worst <= tight);
  check.Near("prior vulnerability", Q("0.4382"), tight,
             PriorVulnerability(spec.measure(), spec.prior()));
  check.Near("V[C_123,101]", Q("0.6577"), tight, u[0][5]);
  PasswordConfig padded = config;
  padded.constant_time = true;
  check.Near("V[C_cons,101]", Q("0.4384"), tight,
             PosteriorVulnerability(spec.measure(), spec.prior(),
                                    PasswordChannel(padded, "123", "101")));
  check.Near("minimum entry (213,100)", Q("0.4934"), tight, u[2][4]);

  const Solution g2 = SolveGameII(spec);
  const Solution g3 = SolveGameIII(spec);
  check.Near("game II value", Q("0.9311"), tight, g2.value);
  check.Near("game III value", Q("0.9311"), tight, g3.value);

  const Solution g4 = SolveGameIV(spec, options);
  const Mix& delta = std::get<MixedDefender>(g4.defender).mix;
  const Mix uniform = Mix::Uniform(config.orders);
  std::string delta_text;
  for (std::size_t d = 0; d < delta.size(); ++d) {
    delta_text += (d ? " " : "") + delta[d].ToString();
  }
  check.Add("game IV defender strategy", "1/6 ×6", delta_text, delta == uniform);
  Rational max_v;
  Rational max_runtime;
  for (std::size_t a = 0; a < spec.num_attacker_actions(); ++a) {
    max_v = std::max(max_v, HiddenPayoff(spec, delta.probabilities(), a));
    max_runtime = std::max(
        max_runtime,
        ExpectedIterations(config, delta, spec.attacker_actions()[a]));
  }
  check.AtMost("game IV max_a V under delta*", Q("0.6573") + tight, max_v);
  check.AtMost("expected iterations under delta*, worst a",
               Q("2.3922") + runtime_tolerance, max_runtime);

  Rational padded_min(1000);
  Rational padded_max;
  for (const std::string& a : BitStrings(3)) {
    const Rational r = ExpectedIterations(padded, uniform, a);
    padded_min = std::min(padded_min, r);
    padded_max = std::max(padded_max, r);
  }
  check.Add("constant-time expected iterations", "3",
            padded_min == padded_max ? padded_min.ToString()
                                     : padded_min.ToString() + ".." +
                                           padded_max.ToString(),
            padded_min == Rational(3) && padded_max == Rational(3));
  check.Near("expected iterations of C_123,101", Q("1.2747"), runtime_tolerance,
             ExpectedIterations(config, Mix::PointMass(config.orders, 0), "101"));
  check.Note("the rounded prior sums to 1.0001 and is rescaled to 1 before use");
  return check.Take();
}

}  // namespace

std::vector<std::string> BuiltinNames() {
  return {"running-example", "running-example-modified", "password",
          "password-constant-time"};
}

GameSpec BuiltinSpec(const std::string& name) {
  if (name == "running-example") return RunningExample();
  if (name == "running-example-modified") return ModifiedRunningExample();
  if (name == "password" || name == "password-constant-time") {
    PasswordConfig config = PasswordConfig::Default();
    config.constant_time = name == "password-constant-time";
    return PasswordGame(config);
  }
  ThrowInvalid("unknown builtin spec '" + name + "'");
}

CaseStudyReport RunCaseStudy(const std::string& name,
                             const SolverOptions& options) {
  if (name == "running-example") return RunningExampleStudy(options);
  if (name == "password") return PasswordStudy(options);
  ThrowInvalid("unknown case study '" + name + "'");
}

std::string HierarchyNote(const GameSpec& spec) {
  if (!(spec == RunningExample())) return "";
  return "game IV is sometimes listed with value 4/7 for this game; 4/7 is the "
         "equilibrium probability p* = q*, and the value at that point is 5/7";
}

}  // namespace leakgame
