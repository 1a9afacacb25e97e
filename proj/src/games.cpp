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

#include "leakgame/games.hpp"

#include <set>

#include "leakgame/choice.hpp"
#include "leakgame/error.hpp"
#include "leakgame/lp.hpp"

namespace leakgame {
namespace {

using Vector = std::vector<Rational>;

void RequireUnique(const std::vector<std::string>& labels, const char* what) {
  if (labels.empty()) ThrowInvalid(std::string("no ") + what);
  if (std::set<std::string>(labels.begin(), labels.end()).size() !=
      labels.size()) {
    ThrowInvalid(std::string(what) + " are not unique");
  }
}

Rational Dot(const Vector& a, const Vector& b) {
  Rational total;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].IsZero() && !b[i].IsZero()) total += a[i] * b[i];
  }
  return total;
}

Vector Unit(std::size_t size, std::size_t index) {
  Vector v(size, Rational(0));
  v[index] = Rational(1);
  return v;
}

// ---------------------------------------------------------------------------
// Hidden-choice machinery shared by Games IV and VI.
//
// For attacker action a, output y and guess w, the joint gain is linear in the
// defender's mix: sum_d delta(d) * k[d], k[d] = sum_x pi(x) g(w, x) C_da(x, y).
// Posterior vulnerability of the hidden mix is sum_y max_w of these.

struct GuessComponent {
  std::size_t guess;
  Vector coefficients;  // indexed by defender action
};

bool Dominates(const Vector& a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

// Guess components for (a, y) with duplicates and pointwise-dominated entries
// removed. The maximum over any non-negative delta is unchanged.
std::vector<GuessComponent> PrunedComponents(const GameSpec& spec,
                                             const GainFunction& gain,
                                             std::size_t a, std::size_t y) {
  const std::size_t nd = spec.num_defender_actions();
  const std::size_t nx = spec.prior().size();
  std::vector<GuessComponent> all;
  for (std::size_t w = 0; w < gain.guesses().size(); ++w) {
    Vector k(nd);
    for (std::size_t d = 0; d < nd; ++d) {
      const Channel& c = spec.channel(d, a);
      for (std::size_t x = 0; x < nx; ++x) {
        if (gain(w, x).IsZero() || c(x, y).IsZero()) continue;
        k[d] += spec.prior()[x] * gain(w, x) * c(x, y);
      }
    }
    all.push_back({w, std::move(k)});
  }
  std::vector<GuessComponent> kept;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < all.size() && !dominated; ++j) {
      if (i == j || !Dominates(all[j].coefficients, all[i].coefficients)) {
        continue;
      }
      // Equal vectors: keep the lowest guess index.
      dominated = all[j].coefficients != all[i].coefficients || j < i;
    }
    if (!dominated) kept.push_back(all[i]);
  }
  return kept;
}

struct EpigraphSolution {
  Rational value;
  Vector delta;
};

// min over delta of max over a in `actions` of V[pi |> hidden_delta C_{., a}],
// as an LP in (t, delta, s_{a,y}). Among optimal mixes, returns the one that
// maximizes the smallest probability.
EpigraphSolution SolveHiddenEpigraph(const GameSpec& spec,
                                     const std::vector<std::size_t>& actions) {
  const GainFunction gain = spec.measure().ResolveFor(spec.prior().labels());
  const std::size_t nd = spec.num_defender_actions();
  const std::size_t ny = spec.channel(0, 0).num_outputs();
  // Variables: t, delta[nd], s[actions * ny], balance m (stage two only).
  const std::size_t t_var = 0;
  const std::size_t delta0 = 1;
  const std::size_t s0 = delta0 + nd;
  const std::size_t m_var = s0 + actions.size() * ny;
  const std::size_t n = m_var + 1;

  LinearProgram lp;
  lp.objective.assign(n, Rational(0));
  lp.bounds.assign(n, VariableBounds::Free());
  for (std::size_t d = 0; d < nd; ++d) {
    lp.bounds[delta0 + d] = VariableBounds::NonNegative();
  }
  lp.bounds[m_var] = {Rational(0), Rational(0)};  // inactive in stage one

  Vector simplex_row(n, Rational(0));
  for (std::size_t d = 0; d < nd; ++d) simplex_row[delta0 + d] = Rational(1);
  lp.AddConstraint(std::move(simplex_row), Relation::kEqual, Rational(1));

  for (std::size_t i = 0; i < actions.size(); ++i) {
    Vector cap(n, Rational(0));
    cap[t_var] = Rational(1);
    for (std::size_t y = 0; y < ny; ++y) {
      const std::size_t s = s0 + i * ny + y;
      cap[s] = Rational(-1);
      for (const GuessComponent& k : PrunedComponents(spec, gain, actions[i], y)) {
        Vector row(n, Rational(0));
        row[s] = Rational(1);
        for (std::size_t d = 0; d < nd; ++d) row[delta0 + d] = -k.coefficients[d];
        lp.AddConstraint(std::move(row), Relation::kGreaterEqual, Rational(0));
      }
    }
    lp.AddConstraint(std::move(cap), Relation::kGreaterEqual, Rational(0));
  }

  lp.objective[t_var] = Rational(1);
  const LpOutcome first = SolveLp(lp);
  if (!first.optimal()) ThrowInternal("hidden-choice epigraph LP not optimal");
  const Rational value = first.value;

  // Stage two: fix t at the optimum and spread delta as evenly as possible.
  lp.sense = Sense::kMaximize;
  lp.objective.assign(n, Rational(0));
  lp.objective[m_var] = Rational(1);
  lp.bounds[m_var] = VariableBounds::Free();
  lp.bounds[t_var] = {std::nullopt, value};
  for (std::size_t d = 0; d < nd; ++d) {
    Vector row(n, Rational(0));
    row[delta0 + d] = Rational(1);
    row[m_var] = Rational(-1);
    lp.AddConstraint(std::move(row), Relation::kGreaterEqual, Rational(0));
  }
  const LpOutcome second = SolveLp(lp);
  if (!second.optimal()) ThrowInternal("balanced epigraph LP not optimal");

  EpigraphSolution out;
  out.value = value;
  out.delta.assign(second.point.begin() + delta0,
                   second.point.begin() + delta0 + nd);
  return out;
}

std::uint64_t CheckedPower(std::uint64_t base, std::uint64_t exponent,
                           std::uint64_t cap, bool* overflow) {
  std::uint64_t result = 1;
  *overflow = false;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > cap / base) {
      *overflow = true;
      return cap;
    }
    result *= base;
  }
  return result;
}

struct ExtendedGameSolution {
  Rational value;
  Vector attacker_marginal;  // indexed by attacker action
  std::size_t columns = 0;
};

// Zero-sum game where the attacker picks (a, w) with w : Y -> W a guess
// function; its payoff is bilinear, so its value equals the Game IV value.
ExtendedGameSolution SolveExtendedGame(const GameSpec& spec,
                                       const SolverOptions& options) {
  const GainFunction gain = spec.measure().ResolveFor(spec.prior().labels());
  const std::size_t nd = spec.num_defender_actions();
  const std::size_t na = spec.num_attacker_actions();
  const std::size_t ny = spec.channel(0, 0).num_outputs();

  bool overflow = false;
  const std::uint64_t functions =
      CheckedPower(gain.guesses().size(), ny, options.guess_budget, &overflow);
  if (overflow || functions > options.guess_budget) {
    throw Error(ErrorKind::kCapacity,
                "Game IV attacker side needs |W|^|Y| = " +
                    std::to_string(gain.guesses().size()) + "^" +
                    std::to_string(ny) + " guess functions, over the budget of " +
                    std::to_string(options.guess_budget));
  }

  std::vector<Vector> columns;        // payoff vector over defender actions
  std::vector<std::size_t> owner;     // attacker action of each column
  for (std::size_t a = 0; a < na; ++a) {
    std::vector<std::vector<GuessComponent>> per_output(ny);
    for (std::size_t y = 0; y < ny; ++y) {
      per_output[y] = PrunedComponents(spec, gain, a, y);
    }
    std::set<Vector> seen;
    std::vector<std::size_t> digit(ny, 0);
    while (true) {
      Vector column(nd);
      for (std::size_t y = 0; y < ny; ++y) {
        const Vector& k = per_output[y][digit[y]].coefficients;
        for (std::size_t d = 0; d < nd; ++d) column[d] += k[d];
      }
      if (seen.insert(column).second) {
        columns.push_back(std::move(column));
        owner.push_back(a);
      }
      std::size_t y = 0;
      while (y < ny && ++digit[y] == per_output[y].size()) digit[y++] = 0;
      if (y == ny) break;
    }
  }

  // max v  s.t.  sum_j beta_j M(d, j) >= v for all d, beta in the simplex.
  const std::size_t nc = columns.size();
  const std::size_t n = nc + 1;  // beta[nc], v
  LinearProgram lp;
  lp.sense = Sense::kMaximize;
  lp.objective.assign(n, Rational(0));
  lp.objective[nc] = Rational(1);
  lp.bounds.assign(n, VariableBounds::NonNegative());
  lp.bounds[nc] = VariableBounds::Free();
  Vector simplex_row(n, Rational(1));
  simplex_row[nc] = Rational(0);
  lp.AddConstraint(std::move(simplex_row), Relation::kEqual, Rational(1));
  for (std::size_t d = 0; d < nd; ++d) {
    Vector row(n);
    for (std::size_t j = 0; j < nc; ++j) row[j] = columns[j][d];
    row[nc] = Rational(-1);
    lp.AddConstraint(std::move(row), Relation::kGreaterEqual, Rational(0));
  }
  const LpOutcome outcome = SolveLp(lp);
  if (!outcome.optimal()) ThrowInternal("extended game LP not optimal");

  ExtendedGameSolution out;
  out.value = outcome.value;
  out.columns = nc;
  out.attacker_marginal.assign(na, Rational(0));
  for (std::size_t j = 0; j < nc; ++j) {
    out.attacker_marginal[owner[j]] += outcome.point[j];
  }
  return out;
}

Certificate Cert(std::string name, Rational value) {
  return Certificate{std::move(name), std::move(value)};
}

}  // namespace

// ---------------------------------------------------------------------------

GameSpec::GameSpec(std::vector<std::string> defender_actions,
                   std::vector<std::string> attacker_actions,
                   std::vector<std::vector<Channel>> channels, Prior prior,
                   VulnerabilityMeasure measure)
    : defender_(std::move(defender_actions)),
      attacker_(std::move(attacker_actions)),
      channels_(std::move(channels)),
      prior_(std::move(prior)),
      measure_(std::move(measure)) {
  RequireUnique(defender_, "defender actions");
  RequireUnique(attacker_, "attacker actions");
  if (channels_.size() != defender_.size()) {
    ThrowInvalid("channel table has " + std::to_string(channels_.size()) +
                 " rows for " + std::to_string(defender_.size()) +
                 " defender actions");
  }
  for (std::size_t d = 0; d < channels_.size(); ++d) {
    if (channels_[d].size() != attacker_.size()) {
      ThrowInvalid("channel table row " + defender_[d] + " has " +
                   std::to_string(channels_[d].size()) + " channels for " +
                   std::to_string(attacker_.size()) + " attacker actions");
    }
    for (std::size_t a = 0; a < attacker_.size(); ++a) {
      if (!channels_[d][a].SameTypeAs(channels_[0][0])) {
        ThrowInvalid("channel " + defender_[d] + "|" + attacker_[a] +
                     " does not share the type of the other channels");
      }
    }
  }
  if (prior_.labels() != channels_[0][0].inputs()) {
    ThrowInvalid("prior is not indexed by the channels' secrets");
  }
  measure_.ResolveFor(prior_.labels());
}

GameSpec GameSpec::WithChannel(std::size_t d, std::size_t a,
                               Channel channel) const {
  auto channels = channels_;
  channels.at(d).at(a) = std::move(channel);
  return GameSpec(defender_, attacker_, std::move(channels), prior_, measure_);
}

const Rational* Solution::FindCertificate(const std::string& name) const {
  for (const Certificate& c : certificates) {
    if (c.name == name) return &c.value;
  }
  return nullptr;
}

PayoffMatrix ComputePayoffMatrix(const GameSpec& spec) {
  PayoffMatrix u(spec.num_defender_actions(),
                 Vector(spec.num_attacker_actions()));
  for (std::size_t d = 0; d < u.size(); ++d) {
    for (std::size_t a = 0; a < u[d].size(); ++a) {
      u[d][a] = PosteriorVulnerability(spec.measure(), spec.prior(),
                                       spec.channel(d, a));
    }
  }
  return u;
}

std::string GameName(GameId game) {
  static const char* const kNames[] = {"I", "II", "III", "IV", "V", "VI"};
  return kNames[static_cast<int>(game) - 1];
}

std::optional<GameId> ParseGameName(const std::string& name) {
  for (int g = 1; g <= 6; ++g) {
    const auto id = static_cast<GameId>(g);
    if (GameName(id) == name || std::to_string(g) == name) return id;
  }
  return std::nullopt;
}

Rational VisiblePayoff(const PayoffMatrix& payoffs, const Vector& delta,
                       const Vector& alpha) {
  Rational total;
  for (std::size_t d = 0; d < payoffs.size(); ++d) {
    if (delta[d].IsZero()) continue;
    total += delta[d] * Dot(payoffs[d], alpha);
  }
  return total;
}

Channel HiddenDefenderChannel(const GameSpec& spec, const Vector& delta,
                              std::size_t attacker_action) {
  std::vector<Channel> members;
  for (std::size_t d = 0; d < spec.num_defender_actions(); ++d) {
    members.push_back(spec.channel(d, attacker_action));
  }
  return HiddenChoice(ChannelFamily(spec.defender_actions(), std::move(members)),
                      Mix::Create(spec.defender_actions(), delta));
}

Rational HiddenPayoff(const GameSpec& spec, const Vector& delta,
                      std::size_t attacker_action) {
  return PosteriorVulnerability(
      spec.measure(), spec.prior(),
      HiddenDefenderChannel(spec, delta, attacker_action));
}

Solution SolveGameI(const GameSpec& spec) {
  const PayoffMatrix u = ComputePayoffMatrix(spec);
  const std::size_t nd = spec.num_defender_actions();
  const std::size_t na = spec.num_attacker_actions();

  // Defender: min v  s.t.  sum_d delta_d u(d, a) <= v for every a.
  LinearProgram primal;
  primal.objective.assign(nd + 1, Rational(0));
  primal.objective[nd] = Rational(1);
  primal.bounds.assign(nd + 1, VariableBounds::NonNegative());
  primal.bounds[nd] = VariableBounds::Free();
  Vector sum_row(nd + 1, Rational(1));
  sum_row[nd] = Rational(0);
  primal.AddConstraint(sum_row, Relation::kEqual, Rational(1));
  for (std::size_t a = 0; a < na; ++a) {
    Vector row(nd + 1);
    for (std::size_t d = 0; d < nd; ++d) row[d] = -u[d][a];
    row[nd] = Rational(1);
    primal.AddConstraint(std::move(row), Relation::kGreaterEqual, Rational(0));
  }

  // Attacker: max w  s.t.  sum_a alpha_a u(d, a) >= w for every d.
  LinearProgram dual;
  dual.sense = Sense::kMaximize;
  dual.objective.assign(na + 1, Rational(0));
  dual.objective[na] = Rational(1);
  dual.bounds.assign(na + 1, VariableBounds::NonNegative());
  dual.bounds[na] = VariableBounds::Free();
  Vector dual_sum(na + 1, Rational(1));
  dual_sum[na] = Rational(0);
  dual.AddConstraint(dual_sum, Relation::kEqual, Rational(1));
  for (std::size_t d = 0; d < nd; ++d) {
    Vector row(na + 1);
    for (std::size_t a = 0; a < na; ++a) row[a] = u[d][a];
    row[na] = Rational(-1);
    dual.AddConstraint(std::move(row), Relation::kGreaterEqual, Rational(0));
  }

  const LpOutcome p = SolveLp(primal);
  const LpOutcome q = SolveLp(dual);
  if (!p.optimal() || !q.optimal()) ThrowInternal("matrix game LP not optimal");
  if (p.value != q.value) {
    ThrowInternal("matrix game duality gap: " + p.value.ToString() + " vs " +
                  q.value.ToString());
  }
  const Vector delta(p.point.begin(), p.point.begin() + nd);
  const Vector alpha(q.point.begin(), q.point.begin() + na);
  for (std::size_t a = 0; a < na; ++a) {
    if (VisiblePayoff(u, delta, Unit(na, a)) > p.value) {
      ThrowInternal("Game I saddle check failed for attacker action " +
                    spec.attacker_actions()[a]);
    }
  }
  for (std::size_t d = 0; d < nd; ++d) {
    if (VisiblePayoff(u, Unit(nd, d), alpha) < p.value) {
      ThrowInternal("Game I saddle check failed for defender action " +
                    spec.defender_actions()[d]);
    }
  }

  Solution s;
  s.game = GameId::kI;
  s.value = p.value;
  s.defender = MixedDefender{Mix::Create(spec.defender_actions(), delta)};
  s.attacker = MixedAttacker{Mix::Create(spec.attacker_actions(), alpha)};
  s.certificates.push_back(Cert("primal_value", p.value));
  s.certificates.push_back(Cert("dual_value", q.value));
  return s;
}

Solution SolveGameII(const GameSpec& spec) {
  const PayoffMatrix u = ComputePayoffMatrix(spec);
  std::vector<std::size_t> response(spec.num_defender_actions());
  std::size_t best_d = 0;
  Solution s;
  s.game = GameId::kII;
  for (std::size_t d = 0; d < u.size(); ++d) {
    std::size_t best_a = 0;
    for (std::size_t a = 1; a < u[d].size(); ++a) {
      if (u[d][a] > u[d][best_a]) best_a = a;
    }
    response[d] = best_a;
    s.certificates.push_back(
        Cert("max_a u(" + spec.defender_actions()[d] + ",a)", u[d][best_a]));
    if (u[d][best_a] < u[best_d][response[best_d]]) best_d = d;
  }
  s.value = u[best_d][response[best_d]];
  s.defender = PureDefender{best_d};
  s.attacker = AttackerFunction{response};
  return s;
}

Solution SolveGameIII(const GameSpec& spec) {
  const PayoffMatrix u = ComputePayoffMatrix(spec);
  std::vector<std::size_t> response(spec.num_attacker_actions());
  std::size_t best_a = 0;
  Solution s;
  s.game = GameId::kIII;
  for (std::size_t a = 0; a < response.size(); ++a) {
    std::size_t best_d = 0;
    for (std::size_t d = 1; d < u.size(); ++d) {
      if (u[d][a] < u[best_d][a]) best_d = d;
    }
    response[a] = best_d;
    s.certificates.push_back(
        Cert("min_d u(d," + spec.attacker_actions()[a] + ")", u[best_d][a]));
    if (u[best_d][a] > u[response[best_a]][best_a]) best_a = a;
  }
  s.value = u[response[best_a]][best_a];
  s.defender = DefenderFunction{response};
  s.attacker = PureAttacker{best_a};
  return s;
}

Solution SolveGameIV(const GameSpec& spec, const SolverOptions& options) {
  std::vector<std::size_t> all(spec.num_attacker_actions());
  for (std::size_t a = 0; a < all.size(); ++a) all[a] = a;
  const EpigraphSolution epigraph = SolveHiddenEpigraph(spec, all);
  const ExtendedGameSolution extended = SolveExtendedGame(spec, options);
  if (extended.value != epigraph.value) {
    ThrowInternal("Game IV value mismatch: epigraph LP " +
                  epigraph.value.ToString() + ", extended game " +
                  extended.value.ToString());
  }
  Rational worst;
  for (std::size_t a = 0; a < all.size(); ++a) {
    Rational v = HiddenPayoff(spec, epigraph.delta, a);
    if (a == 0 || v > worst) worst = std::move(v);
  }
  if (worst != epigraph.value) {
    ThrowInternal("Game IV defender mix does not attain the LP value");
  }

  Solution s;
  s.game = GameId::kIV;
  s.value = epigraph.value;
  s.defender = MixedDefender{Mix::Create(spec.defender_actions(), epigraph.delta)};
  s.attacker = MixedAttacker{
      Mix::Create(spec.attacker_actions(), extended.attacker_marginal)};
  s.certificates.push_back(Cert("epigraph_value", epigraph.value));
  s.certificates.push_back(Cert("extended_game_value", extended.value));
  s.certificates.push_back(Cert("max_a hidden payoff at delta*", worst));
  s.certificates.push_back(Cert(
      "extended_game_columns",
      Rational(static_cast<std::int64_t>(extended.columns))));
  return s;
}

Solution SolveGameV(const GameSpec& spec, const SolverOptions& options) {
  Solution s = SolveGameIV(spec, options);
  s.game = GameId::kV;
  return s;
}

Solution SolveGameVI(const GameSpec& spec) {
  Solution s;
  s.game = GameId::kVI;
  std::size_t best_a = 0;
  std::vector<EpigraphSolution> per_action;
  for (std::size_t a = 0; a < spec.num_attacker_actions(); ++a) {
    per_action.push_back(SolveHiddenEpigraph(spec, {a}));
    s.defender_responses.push_back(
        Mix::Create(spec.defender_actions(), per_action.back().delta));
    s.certificates.push_back(Cert("min_delta V(" + spec.attacker_actions()[a] + ")",
                                  per_action.back().value));
    if (per_action[a].value > per_action[best_a].value) best_a = a;
  }
  s.value = per_action[best_a].value;
  s.defender = MixedDefender{s.defender_responses[best_a]};
  s.attacker = PureAttacker{best_a};
  return s;
}

Solution SolveGame(const GameSpec& spec, GameId game,
                   const SolverOptions& options) {
  switch (game) {
    case GameId::kI:
      return SolveGameI(spec);
    case GameId::kII:
      return SolveGameII(spec);
    case GameId::kIII:
      return SolveGameIII(spec);
    case GameId::kIV:
      return SolveGameIV(spec, options);
    case GameId::kV:
      return SolveGameV(spec, options);
    case GameId::kVI:
      return SolveGameVI(spec);
  }
  ThrowInvalid("unknown game");
}

std::optional<std::pair<Rational, Rational>> ClosedForm2x2(
    const PayoffMatrix& u) {
  if (u.size() != 2 || u[0].size() != 2 || u[1].size() != 2) {
    ThrowInvalid("closed form needs a 2x2 payoff matrix");
  }
  const Rational den = u[0][0] - u[0][1] - u[1][0] + u[1][1];
  if (den.IsZero()) return std::nullopt;
  Rational delta = (u[1][1] - u[1][0]) / den;
  Rational alpha = (u[1][1] - u[0][1]) / den;
  auto in_unit = [](const Rational& r) {
    return r.Sign() >= 0 && r <= Rational(1);
  };
  if (!in_unit(delta) || !in_unit(alpha)) return std::nullopt;
  return std::make_pair(std::move(delta), std::move(alpha));
}

HierarchyReport VerifyHierarchy(const GameSpec& spec,
                                const SolverOptions& options) {
  HierarchyReport report;
  for (int g = 1; g <= 6; ++g) {
    report.solutions[g - 1] = SolveGame(spec, static_cast<GameId>(g), options);
    report.values[g - 1] = report.solutions[g - 1].value;
  }
  auto check_ge = [&](GameId hi, GameId lo) {
    if (report.value(hi) < report.value(lo)) {
      report.violations.push_back(
          GameName(hi) + " >= " + GameName(lo) + " violated: " +
          report.value(hi).ToString() + " < " + report.value(lo).ToString());
    }
  };
  check_ge(GameId::kII, GameId::kI);
  check_ge(GameId::kI, GameId::kIII);
  check_ge(GameId::kIII, GameId::kVI);
  check_ge(GameId::kI, GameId::kIV);
  check_ge(GameId::kIV, GameId::kV);
  check_ge(GameId::kV, GameId::kIV);
  check_ge(GameId::kV, GameId::kVI);
  report.iii_above_iv = report.value(GameId::kIII) > report.value(GameId::kIV);
  return report;
}

}  // namespace leakgame
