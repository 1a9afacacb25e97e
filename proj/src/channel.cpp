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

#include "leakgame/channel.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "leakgame/error.hpp"
#include "leakgame/lp.hpp"

namespace leakgame {
namespace {

void RequireCompatible(const Channel& a, const Channel& b) {
  if (!a.CompatibleWith(b)) {
    ThrowInvalid("channels are not compatible: input spaces differ");
  }
}

// Is column `column` of `target` a non-negative combination of the columns
// of `basis`?
bool InCone(const Channel& basis, const Channel& target, std::size_t column) {
  const std::size_t n = basis.num_outputs();
  LinearProgram lp;
  lp.objective.assign(n, Rational(0));
  lp.bounds.assign(n, VariableBounds::NonNegative());
  for (std::size_t x = 0; x < basis.num_inputs(); ++x) {
    std::vector<Rational> row(n);
    for (std::size_t y = 0; y < n; ++y) row[y] = basis(x, y);
    lp.AddConstraint(std::move(row), Relation::kEqual, target(x, column));
  }
  return SolveLp(lp).optimal();
}

// Column sums and normalized directions of the non-zero columns.
struct ColumnClasses {
  std::vector<Rational> mass;
  std::vector<int> cls;  // -1 for zero columns
  std::map<std::vector<Rational>, int> index;
  std::vector<Rational> class_mass;
};

ColumnClasses Classify(const Channel& c) {
  ColumnClasses out;
  for (std::size_t y = 0; y < c.num_outputs(); ++y) {
    Rational m;
    for (std::size_t x = 0; x < c.num_inputs(); ++x) m += c(x, y);
    out.mass.push_back(m);
    if (m.IsZero()) {
      out.cls.push_back(-1);
      continue;
    }
    std::vector<Rational> dir(c.num_inputs());
    for (std::size_t x = 0; x < dir.size(); ++x) dir[x] = c(x, y) / m;
    const auto [it, added] =
        out.index.emplace(std::move(dir), static_cast<int>(out.index.size()));
    if (added) out.class_mass.emplace_back();
    out.cls.push_back(it->second);
    out.class_mass[it->second] += m;
  }
  return out;
}

// When both channels carry the same mass on every column direction, `to` is
// obtained from `from` by pooling each direction and splitting it again in
// proportion to the target masses. Returns the witness only after checking
// from * R = to exactly.
std::optional<Matrix> DirectPostProcessing(const Channel& from,
                                           const Channel& to) {
  const ColumnClasses a = Classify(from);
  const ColumnClasses b = Classify(to);
  if (a.index.size() != b.index.size() || to.num_outputs() == 0) {
    return std::nullopt;
  }
  std::vector<int> b_of_a(a.index.size());
  for (const auto& [dir, k] : a.index) {
    const auto it = b.index.find(dir);
    if (it == b.index.end() || b.class_mass[it->second] != a.class_mass[k]) {
      return std::nullopt;
    }
    b_of_a[k] = it->second;
  }
  const std::size_t ny = from.num_outputs(), nz = to.num_outputs();
  Matrix r(ny, std::vector<Rational>(nz));
  for (std::size_t y = 0; y < ny; ++y) {
    if (a.cls[y] < 0) {
      r[y][0] = Rational(1);
      continue;
    }
    const int target = b_of_a[a.cls[y]];
    for (std::size_t z = 0; z < nz; ++z) {
      if (b.cls[z] == target) r[y][z] = b.mass[z] / a.class_mass[a.cls[y]];
    }
  }
  for (std::size_t x = 0; x < from.num_inputs(); ++x) {
    for (std::size_t z = 0; z < nz; ++z) {
      Rational v;
      for (std::size_t y = 0; y < ny; ++y) {
        if (!r[y][z].IsZero()) v += from(x, y) * r[y][z];
      }
      if (v != to(x, z)) return std::nullopt;
    }
  }
  return r;
}

}  // namespace

Channel ValidateChannel(std::vector<std::string> inputs,
                        std::vector<Label> outputs, Matrix entries) {
  if (inputs.empty()) ThrowInvalid("channel has no inputs");
  if (entries.size() != inputs.size()) {
    ThrowInvalid("channel has " + std::to_string(entries.size()) +
                 " rows for " + std::to_string(inputs.size()) + " inputs");
  }
  if (std::set<std::string>(inputs.begin(), inputs.end()).size() !=
      inputs.size()) {
    ThrowInvalid("channel input labels are not unique");
  }
  if (std::set<Label>(outputs.begin(), outputs.end()).size() !=
      outputs.size()) {
    ThrowInvalid("channel output labels are not unique");
  }
  for (std::size_t x = 0; x < entries.size(); ++x) {
    if (entries[x].size() != outputs.size()) {
      ThrowInvalid("channel row " + inputs[x] + " has " +
                   std::to_string(entries[x].size()) + " entries for " +
                   std::to_string(outputs.size()) + " outputs");
    }
    Rational total;
    for (std::size_t y = 0; y < outputs.size(); ++y) {
      if (entries[x][y].Sign() < 0) {
        ThrowInvalid("channel entry (" + inputs[x] + ", " +
                     outputs[y].ToString() + ") is negative");
      }
      total += entries[x][y];
    }
    if (total != Rational(1)) {
      ThrowInvalid("channel row " + inputs[x] + " sums to " +
                   total.ToString() + ", not 1");
    }
  }
  Channel c;
  c.inputs_ = std::move(inputs);
  c.outputs_ = std::move(outputs);
  c.entries_ = std::move(entries);
  return c;
}

Hyper PushPrior(const Prior& prior, const Channel& channel) {
  if (prior.labels() != channel.inputs()) {
    ThrowInvalid("prior is not indexed by the channel's inputs");
  }
  Hyper hyper;
  for (std::size_t y = 0; y < channel.num_outputs(); ++y) {
    std::vector<Rational> joint(channel.num_inputs());
    Rational outer;
    for (std::size_t x = 0; x < channel.num_inputs(); ++x) {
      joint[x] = prior[x] * channel(x, y);
      outer += joint[x];
    }
    if (outer.IsZero()) continue;
    for (Rational& j : joint) j /= outer;
    hyper.outputs.push_back(channel.outputs()[y]);
    hyper.outer.push_back(outer);
    hyper.posteriors.push_back(Prior::Create(prior.labels(), std::move(joint)));
  }
  return hyper;
}

Channel ZeroColumnExtension(const Channel& channel) {
  int fresh = 0;
  for (const Label& l : channel.outputs()) {
    if (l.kind() == Label::Kind::kFresh) fresh = std::max(fresh, l.fresh_index() + 1);
  }
  std::vector<Label> outputs = channel.outputs();
  outputs.push_back(Label::Fresh(fresh));
  Matrix entries = channel.entries();
  for (auto& row : entries) row.emplace_back(0);
  return ValidateChannel(channel.inputs(), std::move(outputs),
                         std::move(entries));
}

std::optional<Matrix> FindPostProcessing(const Channel& from,
                                         const Channel& to) {
  RequireCompatible(from, to);
  if (auto direct = DirectPostProcessing(from, to)) return direct;
  const std::size_t ny = from.num_outputs();
  const std::size_t nz = to.num_outputs();
  const std::size_t n = ny * nz;  // variable R(y, z) at y * nz + z
  LinearProgram lp;
  lp.objective.assign(n, Rational(0));
  lp.bounds.assign(n, VariableBounds::NonNegative());
  for (std::size_t x = 0; x < from.num_inputs(); ++x) {
    for (std::size_t z = 0; z < nz; ++z) {
      std::vector<Rational> row(n, Rational(0));
      for (std::size_t y = 0; y < ny; ++y) row[y * nz + z] = from(x, y);
      lp.AddConstraint(std::move(row), Relation::kEqual, to(x, z));
    }
  }
  for (std::size_t y = 0; y < ny; ++y) {
    std::vector<Rational> row(n, Rational(0));
    for (std::size_t z = 0; z < nz; ++z) row[y * nz + z] = Rational(1);
    lp.AddConstraint(std::move(row), Relation::kEqual, Rational(1));
  }
  const LpOutcome outcome = SolveLp(lp);
  if (!outcome.optimal()) return std::nullopt;
  Matrix r(ny, std::vector<Rational>(nz));
  for (std::size_t y = 0; y < ny; ++y) {
    for (std::size_t z = 0; z < nz; ++z) r[y][z] = outcome.point[y * nz + z];
  }
  return r;
}

EquivalenceReport CheckEquivalence(const Channel& first,
                                   const Channel& second) {
  RequireCompatible(first, second);
  EquivalenceReport report;
  // Cheap necessary condition first; it pinpoints a failing column.
  const Channel first0 = ZeroColumnExtension(first);
  const Channel second0 = ZeroColumnExtension(second);
  for (std::size_t z = 0; z < second.num_outputs(); ++z) {
    if (!InCone(first0, second, z)) {
      report.failing_column = "column " + second.outputs()[z].ToString() +
                              " of the second channel";
      return report;
    }
  }
  for (std::size_t y = 0; y < first.num_outputs(); ++y) {
    if (!InCone(second0, first, y)) {
      report.failing_column = "column " + first.outputs()[y].ToString() +
                              " of the first channel";
      return report;
    }
  }
  report.forward = FindPostProcessing(first, second);
  if (report.forward) report.backward = FindPostProcessing(second, first);
  report.equivalent = report.forward.has_value() && report.backward.has_value();
  return report;
}

bool ChannelsEquivalent(const Channel& first, const Channel& second) {
  return CheckEquivalence(first, second).equivalent;
}

}  // namespace leakgame
