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

#include "leakgame/spec_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "leakgame/error.hpp"

namespace leakgame {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void FieldError(const std::string& path, const std::string& what) {
  ThrowInvalid("spec field '" + path + "': " + what);
}

const json& Require(const json& object, const std::string& key,
                    const std::string& prefix = "") {
  const auto it = object.find(key);
  if (it == object.end()) FieldError(prefix + key, "missing");
  return *it;
}

Rational ReadRational(const json& value, const std::string& path) {
  std::string text;
  if (value.is_string()) {
    text = value.get<std::string>();
  } else if (value.is_number()) {
    text = value.dump();
  } else {
    FieldError(path, "expected a rational string");
  }
  try {
    return Rational::Parse(text);
  } catch (const Error& e) {
    FieldError(path, e.what());
  }
}

std::vector<Rational> ReadVector(const json& value, const std::string& path) {
  if (!value.is_array()) FieldError(path, "expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(ReadRational(value[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Matrix ReadMatrix(const json& value, const std::string& path) {
  if (!value.is_array()) FieldError(path, "expected an array of rows");
  Matrix out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(ReadVector(value[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::string> ReadStrings(const json& value, const std::string& path,
                                     bool forbid_pipe) {
  if (!value.is_array() || value.empty()) {
    FieldError(path, "expected a non-empty array of strings");
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string item = path + "[" + std::to_string(i) + "]";
    if (!value[i].is_string()) FieldError(item, "expected a string");
    out.push_back(value[i].get<std::string>());
    if (forbid_pipe && out.back().find('|') != std::string::npos) {
      FieldError(item, "labels may not contain '|'");
    }
  }
  if (std::set<std::string>(out.begin(), out.end()).size() != out.size()) {
    FieldError(path, "labels are not unique");
  }
  return out;
}

Label ReadLabel(const json& value, const std::string& path) {
  if (value.is_string()) return Label(value.get<std::string>());
  if (value.is_array() && value.size() == 2) {
    return Label::Pair(ReadLabel(value[0], path + "[0]"),
                       ReadLabel(value[1], path + "[1]"));
  }
  FieldError(path, "expected a string or a [label, tag] pair");
}

json WriteLabel(const Label& label) {
  switch (label.kind()) {
    case Label::Kind::kAtom:
      return label.atom();
    case Label::Kind::kPair:
      return json::array({WriteLabel(label.first()), WriteLabel(label.second())});
    case Label::Kind::kFresh:
      break;
  }
  ThrowInvalid("label " + label.ToString() + " has no document form");
}

json WriteVector(const std::vector<Rational>& values) {
  json out = json::array();
  for (const Rational& v : values) out.push_back(v.ToString());
  return out;
}

json WriteMatrix(const Matrix& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(WriteVector(row));
  return out;
}

GameSpec BuildSpec(const json& doc) {
  if (!doc.is_object()) FieldError("$", "expected a JSON object");
  static const std::set<std::string> kKeys = {
      "secrets",          "outputs",  "prior",  "defender_actions",
      "attacker_actions", "channels", "measure"};
  for (const auto& item : doc.items()) {
    if (!kKeys.count(item.key())) FieldError(item.key(), "unknown field");
  }

  const auto secrets = ReadStrings(Require(doc, "secrets"), "secrets", false);
  const json& outputs_json = Require(doc, "outputs");
  if (!outputs_json.is_array() || outputs_json.empty()) {
    FieldError("outputs", "expected a non-empty array");
  }
  std::vector<Label> outputs;
  for (std::size_t i = 0; i < outputs_json.size(); ++i) {
    outputs.push_back(
        ReadLabel(outputs_json[i], "outputs[" + std::to_string(i) + "]"));
  }

  std::vector<Rational> weights = ReadVector(Require(doc, "prior"), "prior");
  Prior prior;
  try {
    prior = Prior::Normalized(secrets, std::move(weights), Rational(1, 1000));
  } catch (const Error& e) {
    FieldError("prior", e.what());
  }

  const auto defender = ReadStrings(Require(doc, "defender_actions"),
                                    "defender_actions", true);
  const auto attacker = ReadStrings(Require(doc, "attacker_actions"),
                                    "attacker_actions", true);

  const json& channels_json = Require(doc, "channels");
  if (!channels_json.is_object()) FieldError("channels", "expected an object");
  std::set<std::string> expected_keys;
  std::vector<std::vector<Channel>> channels(defender.size());
  for (std::size_t d = 0; d < defender.size(); ++d) {
    for (std::size_t a = 0; a < attacker.size(); ++a) {
      const std::string key = defender[d] + "|" + attacker[a];
      const std::string path = "channels." + key;
      expected_keys.insert(key);
      const auto it = channels_json.find(key);
      if (it == channels_json.end()) FieldError(path, "missing");
      Matrix entries = ReadMatrix(*it, path);
      try {
        channels[d].push_back(
            ValidateChannel(secrets, outputs, std::move(entries)));
      } catch (const Error& e) {
        FieldError(path, e.what());
      }
    }
  }
  for (const auto& item : channels_json.items()) {
    if (!expected_keys.count(item.key())) {
      FieldError("channels." + item.key(), "not a defender|attacker pair");
    }
  }

  VulnerabilityMeasure measure = VulnerabilityMeasure::Bayes();
  if (const auto it = doc.find("measure"); it != doc.end()) {
    if (it->is_string()) {
      if (it->get<std::string>() != "bayes") {
        FieldError("measure", "expected \"bayes\" or a gain function");
      }
    } else if (it->is_object()) {
      const auto guesses =
          ReadStrings(Require(*it, "guesses", "measure."), "measure.guesses", false);
      Matrix gains = ReadMatrix(Require(*it, "gains", "measure."), "measure.gains");
      try {
        measure = VulnerabilityMeasure::Gain(
            GainFunction(guesses, secrets, std::move(gains)));
      } catch (const Error& e) {
        FieldError("measure.gains", e.what());
      }
    } else {
      FieldError("measure", "expected \"bayes\" or a gain function");
    }
  }
  return GameSpec(defender, attacker, std::move(channels), std::move(prior),
                  std::move(measure));
}

}  // namespace

GameSpec ParseGameSpec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    ThrowInvalid(std::string("malformed JSON: ") + e.what());
  }
  return BuildSpec(doc);
}

GameSpec LoadGameSpec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ThrowInvalid("cannot open spec file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return ParseGameSpec(text.str());
}

std::string SerializeGameSpec(const GameSpec& spec) {
  const Channel& head = spec.channel(0, 0);
  json doc;
  doc["secrets"] = head.inputs();
  json outputs = json::array();
  for (const Label& y : head.outputs()) outputs.push_back(WriteLabel(y));
  doc["outputs"] = outputs;
  doc["prior"] = WriteVector(spec.prior().probabilities());
  doc["defender_actions"] = spec.defender_actions();
  doc["attacker_actions"] = spec.attacker_actions();
  json channels = json::object();
  for (std::size_t d = 0; d < spec.num_defender_actions(); ++d) {
    for (std::size_t a = 0; a < spec.num_attacker_actions(); ++a) {
      channels[spec.defender_actions()[d] + "|" + spec.attacker_actions()[a]] =
          WriteMatrix(spec.channel(d, a).entries());
    }
  }
  doc["channels"] = channels;
  if (spec.measure().is_bayes()) {
    doc["measure"] = "bayes";
  } else {
    doc["measure"] = {{"guesses", spec.measure().gain().guesses()},
                      {"gains", WriteMatrix(spec.measure().gain().gains())}};
  }
  return doc.dump(2) + "\n";
}

std::pair<std::size_t, std::size_t> ParseChannelRef(const GameSpec& spec,
                                                    const std::string& ref) {
  const auto bar = ref.find('|');
  if (bar == std::string::npos) {
    ThrowInvalid("channel reference '" + ref + "' is not of the form d|a");
  }
  const std::string d = ref.substr(0, bar);
  const std::string a = ref.substr(bar + 1);
  const auto& ds = spec.defender_actions();
  const auto& as = spec.attacker_actions();
  const auto di = std::find(ds.begin(), ds.end(), d);
  const auto ai = std::find(as.begin(), as.end(), a);
  if (di == ds.end() || ai == as.end()) {
    ThrowInvalid("unknown channel reference '" + ref + "'");
  }
  return {static_cast<std::size_t>(di - ds.begin()),
          static_cast<std::size_t>(ai - as.begin())};
}

}  // namespace leakgame
