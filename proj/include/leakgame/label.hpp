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

#ifndef LEAKGAME_LABEL_HPP_
#define LEAKGAME_LABEL_HPP_

#include <compare>
#include <memory>
#include <string>
#include <utility>

namespace leakgame {

// Output label of a channel. Either an atom ("y0"), a tagged pair (y, i)
// produced by visible choice, or a fresh label minted by zero-column
// extension. Labels are immutable values with a total order.
class Label {
 public:
  enum class Kind { kAtom, kPair, kFresh };

  Label() : Label(std::string()) {}
  Label(std::string atom);  // NOLINT(google-explicit-constructor)
  Label(const char* atom) : Label(std::string(atom)) {}  // NOLINT
  static Label Pair(Label first, Label second);
  static Label Fresh(int index);

  Kind kind() const { return kind_; }
  const std::string& atom() const { return atom_; }  // kAtom only
  const Label& first() const { return pair_->first; }   // kPair only
  const Label& second() const { return pair_->second; } // kPair only
  int fresh_index() const { return fresh_; }            // kFresh only

  // "y", "(F,1)", "(y,(a,b))", "#0".
  std::string ToString() const;

  friend bool operator==(const Label& a, const Label& b) {
    return (a <=> b) == 0;
  }
  friend std::strong_ordering operator<=>(const Label& a, const Label& b);

 private:
  Kind kind_ = Kind::kAtom;
  std::string atom_;
  std::shared_ptr<const std::pair<Label, Label>> pair_;
  int fresh_ = 0;
};

}  // namespace leakgame

#endif  // LEAKGAME_LABEL_HPP_
