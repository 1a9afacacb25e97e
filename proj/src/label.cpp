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

#include "leakgame/label.hpp"

namespace leakgame {

Label::Label(std::string atom) : kind_(Kind::kAtom), atom_(std::move(atom)) {}

Label Label::Pair(Label first, Label second) {
  Label l;
  l.kind_ = Kind::kPair;
  l.pair_ = std::make_shared<const std::pair<Label, Label>>(std::move(first),
                                                            std::move(second));
  return l;
}

Label Label::Fresh(int index) {
  Label l;
  l.kind_ = Kind::kFresh;
  l.fresh_ = index;
  return l;
}

std::string Label::ToString() const {
  switch (kind_) {
    case Kind::kAtom:
      return atom_;
    case Kind::kPair:
      return "(" + pair_->first.ToString() + "," + pair_->second.ToString() +
             ")";
    case Kind::kFresh:
      return "#" + std::to_string(fresh_);
  }
  return atom_;
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  switch (a.kind_) {
    case Label::Kind::kAtom:
      return a.atom_ <=> b.atom_;
    case Label::Kind::kPair:
      if (auto c = a.pair_->first <=> b.pair_->first; c != 0) return c;
      return a.pair_->second <=> b.pair_->second;
    case Label::Kind::kFresh:
      return a.fresh_ <=> b.fresh_;
  }
  return std::strong_ordering::equal;
}

}  // namespace leakgame
