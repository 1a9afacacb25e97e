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

#ifndef LEAKGAME_ERROR_HPP_
#define LEAKGAME_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace leakgame {

enum class ErrorKind {
  kInvalidArgument,  // malformed input, index mismatch, non-stochastic data
  kCapacity,         // enumeration budget exceeded
  kInternal,         // a checked order relation or certificate failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void ThrowInvalid(const std::string& what) {
  throw Error(ErrorKind::kInvalidArgument, what);
}

[[noreturn]] inline void ThrowInternal(const std::string& what) {
  throw Error(ErrorKind::kInternal, what);
}

}  // namespace leakgame

#endif  // LEAKGAME_ERROR_HPP_
