// Copyright 2026 The conseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conseq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An element, subset or language outside the ambient domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A call whose preconditions do not hold (bad arguments, bounds exceeded).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. `location` is a 1-based line for system files and a
// 0-based character offset for formulas.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t location)
      : Error(what), location_(location) {}
  std::size_t location() const noexcept { return location_; }

 private:
  std::size_t location_;
};

}  // namespace conseq
