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

#include <string>
#include <string_view>

#include "conseq/logic_system.hpp"

namespace conseq {

// Line-oriented text form of an extensional rule system:
//
//   language: a b c d          (or: language: enumerated f)
//   axioms A: a b
//   rule R: a => c
//   rule S: a b c => d
//
// '#' starts a comment. Lines sharing an id accumulate into one relation.
RuleSystem parse_system(std::string_view text, std::string name = "system");
RuleSystem load_system(const std::string& path);

// One line per axiom relation and per tuple, relations in order.
std::string serialize_system(const RuleSystem& system);
void save_system(const RuleSystem& system, const std::string& path);

}  // namespace conseq
