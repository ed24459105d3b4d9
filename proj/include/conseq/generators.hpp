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
#include <cstdint>
#include <random>
#include <vector>

#include "conseq/consequence.hpp"
#include "conseq/language.hpp"
#include "conseq/logic_system.hpp"

namespace conseq::gen {

// Draws use rng() % n only, so sequences agree across standard libraries.
using Rng = std::mt19937_64;

std::size_t below(Rng& rng, std::size_t n);
bool coin(Rng& rng);

// Elements "a", "b", ... (n <= 26).
LanguagePtr letters(std::size_t n);

SubsetRepr random_subset(Rng& rng, const LanguagePtr& lang);

struct SystemShape {
  std::size_t max_relations = 3;
  std::size_t max_tuples = 4;
  std::size_t max_arity = 3;
};

// Unary and tuple relations only; ids R1, R2, ...
RuleSystem random_system(Rng& rng, const LanguagePtr& lang, const SystemShape& shape = {});

// A consequence operator induced by a random closure family (plus L).
ConsequenceOperator random_closure_operator(Rng& rng, const LanguagePtr& lang);

// Alternates between rule-backed and closure-family operators.
ConsequenceOperator random_operator(Rng& rng, const LanguagePtr& lang);

}  // namespace conseq::gen
