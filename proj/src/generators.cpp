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

#include "conseq/generators.hpp"

#include "conseq/error.hpp"

namespace conseq::gen {

std::size_t below(Rng& rng, std::size_t n) { return n == 0 ? 0 : rng() % n; }

bool coin(Rng& rng) { return rng() % 2 == 1; }

LanguagePtr letters(std::size_t n) {
  if (n < 1 || n > 26) throw UsageError("letters() takes 1..26 elements");
  std::vector<Element> elems;
  for (std::size_t i = 0; i < n; ++i) elems.emplace_back(std::string(1, char('a' + i)));
  return Language::explicit_set(std::move(elems));
}

SubsetRepr random_subset(Rng& rng, const LanguagePtr& lang) {
  std::vector<Element> out;
  for (const auto& e : lang->elements()) {
    if (coin(rng)) out.push_back(e);
  }
  return SubsetRepr::finite(lang, std::move(out));
}

RuleSystem random_system(Rng& rng, const LanguagePtr& lang, const SystemShape& shape) {
  const auto& elems = lang->elements();
  std::vector<Rule> rules;
  std::size_t count = below(rng, shape.max_relations + 1);
  for (std::size_t r = 0; r < count; ++r) {
    std::string id = "R" + std::to_string(r + 1);
    std::size_t arity = 1 + below(rng, shape.max_arity);
    std::size_t tuples = 1 + below(rng, shape.max_tuples);
    if (arity == 1) {
      UnaryRule u{id, {}};
      for (std::size_t t = 0; t < tuples; ++t) u.axioms.push_back(elems[below(rng, elems.size())]);
      rules.emplace_back(std::move(u));
    } else {
      TupleRule tr{id, arity, {}};
      for (std::size_t t = 0; t < tuples; ++t) {
        RuleTuple tuple;
        for (std::size_t k = 0; k < arity; ++k) tuple.push_back(elems[below(rng, elems.size())]);
        tr.tuples.push_back(std::move(tuple));
      }
      rules.emplace_back(std::move(tr));
    }
  }
  return RuleSystem("random", lang, std::move(rules));
}

ConsequenceOperator random_closure_operator(Rng& rng, const LanguagePtr& lang) {
  std::vector<SubsetRepr> family{SubsetRepr::full(lang)};
  std::size_t count = below(rng, 6);
  for (std::size_t i = 0; i < count; ++i) family.push_back(random_subset(rng, lang));
  return ConsequenceOperator::from_closure_family(family, lang);
}

ConsequenceOperator random_operator(Rng& rng, const LanguagePtr& lang) {
  if (coin(rng)) return ConsequenceOperator::rule_backed(random_system(rng, lang));
  return random_closure_operator(rng, lang);
}

}  // namespace conseq::gen
