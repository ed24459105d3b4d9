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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "conseq/language.hpp"

namespace conseq {

/// Premises followed by the conclusion.
using RuleTuple = std::vector<Element>;

/// A unary relation: its members may be inserted at any step.
struct UnaryRule {
  std::string id;
  std::vector<Element> axioms;  // declaration order, duplicates tolerated
};

/// An extensional relation of fixed arity >= 2.
struct TupleRule {
  std::string id;
  std::size_t arity = 2;
  std::vector<RuleTuple> tuples;  // declaration order, duplicates tolerated
};

/// An intensional relation, only ever evaluated against a finite pool.
/// `instantiate` must be deterministic and return (premise_count + 1)-tuples
/// drawn from the pool.
struct SchemaRule {
  std::string id;
  std::size_t premise_count = 1;
  std::function<std::vector<RuleTuple>(const SubsetRepr& pool)> instantiate;
};

using Rule = std::variant<UnaryRule, TupleRule, SchemaRule>;

const std::string& rule_id(const Rule& rule);

// Rule ids additionally exclude ':' so they survive the system file format.
bool is_valid_rule_id(std::string_view id) noexcept;

/// A logic-system: a finite sequence of relations over one language.
class RuleSystem {
 public:
  RuleSystem(std::string name, LanguagePtr language, std::vector<Rule> rules);

  const std::string& name() const noexcept { return name_; }
  const LanguagePtr& language() const noexcept { return language_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }

  const Rule* find(std::string_view id) const;
  bool has_schema() const noexcept;
  // Largest arity among extensional and schema relations (1 if only unary).
  std::size_t max_arity() const noexcept;

 private:
  std::string name_;
  LanguagePtr language_;
  std::vector<Rule> rules_;
};

// ------------------------------------------------------------ derivations

struct InsertStep {
  Element element;
  std::optional<std::string> axiom_rule;  // nullopt: inserted as a hypothesis
};

struct ApplyStep {
  std::string rule_id;
  std::vector<std::size_t> premise_steps;  // 1-based step numbers, tuple order
  Element conclusion;
};

using Step = std::variant<InsertStep, ApplyStep>;

const Element& step_element(const Step& step);

/// A numbered step sequence. Steps are numbered from 1.
class Derivation {
 public:
  Derivation() = default;
  explicit Derivation(std::vector<Step> steps) : steps_(std::move(steps)) {}

  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  const Element& conclusion() const;

  // One line per step: "3. a  [R 1,2]", "1. x1  [hyp]", "2. c  [axiom A]".
  std::string to_string() const;

 private:
  std::vector<Step> steps_;
};

struct DerivationCheck {
  bool valid = false;
  std::string diagnostic;
  explicit operator bool() const noexcept { return valid; }
};

DerivationCheck check_derivation(const RuleSystem& system, const SubsetRepr& hypotheses,
                                 const Derivation& derivation,
                                 const std::optional<SubsetRepr>& pool = std::nullopt);

// ------------------------------------------------------------- saturation

struct SaturationResult {
  SubsetRepr closure;
  std::map<Element, Derivation> witness;
};

struct SaturateOptions {
  std::optional<SubsetRepr> pool;
  // Derivation depth bound; hypotheses and axioms have depth 0.
  std::optional<std::size_t> max_depth;
};

/// Least fixed point of the system above `hypotheses`, with one witness
/// derivation per element. With a pool, every coordinate is confined to it.
SaturationResult saturate(const RuleSystem& system, const SubsetRepr& hypotheses,
                          const SaturateOptions& options = {});
SaturationResult saturate(const RuleSystem& system, const SubsetRepr& hypotheses,
                          const std::optional<SubsetRepr>& pool);

// ------------------------------------------------------ bounded deduction

// Exact search is breadth-first over derived-element sets; these bound it.
inline constexpr std::size_t kMaxExactUniverse = 64;
inline constexpr std::size_t kMaxExactStates = 4'000'000;

/// A shortest derivation of `goal` with at most `cap` steps, if one exists.
/// Insertions count as steps.
std::optional<Derivation> minimal_derivation(const RuleSystem& system,
                                             const SubsetRepr& hypotheses,
                                             const Element& goal, std::size_t cap);

std::optional<std::size_t> min_derivation_size(const RuleSystem& system,
                                               const SubsetRepr& hypotheses,
                                               const Element& goal, std::size_t cap);

/// Everything deducible in at most `steps` steps.
SubsetRepr bounded_consequences(const RuleSystem& system, const SubsetRepr& hypotheses,
                                std::size_t steps);

// ----------------------------------------------------- system constructions

/// Replaces tuple (x_1..x_n, x) by (x_p(0)..x_p(n-1), x). `permutation` is
/// 0-based over the premise positions.
RuleSystem permute_premises(const RuleSystem& system, std::string_view rule,
                            std::size_t tuple_index,
                            const std::vector<std::size_t>& permutation);

/// Concatenation; rule ids become "s<k>.<id>" for the k-th input system.
RuleSystem union_systems(const std::vector<RuleSystem>& systems);

/// Relations (compared extensionally) present in every system.
RuleSystem intersect_systems(const std::vector<RuleSystem>& systems);

/// Pairs relations by position and intersects their tuple sets.
RuleSystem intersect_rulewise(const RuleSystem& a, const RuleSystem& b);

// Same relation as a set: same kind, arity and tuple set.
bool extensionally_equal(const Rule& a, const Rule& b);

// Same rule sequence, ids and tuple order.
bool structurally_equal(const RuleSystem& a, const RuleSystem& b);

}  // namespace conseq
