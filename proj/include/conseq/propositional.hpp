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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conseq/language.hpp"
#include "conseq/logic_system.hpp"

namespace conseq::pd {

/// A propositional formula over atoms P0, P1, ... built with ~ and ->.
/// Immutable and cheap to copy.
class Wff {
 public:
  enum class Kind { Atom, Neg, Impl };

  static Wff atom(std::size_t index);
  static Wff neg(Wff operand);
  static Wff impl(Wff antecedent, Wff consequent);

  Kind kind() const noexcept;
  bool is_atom() const noexcept { return kind() == Kind::Atom; }
  bool is_neg() const noexcept { return kind() == Kind::Neg; }
  bool is_impl() const noexcept { return kind() == Kind::Impl; }

  std::size_t index() const;        // Atom
  const Wff& operand() const;       // Neg
  const Wff& antecedent() const;    // Impl
  const Wff& consequent() const;    // Impl

  // Canonical print, e.g. "(P1 -> ~P0)".
  const std::string& text() const noexcept;
  // Printed length.
  std::size_t size() const noexcept { return text().size(); }
  // The print without blanks; the element token used in rule systems.
  std::string token() const;

  friend bool operator==(const Wff& a, const Wff& b) { return a.text() == b.text(); }
  friend bool operator<(const Wff& a, const Wff& b) { return a.text() < b.text(); }

 private:
  struct Node;
  explicit Wff(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Shorter first, then by text.
struct ShorterFirst {
  bool operator()(const Wff& a, const Wff& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a.text() < b.text();
  }
};

// Grammar: P<digits> | ~A | (A -> B); blanks are ignored. The Unicode
// arrows and negation signs are accepted as well.
Wff parse(std::string_view text);
std::string print(const Wff& w);

Element to_element(const Wff& w);
Wff from_element(const Element& e);

// ------------------------------------------------------------- semantics

using Valuation = std::map<std::size_t, bool>;

std::vector<std::size_t> atoms(const Wff& w);
bool eval(const Wff& w, const Valuation& v);
bool is_tautology(const Wff& w);
// First falsifying valuation in counting order over the sorted atoms.
std::optional<Valuation> falsifying_valuation(const Wff& w);
std::string valuation_to_string(const Valuation& v);

Wff h_transform(const Wff& w);

// ---------------------------------------------------------------- schemata

// (~P0 -> ~Pn) -> (Pn -> P0)
Wff j_formula(std::size_t n);

bool is_r1(const Wff& w);  // X -> (Y -> X)
bool is_r2(const Wff& w);  // (X -> (Y -> Z)) -> ((X -> Y) -> (X -> Z))
bool is_r3(const Wff& w);  // (~X -> ~Y) -> (Y -> X)

enum class SchemaKind {
  R1,
  R2,
  R3,
  R3Restricted,   // R3Positive plus J_n
  R3Positive,     // R3 members whose h-transform is a tautology
  R1PrimeUnionJ,  // R1, R2, R3 members free of P0, plus J_m
  MP,
  MPRestricted,   // MP without ((Pi -> P0), Pi, P0) for i > 0, except i = n
};

struct SchemaSet {
  SchemaKind kind;
  std::size_t n = 0;  // the index for the parameterized kinds
};

std::string schema_name(const SchemaSet& s);

// Axiom kinds give 1-tuples (the instance itself); MP kinds give triples.
// Every coordinate lies in the pool. Output follows pool order.
std::vector<RuleTuple> instantiate_schema(const SchemaSet& s, const std::vector<Wff>& pool);

// ------------------------------------------------------------------ systems

struct PdVariant {
  enum class Kind { Standard, RestrictedMp, MissingAtom, Positive };
  Kind kind = Kind::Standard;
  std::size_t n = 0;

  static PdVariant standard() { return {Kind::Standard, 0}; }
  static PdVariant restricted_mp(std::size_t n) { return {Kind::RestrictedMp, n}; }
  static PdVariant missing_atom(std::size_t m) { return {Kind::MissingAtom, m}; }
  static PdVariant positive(std::size_t n) { return {Kind::Positive, n}; }

  std::string describe() const;
};

// "standard", "restricted_mp", "missing_atom" or "positive".
PdVariant parse_variant(std::string_view name, std::size_t n);

// The variant's extra formulas (J_n) that a pool should contain.
std::vector<Wff> variant_seeds(const PdVariant& v);

inline constexpr std::size_t kDefaultFormulaCap = 60;
inline constexpr std::size_t kDefaultPoolCap = 400;

struct FormulaPool {
  std::vector<Wff> formulas;  // shorter first
  bool truncated = false;     // the pool cap stopped growth

  bool contains(const Wff& w) const;
};

/// Subformulas of the inputs, then R1/R2/R3 instances over the pool (with
/// their subformulas) of printed length <= formula_cap, round by round,
/// until nothing new fits or the pool holds pool_cap formulas.
FormulaPool subformula_closure(const std::vector<Wff>& inputs,
                               std::size_t formula_cap = kDefaultFormulaCap,
                               std::size_t pool_cap = kDefaultPoolCap);

// Rule ids: standard R1 R2 R3 MP; restricted_mp R1 R2 R3 MP; missing_atom
// R1' R2' R3' J<m> MP; positive R1 R2 R3h J<n> MP. MP is a schema rule, so
// saturation needs the pool (SubsetRepr::full of the system's language).
RuleSystem pd_system(const PdVariant& variant, const std::vector<Wff>& pool);

struct SearchOptions {
  std::size_t formula_cap = kDefaultFormulaCap;
  std::size_t pool_cap = kDefaultPoolCap;
  std::optional<std::size_t> max_steps;  // saturation rounds
};

struct SearchResult {
  std::optional<Derivation> derivation;
  FormulaPool pool;
  std::size_t closure_size = 0;
};

// Saturates the variant over the capped pool of hyps, goal and seeds.
SearchResult search(const PdVariant& variant, const std::vector<Wff>& hypotheses,
                    const Wff& goal, const SearchOptions& options = {});

struct CertificateResult {
  enum class Kind { Certified, BoundedEvidence, Derived, Refused };
  Kind kind = Kind::Refused;
  std::optional<Valuation> valuation;    // Certified
  std::optional<Derivation> derivation;  // Derived
  std::string detail;

  std::string to_string() const;
};

std::string kind_name(CertificateResult::Kind k);

/// Certified when restricted_mp's semantic argument applies (a valuation
/// satisfying the hypotheses and falsifying the goal), else bounded search.
CertificateResult certificate_non_derivable(const PdVariant& variant,
                                            const std::vector<Wff>& hypotheses,
                                            const Wff& goal,
                                            const SearchOptions& options = {});

}  // namespace conseq::pd
