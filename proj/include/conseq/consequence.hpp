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
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "conseq/language.hpp"
#include "conseq/logic_system.hpp"

namespace conseq {

// Exhaustive checks quantify over P(L); |L| beyond the bound is refused.
inline constexpr std::size_t kDefaultExhaustiveBound = 6;
inline constexpr std::size_t kMaxExhaustiveBound = 20;

namespace detail {
class OperatorNode;
}

class OperatorFamily;

/// A map on subsets of one language. Most constructors yield consequence
/// operators; `cup_join` and `bounded_steps` deliberately need not.
class ConsequenceOperator {
 public:
  static ConsequenceOperator identity(LanguagePtr lang);
  static ConsequenceOperator unit(LanguagePtr lang);
  // Total table over P(lang); lang explicit.
  static ConsequenceOperator table_backed(LanguagePtr lang,
                                          const std::map<SubsetRepr, SubsetRepr>& table);
  static ConsequenceOperator tabulate(LanguagePtr lang,
                                      const std::function<SubsetRepr(const SubsetRepr&)>& map,
                                      std::size_t bound = kDefaultExhaustiveBound);
  static ConsequenceOperator rule_backed(RuleSystem system,
                                         std::optional<SubsetRepr> pool = std::nullopt);
  // X |-> everything deducible from X in at most `steps` steps.
  static ConsequenceOperator bounded_steps(RuleSystem system, std::size_t steps);
  // A -> A u X when A meets Y, else A.
  static ConsequenceOperator cpair(SubsetRepr x, SubsetRepr y);
  // A -> A u X when Y is a subset of A, else A.
  static ConsequenceOperator cprime(SubsetRepr x, SubsetRepr y);
  static ConsequenceOperator meet(std::vector<ConsequenceOperator> ops);
  static ConsequenceOperator meet_family(std::shared_ptr<const OperatorFamily> family);
  static ConsequenceOperator sup_w(const std::vector<ConsequenceOperator>& ops, LanguagePtr lang,
                                   std::size_t bound = kDefaultExhaustiveBound);
  static ConsequenceOperator from_closure_family(const std::vector<SubsetRepr>& family,
                                                 LanguagePtr lang);
  static ConsequenceOperator cup_join(std::vector<ConsequenceOperator> ops);

  SubsetRepr apply(const SubsetRepr& a) const;
  SubsetRepr operator()(const SubsetRepr& a) const { return apply(a); }

  const LanguagePtr& language() const;
  std::string describe() const;

 private:
  explicit ConsequenceOperator(std::shared_ptr<const detail::OperatorNode> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const detail::OperatorNode> node_;
};

inline SubsetRepr apply(const ConsequenceOperator& op, const SubsetRepr& a) {
  return op.apply(a);
}

/// A denumerable family of operators whose infimum is answered by a finite
/// argument rather than by intersecting members.
class OperatorFamily {
 public:
  virtual ~OperatorFamily() = default;

  virtual LanguagePtr language() const = 0;
  virtual std::string describe() const = 0;
  // The exact value of (meet of all members)(A).
  virtual SubsetRepr infimum_apply(const SubsetRepr& a) const = 0;

  // Members are indexed from 1 and memoized.
  ConsequenceOperator member(std::size_t n) const;

 protected:
  virtual ConsequenceOperator make_member(std::size_t n) const = 0;

 private:
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, ConsequenceOperator> cache_;
};

/// The family { C'(X, B_n) : n >= 1 } with B_n = {f1, ..., fn} over an
/// enumerated language f0, f1, ... Every B_n lies inside L - {f0}, so the
/// infimum adjoins X to A exactly when L - {f0} is a subset of A.
class CPrimeChainFamily final : public OperatorFamily {
 public:
  CPrimeChainFamily(LanguagePtr lang, SubsetRepr x);

  LanguagePtr language() const override { return lang_; }
  std::string describe() const override;
  SubsetRepr infimum_apply(const SubsetRepr& a) const override;

  SubsetRepr chain_member(std::size_t n) const;  // B_n
  SubsetRepr chain_union() const;                // L - {f0}

 protected:
  ConsequenceOperator make_member(std::size_t n) const override;

 private:
  LanguagePtr lang_;
  SubsetRepr x_;
};

// Intersection of members 1..count applied to A.
SubsetRepr prefix_meet_apply(const OperatorFamily& family, const SubsetRepr& a,
                             std::size_t count);

// ----------------------------------------------------------------- axioms

struct Counterexample {
  std::string axiom;
  std::vector<SubsetRepr> inputs;
  std::string detail;
};

struct AxiomReport {
  bool extensive = true;
  bool monotone = true;
  bool idempotent = true;
  bool finite_character = true;
  // The first failure found, in the order the flags are listed.
  std::optional<Counterexample> counterexample;

  bool consequence_operator() const { return extensive && monotone && idempotent; }
  bool finite_consequence_operator() const { return consequence_operator() && finite_character; }
  std::string to_string() const;
};

AxiomReport check_axioms(const ConsequenceOperator& op, const LanguagePtr& lang,
                         std::size_t bound = kDefaultExhaustiveBound);

// Random subsets instead of all of P(L); a clean report is evidence only.
AxiomReport check_axioms_sampled(const ConsequenceOperator& op, const LanguagePtr& lang,
                                 std::size_t samples, std::uint64_t seed);

// ---------------------------------------------------------------- lattice

ConsequenceOperator meet(std::vector<ConsequenceOperator> ops);
ConsequenceOperator sup_w(const std::vector<ConsequenceOperator>& ops, const LanguagePtr& lang,
                          std::size_t bound = kDefaultExhaustiveBound);
ConsequenceOperator cup_join(const ConsequenceOperator& a, const ConsequenceOperator& b);
ConsequenceOperator from_closure_family(const std::vector<SubsetRepr>& family,
                                        const LanguagePtr& lang);

bool leq(const ConsequenceOperator& a, const ConsequenceOperator& b, const LanguagePtr& lang,
         std::size_t bound = kDefaultExhaustiveBound);
bool equal_ops(const ConsequenceOperator& a, const ConsequenceOperator& b,
               const LanguagePtr& lang, std::size_t bound = kDefaultExhaustiveBound);

// First subset where the two operators differ, if any.
std::optional<SubsetRepr> first_difference(const ConsequenceOperator& a,
                                           const ConsequenceOperator& b,
                                           const LanguagePtr& lang,
                                           std::size_t bound = kDefaultExhaustiveBound);

// ----------------------------------------------------- generated systems

/// Unary(C(empty)) plus, for each non-empty F (elements in language order),
/// tuples (x_1..x_n, x) for x in C(F). Relations are grouped by |F| as
/// "Rn". Refused unless op is extensive, monotone and idempotent.
RuleSystem canonical_system(const ConsequenceOperator& op, const LanguagePtr& lang,
                            std::size_t bound = kDefaultExhaustiveBound);

// Systems generating C(X,Y) and C'(X,Y), Y finite.
RuleSystem cpair_system(const SubsetRepr& x, const SubsetRepr& y);
RuleSystem cprime_system(const SubsetRepr& x, const SubsetRepr& y);

// Every subset of an explicit language, in bitmask order over declaration
// order.
std::vector<SubsetRepr> power_set(const LanguagePtr& lang,
                                  std::size_t bound = kDefaultExhaustiveBound);

namespace detail {

// Bit i of a mask is the i-th element of an explicit language.
class PowerSetIndex {
 public:
  PowerSetIndex(LanguagePtr lang, std::size_t bound);

  std::size_t size() const noexcept { return n_; }
  std::uint32_t count() const noexcept { return std::uint32_t{1} << n_; }
  std::uint32_t full() const noexcept { return count() - 1; }
  std::uint32_t mask(const SubsetRepr& s) const;
  SubsetRepr subset(std::uint32_t mask) const;
  // table[mask] = mask of op(subset(mask)).
  std::vector<std::uint32_t> tabulate(const ConsequenceOperator& op) const;

 private:
  LanguagePtr lang_;
  std::size_t n_;
};

}  // namespace detail

}  // namespace conseq
