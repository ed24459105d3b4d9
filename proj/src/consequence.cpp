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

#include "conseq/consequence.hpp"

#include <algorithm>
#include <random>

#include "conseq/error.hpp"

namespace conseq {

namespace detail {

class OperatorNode {
 public:
  explicit OperatorNode(LanguagePtr lang) : lang_(std::move(lang)) {}
  virtual ~OperatorNode() = default;

  SubsetRepr apply(const SubsetRepr& a) const {
    if (!same_language(a.language(), lang_)) {
      throw DomainError("subset is not over the operator's language");
    }
    return evaluate(a);
  }
  const LanguagePtr& language() const noexcept { return lang_; }
  virtual std::string describe() const = 0;

 protected:
  virtual SubsetRepr evaluate(const SubsetRepr& a) const = 0;

  void require_finite(const SubsetRepr& a, const char* what) const {
    if (!a.is_finite()) {
      throw UsageError(std::string(what) + " operators accept finite subsets only");
    }
  }

 private:
  LanguagePtr lang_;
};

PowerSetIndex::PowerSetIndex(LanguagePtr lang, std::size_t bound) : lang_(std::move(lang)) {
  if (!lang_->is_explicit()) {
    throw UsageError("exhaustive evaluation needs an explicit language");
  }
  n_ = lang_->size();
  if (bound > kMaxExhaustiveBound) {
    throw UsageError("exhaustive bound " + std::to_string(bound) + " exceeds the maximum " +
                     std::to_string(kMaxExhaustiveBound));
  }
  if (n_ > bound) {
    throw UsageError("language has " + std::to_string(n_) +
                     " elements, above the exhaustive bound " + std::to_string(bound) +
                     "; raise the bound or use sampled mode");
  }
}

std::uint32_t PowerSetIndex::mask(const SubsetRepr& s) const {
  if (!same_language(s.language(), lang_)) throw DomainError("subset language mismatch");
  if (!s.is_finite()) throw UsageError("cofinite subset over an explicit language");
  std::uint32_t m = 0;
  for (const auto& e : s.elements()) m |= std::uint32_t{1} << *lang_->index_of(e);
  return m;
}

SubsetRepr PowerSetIndex::subset(std::uint32_t mask) const {
  std::vector<Element> members;
  for (std::size_t i = 0; i < n_; ++i) {
    if (mask >> i & 1) members.push_back(lang_->elements()[i]);
  }
  return SubsetRepr::finite(lang_, std::move(members));
}

std::vector<std::uint32_t> PowerSetIndex::tabulate(const ConsequenceOperator& op) const {
  std::vector<std::uint32_t> table(count());
  for (std::uint32_t m = 0; m < count(); ++m) table[m] = mask(op.apply(subset(m)));
  return table;
}

}  // namespace detail

namespace {

using detail::OperatorNode;
using detail::PowerSetIndex;

bool is_submask(std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }

class IdentityNode final : public OperatorNode {
 public:
  using OperatorNode::OperatorNode;
  std::string describe() const override { return "I"; }

 protected:
  SubsetRepr evaluate(const SubsetRepr& a) const override { return a; }
};

class UnitNode final : public OperatorNode {
 public:
  using OperatorNode::OperatorNode;
  std::string describe() const override { return "U"; }

 protected:
  SubsetRepr evaluate(const SubsetRepr&) const override { return SubsetRepr::full(language()); }
};

class TableNode final : public OperatorNode {
 public:
  TableNode(LanguagePtr lang, std::vector<std::uint32_t> table, std::string name)
      : OperatorNode(lang), index_(lang, kMaxExhaustiveBound), table_(std::move(table)),
        name_(std::move(name)) {}
  std::string describe() const override { return name_; }

 protected:
  SubsetRepr evaluate(const SubsetRepr& a) const override {
    require_finite(a, "table-backed");
    return index_.subset(table_[index_.mask(a)]);
  }

 private:
  PowerSetIndex index_;
  std::vector<std::uint32_t> table_;
  std::string name_;
};

class RuleNode final : public OperatorNode {
 public:
  RuleNode(RuleSystem system, std::optional<SubsetRepr> pool)
      : OperatorNode(system.language()), system_(std::move(system)), pool_(std::move(pool)) {}
  std::string describe() const override { return "rules(" + system_.name() + ")"; }

 protected:
  SubsetRepr evaluate(const SubsetRepr& a) const override {
    require_finite(a, "rule-backed");
    return saturate(system_, a, pool_).closure;
  }

 private:
  RuleSystem system_;
  std::optional<SubsetRepr> pool_;
};

class BoundedNode final : public OperatorNode {
 public:
  BoundedNode(RuleSystem system, std::size_t steps)
      : OperatorNode(system.language()), system_(std::move(system)), steps_(steps) {}
  std::string describe() const override {
    return "bounded(" + system_.name() + ", " + std::to_string(steps_) + ")";
  }

 protected:
  SubsetRepr evaluate(const SubsetRepr& a) const override {
    require_finite(a, "bounded-step");
    return bounded_consequences(system_, a, steps_);
  }

 private:
  RuleSystem system_;
  std::size_t steps_;
};

class CPairNode final : public OperatorNode {
 public:
  CPairNode(SubsetRepr x, SubsetRepr y)
      : OperatorNode(x.language()), x_(std::move(x)), y_(std::move(y)) {}
  std::string describe() const override {
    return "C(" + x_.to_string() + "," + y_.to_string() + ")";
  }

 protected:
  SubsetRepr evaluate(const SubsetRepr& a) const override {
    return a.intersect(y_).empty() ? a : a.unite(x_);
  }

 private:
  SubsetRepr x_, y_;
};

class CPrimeNode final : public OperatorNode {
 public:
  CPrimeNode(SubsetRepr x, SubsetRepr y)
      : OperatorNode(x.language()), x_(std::move(x)), y_(std::move(y)) {}
  std::string describe() const override {
    return "C'(" + x_.to_string() + "," + y_.to_string() + ")";
  }

 protected:
  SubsetRepr evaluate(const SubsetRepr& a) const override {
    return y_.subset_of(a) ? a.unite(x_) : a;
  }

 private:
  SubsetRepr x_, y_;
};

class MeetNode final : public OperatorNode {
 public:
  explicit MeetNode(std::vector<ConsequenceOperator> ops)
      : OperatorNode(ops.front().language()), ops_(std::move(ops)) {}
  std::string describe() const override {
    std::string out = "meet(";
    for (std::size_t i = 0; i < ops_.size(); ++i) out += (i ? "," : "") + ops_[i].describe();
    return out + ")";
  }

 protected:
  SubsetRepr evaluate(const SubsetRepr& a) const override {
    SubsetRepr out = ops_.front().apply(a);
    for (std::size_t i = 1; i < ops_.size(); ++i) out = out.intersect(ops_[i].apply(a));
    return out;
  }

 private:
  std::vector<ConsequenceOperator> ops_;
};

class CupNode final : public OperatorNode {
 public:
  explicit CupNode(std::vector<ConsequenceOperator> ops)
      : OperatorNode(ops.front().language()), ops_(std::move(ops)) {}
  std::string describe() const override {
    std::string out = "cup(";
    for (std::size_t i = 0; i < ops_.size(); ++i) out += (i ? "," : "") + ops_[i].describe();
    return out + ")";
  }

 protected:
  SubsetRepr evaluate(const SubsetRepr& a) const override {
    SubsetRepr out = ops_.front().apply(a);
    for (std::size_t i = 1; i < ops_.size(); ++i) out = out.unite(ops_[i].apply(a));
    return out;
  }

 private:
  std::vector<ConsequenceOperator> ops_;
};

class FamilyNode final : public OperatorNode {
 public:
  explicit FamilyNode(std::shared_ptr<const OperatorFamily> family)
      : OperatorNode(family->language()), family_(std::move(family)) {}
  std::string describe() const override { return "inf(" + family_->describe() + ")"; }

 protected:
  SubsetRepr evaluate(const SubsetRepr& a) const override { return family_->infimum_apply(a); }

 private:
  std::shared_ptr<const OperatorFamily> family_;
};

class ClosureFamilyNode final : public OperatorNode {
 public:
  ClosureFamilyNode(LanguagePtr lang, std::vector<SubsetRepr> family)
      : OperatorNode(std::move(lang)), family_(std::move(family)) {}
  std::string describe() const override {
    return "closure-family(" + std::to_string(family_.size()) + ")";
  }

 protected:
  SubsetRepr evaluate(const SubsetRepr& a) const override {
    require_finite(a, "closure-family");
    SubsetRepr out = SubsetRepr::full(language());
    for (const auto& y : family_) {
      if (a.subset_of(y)) out = out.intersect(y);
    }
    return out;
  }

 private:
  std::vector<SubsetRepr> family_;
};

void require_shared_language(const std::vector<ConsequenceOperator>& ops) {
  if (ops.empty()) throw UsageError("operator list must be non-empty");
  for (const auto& op : ops) {
    if (!same_language(op.language(), ops.front().language())) {
      throw DomainError("operators do not share a language");
    }
  }
}

}  // namespace

// ---------------------------------------------------- ConsequenceOperator

ConsequenceOperator ConsequenceOperator::identity(LanguagePtr lang) {
  return ConsequenceOperator(std::make_shared<IdentityNode>(std::move(lang)));
}

ConsequenceOperator ConsequenceOperator::unit(LanguagePtr lang) {
  return ConsequenceOperator(std::make_shared<UnitNode>(std::move(lang)));
}

ConsequenceOperator ConsequenceOperator::table_backed(
    LanguagePtr lang, const std::map<SubsetRepr, SubsetRepr>& table) {
  PowerSetIndex index(lang, kMaxExhaustiveBound);
  std::vector<std::uint32_t> masks(index.count());
  std::vector<char> seen(index.count(), 0);
  for (const auto& [x, y] : table) {
    std::uint32_t m = index.mask(x);
    masks[m] = index.mask(y);
    seen[m] = 1;
  }
  for (std::uint32_t m = 0; m < index.count(); ++m) {
    if (!seen[m]) throw UsageError("table has no entry for " + index.subset(m).to_string());
  }
  return ConsequenceOperator(std::make_shared<TableNode>(lang, std::move(masks), "table"));
}

ConsequenceOperator ConsequenceOperator::tabulate(
    LanguagePtr lang, const std::function<SubsetRepr(const SubsetRepr&)>& map,
    std::size_t bound) {
  PowerSetIndex index(lang, bound);
  std::vector<std::uint32_t> masks(index.count());
  for (std::uint32_t m = 0; m < index.count(); ++m) masks[m] = index.mask(map(index.subset(m)));
  return ConsequenceOperator(std::make_shared<TableNode>(lang, std::move(masks), "table"));
}

ConsequenceOperator ConsequenceOperator::rule_backed(RuleSystem system,
                                                     std::optional<SubsetRepr> pool) {
  return ConsequenceOperator(std::make_shared<RuleNode>(std::move(system), std::move(pool)));
}

ConsequenceOperator ConsequenceOperator::bounded_steps(RuleSystem system, std::size_t steps) {
  if (steps < 1) throw UsageError("step bound must be at least 1");
  return ConsequenceOperator(std::make_shared<BoundedNode>(std::move(system), steps));
}

ConsequenceOperator ConsequenceOperator::cpair(SubsetRepr x, SubsetRepr y) {
  if (!same_language(x.language(), y.language())) throw DomainError("X and Y differ in language");
  if (!x.is_finite()) throw UsageError("C(X,Y) needs a finite X");
  return ConsequenceOperator(std::make_shared<CPairNode>(std::move(x), std::move(y)));
}

ConsequenceOperator ConsequenceOperator::cprime(SubsetRepr x, SubsetRepr y) {
  if (!same_language(x.language(), y.language())) throw DomainError("X and Y differ in language");
  if (!x.is_finite()) throw UsageError("C'(X,Y) needs a finite X");
  return ConsequenceOperator(std::make_shared<CPrimeNode>(std::move(x), std::move(y)));
}

ConsequenceOperator ConsequenceOperator::meet(std::vector<ConsequenceOperator> ops) {
  require_shared_language(ops);
  return ConsequenceOperator(std::make_shared<MeetNode>(std::move(ops)));
}

ConsequenceOperator ConsequenceOperator::meet_family(
    std::shared_ptr<const OperatorFamily> family) {
  if (!family) throw UsageError("null operator family");
  return ConsequenceOperator(std::make_shared<FamilyNode>(std::move(family)));
}

ConsequenceOperator ConsequenceOperator::sup_w(const std::vector<ConsequenceOperator>& ops,
                                               LanguagePtr lang, std::size_t bound) {
  require_shared_language(ops);
  if (!same_language(ops.front().language(), lang)) throw DomainError("language mismatch");
  PowerSetIndex index(lang, bound);
  // S' = intersection of the closed-system families S(C).
  std::vector<char> shared(index.count(), 1);
  for (const auto& op : ops) {
    std::vector<char> images(index.count(), 0);
    for (std::uint32_t m : index.tabulate(op)) images[m] = 1;
    for (std::uint32_t m = 0; m < index.count(); ++m) shared[m] &= images[m];
  }
  shared[index.full()] = 1;
  std::vector<std::uint32_t> table(index.count());
  for (std::uint32_t x = 0; x < index.count(); ++x) {
    std::uint32_t out = index.full();
    for (std::uint32_t y = 0; y < index.count(); ++y) {
      if (shared[y] && is_submask(x, y)) out &= y;
    }
    table[x] = out;
  }
  return ConsequenceOperator(std::make_shared<TableNode>(lang, std::move(table), "sup_w"));
}

ConsequenceOperator ConsequenceOperator::from_closure_family(
    const std::vector<SubsetRepr>& family, LanguagePtr lang) {
  const SubsetRepr everything = SubsetRepr::full(lang);
  bool has_top = false;
  for (const auto& y : family) {
    if (!same_language(y.language(), lang)) throw DomainError("family member language mismatch");
    if (y == everything) has_top = true;
  }
  if (!has_top) throw UsageError("closure family must contain the whole language");
  std::vector<SubsetRepr> members(family);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return ConsequenceOperator(
      std::make_shared<ClosureFamilyNode>(std::move(lang), std::move(members)));
}

ConsequenceOperator ConsequenceOperator::cup_join(std::vector<ConsequenceOperator> ops) {
  require_shared_language(ops);
  return ConsequenceOperator(std::make_shared<CupNode>(std::move(ops)));
}

SubsetRepr ConsequenceOperator::apply(const SubsetRepr& a) const { return node_->apply(a); }

const LanguagePtr& ConsequenceOperator::language() const { return node_->language(); }

std::string ConsequenceOperator::describe() const { return node_->describe(); }

// ------------------------------------------------------------- families

ConsequenceOperator OperatorFamily::member(std::size_t n) const {
  if (n < 1) throw UsageError("family members are indexed from 1");
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(n);
  if (it == cache_.end()) it = cache_.emplace(n, make_member(n)).first;
  return it->second;
}

CPrimeChainFamily::CPrimeChainFamily(LanguagePtr lang, SubsetRepr x)
    : lang_(std::move(lang)), x_(std::move(x)) {
  if (!lang_->is_enumerated()) throw UsageError("the C' chain needs an enumerated language");
  if (!same_language(lang_, x_.language()) || !x_.is_finite()) {
    throw UsageError("X must be a finite subset of the family's language");
  }
}

std::string CPrimeChainFamily::describe() const {
  return "C'(" + x_.to_string() + ",B_n), B_n = {" + lang_->at(1).token() + ".." +
         lang_->prefix() + "n}";
}

SubsetRepr CPrimeChainFamily::chain_member(std::size_t n) const {
  std::vector<Element> members;
  for (std::size_t i = 1; i <= n; ++i) members.push_back(lang_->at(i));
  return SubsetRepr::finite(lang_, std::move(members));
}

SubsetRepr CPrimeChainFamily::chain_union() const {
  return SubsetRepr::cofinite(lang_, std::vector<Element>{lang_->at(0)});
}

ConsequenceOperator CPrimeChainFamily::make_member(std::size_t n) const {
  return ConsequenceOperator::cprime(x_, chain_member(n));
}

SubsetRepr CPrimeChainFamily::infimum_apply(const SubsetRepr& a) const {
  // Each member adjoins X iff B_n is a subset of A; all of them do iff the
  // union of the chain is.
  return chain_union().subset_of(a) ? a.unite(x_) : a;
}

SubsetRepr prefix_meet_apply(const OperatorFamily& family, const SubsetRepr& a,
                             std::size_t count) {
  if (count < 1) throw UsageError("prefix meet needs at least one member");
  SubsetRepr out = family.member(1).apply(a);
  for (std::size_t n = 2; n <= count; ++n) out = out.intersect(family.member(n).apply(a));
  return out;
}

// ----------------------------------------------------------------- axioms

std::string AxiomReport::to_string() const {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  std::string out;
  out += std::string("extensive: ") + flag(extensive) + "\n";
  out += std::string("monotone: ") + flag(monotone) + "\n";
  out += std::string("idempotent: ") + flag(idempotent) + "\n";
  out += std::string("finite_character: ") + flag(finite_character) + "\n";
  if (counterexample) {
    out += "counterexample: " + counterexample->axiom;
    for (const auto& s : counterexample->inputs) out += " " + s.to_string();
    out += " (" + counterexample->detail + ")\n";
  }
  return out;
}

AxiomReport check_axioms(const ConsequenceOperator& op, const LanguagePtr& lang,
                         std::size_t bound) {
  if (!same_language(op.language(), lang)) throw DomainError("language mismatch");
  PowerSetIndex index(lang, bound);
  const auto table = index.tabulate(op);
  AxiomReport report;
  auto note = [&](const char* axiom, std::vector<std::uint32_t> inputs, std::string detail) {
    if (report.counterexample) return;
    Counterexample c{axiom, {}, std::move(detail)};
    for (auto m : inputs) c.inputs.push_back(index.subset(m));
    report.counterexample = std::move(c);
  };
  auto show = [&](std::uint32_t m) { return index.subset(m).to_string(); };

  for (std::uint32_t x = 0; x < index.count(); ++x) {
    if (!is_submask(x, table[x])) {
      report.extensive = false;
      note("extensive", {x}, "C(X)=" + show(table[x]));
      break;
    }
  }
  for (std::uint32_t y = 0; y < index.count() && report.monotone; ++y) {
    // Every submask x of y, including 0.
    for (std::uint32_t x = y;; x = (x - 1) & y) {
      if (!is_submask(table[x], table[y])) {
        report.monotone = false;
        note("monotone", {x, y}, "C(X)=" + show(table[x]) + ", C(Y)=" + show(table[y]));
        break;
      }
      if (x == 0) break;
    }
  }
  for (std::uint32_t x = 0; x < index.count(); ++x) {
    if (table[table[x]] != table[x]) {
      report.idempotent = false;
      note("idempotent", {x}, "C(X)=" + show(table[x]) + ", C(C(X))=" + show(table[table[x]]));
      break;
    }
  }
  for (std::uint32_t x = 0; x < index.count(); ++x) {
    std::uint32_t joined = 0;
    for (std::uint32_t f = x;; f = (f - 1) & x) {
      joined |= table[f];
      if (f == 0) break;
    }
    if (joined != table[x]) {
      report.finite_character = false;
      note("finite_character", {x},
           "C(X)=" + show(table[x]) + ", union of C(F)=" + show(joined));
      break;
    }
  }
  return report;
}

AxiomReport check_axioms_sampled(const ConsequenceOperator& op, const LanguagePtr& lang,
                                 std::size_t samples, std::uint64_t seed) {
  if (!same_language(op.language(), lang)) throw DomainError("language mismatch");
  if (!lang->is_explicit()) throw UsageError("sampled checks need an explicit language");
  std::mt19937_64 rng(seed);
  const auto& all = lang->elements();
  auto random_subset = [&](const std::vector<Element>& from) {
    std::vector<Element> out;
    for (const auto& e : from) {
      if (rng() & 1) out.push_back(e);
    }
    return SubsetRepr::finite(lang, std::move(out));
  };
  AxiomReport report;
  auto note = [&](const char* axiom, std::vector<SubsetRepr> inputs, std::string detail) {
    if (!report.counterexample) report.counterexample = Counterexample{axiom, inputs, detail};
  };
  for (std::size_t i = 0; i < samples; ++i) {
    SubsetRepr x = random_subset(all);
    SubsetRepr y = x.unite(random_subset(all));
    SubsetRepr f = random_subset(x.elements());
    SubsetRepr cx = op.apply(x);
    SubsetRepr cy = op.apply(y);
    SubsetRepr cf = op.apply(f);
    if (report.extensive && !x.subset_of(cx)) {
      report.extensive = false;
      note("extensive", {x}, "C(X)=" + cx.to_string());
    }
    if (report.monotone && !cx.subset_of(cy)) {
      report.monotone = false;
      note("monotone", {x, y}, "C(X)=" + cx.to_string() + ", C(Y)=" + cy.to_string());
    }
    SubsetRepr ccx = op.apply(cx);
    if (report.idempotent && ccx != cx) {
      report.idempotent = false;
      note("idempotent", {x}, "C(X)=" + cx.to_string() + ", C(C(X))=" + ccx.to_string());
    }
    // On a finite language X is itself a finite subset, so only C(F) within
    // C(X) can fail.
    if (report.finite_character && !cf.subset_of(cx)) {
      report.finite_character = false;
      note("finite_character", {x, f}, "C(F)=" + cf.to_string() + ", C(X)=" + cx.to_string());
    }
  }
  return report;
}

// ---------------------------------------------------------------- lattice

ConsequenceOperator meet(std::vector<ConsequenceOperator> ops) {
  return ConsequenceOperator::meet(std::move(ops));
}

ConsequenceOperator sup_w(const std::vector<ConsequenceOperator>& ops, const LanguagePtr& lang,
                          std::size_t bound) {
  return ConsequenceOperator::sup_w(ops, lang, bound);
}

ConsequenceOperator cup_join(const ConsequenceOperator& a, const ConsequenceOperator& b) {
  return ConsequenceOperator::cup_join({a, b});
}

ConsequenceOperator from_closure_family(const std::vector<SubsetRepr>& family,
                                        const LanguagePtr& lang) {
  return ConsequenceOperator::from_closure_family(family, lang);
}

std::optional<SubsetRepr> first_difference(const ConsequenceOperator& a,
                                           const ConsequenceOperator& b,
                                           const LanguagePtr& lang, std::size_t bound) {
  PowerSetIndex index(lang, bound);
  for (std::uint32_t m = 0; m < index.count(); ++m) {
    SubsetRepr x = index.subset(m);
    if (a.apply(x) != b.apply(x)) return x;
  }
  return std::nullopt;
}

bool leq(const ConsequenceOperator& a, const ConsequenceOperator& b, const LanguagePtr& lang,
         std::size_t bound) {
  PowerSetIndex index(lang, bound);
  for (std::uint32_t m = 0; m < index.count(); ++m) {
    SubsetRepr x = index.subset(m);
    if (!a.apply(x).subset_of(b.apply(x))) return false;
  }
  return true;
}

bool equal_ops(const ConsequenceOperator& a, const ConsequenceOperator& b,
               const LanguagePtr& lang, std::size_t bound) {
  return !first_difference(a, b, lang, bound).has_value();
}

std::vector<SubsetRepr> power_set(const LanguagePtr& lang, std::size_t bound) {
  PowerSetIndex index(lang, bound);
  std::vector<SubsetRepr> out;
  out.reserve(index.count());
  for (std::uint32_t m = 0; m < index.count(); ++m) out.push_back(index.subset(m));
  return out;
}

// ----------------------------------------------------- generated systems

RuleSystem canonical_system(const ConsequenceOperator& op, const LanguagePtr& lang,
                            std::size_t bound) {
  AxiomReport report = check_axioms(op, lang, bound);
  if (!report.consequence_operator()) {
    const auto& c = *report.counterexample;
    std::string inputs;
    for (const auto& s : c.inputs) inputs += " " + s.to_string();
    throw UsageError("canonical system refused: operator fails " + c.axiom + " at" + inputs +
                     " (" + c.detail + ")");
  }
  PowerSetIndex index(lang, bound);
  const auto table = index.tabulate(op);
  const auto& elems = lang->elements();
  auto members_in_order = [&](std::uint32_t m) {
    std::vector<Element> out;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (m >> i & 1) out.push_back(elems[i]);
    }
    return out;
  };

  std::vector<Rule> rules;
  rules.emplace_back(UnaryRule{"R0", members_in_order(table[0])});
  std::vector<TupleRule> by_size(elems.size() + 1);
  for (std::size_t n = 1; n <= elems.size(); ++n) {
    by_size[n] = TupleRule{"R" + std::to_string(n), n + 1, {}};
  }
  for (std::uint32_t f = 1; f < index.count(); ++f) {
    auto premises = members_in_order(f);
    for (const auto& x : members_in_order(table[f])) {
      RuleTuple tuple = premises;
      tuple.push_back(x);
      by_size[premises.size()].tuples.push_back(std::move(tuple));
    }
  }
  for (std::size_t n = 1; n <= elems.size(); ++n) rules.emplace_back(std::move(by_size[n]));
  return RuleSystem("canonical", lang, std::move(rules));
}

RuleSystem cpair_system(const SubsetRepr& x, const SubsetRepr& y) {
  if (!same_language(x.language(), y.language())) throw DomainError("X and Y differ in language");
  if (!x.is_finite() || !y.is_finite()) throw UsageError("generated C(X,Y) needs finite X and Y");
  std::vector<Rule> rules;
  if (!x.empty() && !y.empty()) {
    TupleRule r{"R2", 2, {}};
    for (const auto& yy : y.elements()) {
      for (const auto& xx : x.elements()) r.tuples.push_back({yy, xx});
    }
    rules.emplace_back(std::move(r));
  }
  return RuleSystem("cpair", x.language(), std::move(rules));
}

RuleSystem cprime_system(const SubsetRepr& x, const SubsetRepr& y) {
  if (!same_language(x.language(), y.language())) throw DomainError("X and Y differ in language");
  if (!x.is_finite() || !y.is_finite()) {
    throw UsageError("generated C'(X,Y) needs finite X and Y");
  }
  std::vector<Rule> rules;
  if (!x.empty() && y.empty()) {
    rules.emplace_back(UnaryRule{"R1", x.elements()});
  } else if (!x.empty()) {
    TupleRule r{"R", y.size() + 1, {}};
    for (const auto& xx : x.elements()) {
      RuleTuple t = y.elements();
      t.push_back(xx);
      r.tuples.push_back(std::move(t));
    }
    rules.emplace_back(std::move(r));
  }
  return RuleSystem("cprime", x.language(), std::move(rules));
}

}  // namespace conseq
