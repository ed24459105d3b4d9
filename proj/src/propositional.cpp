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

#include "conseq/propositional.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "conseq/error.hpp"

namespace conseq::pd {

struct Wff::Node {
  Kind kind;
  std::size_t index = 0;
  std::optional<Wff> a, b;
  std::string text;
};

Wff Wff::atom(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->index = index;
  n->text = "P" + std::to_string(index);
  return Wff(std::move(n));
}

Wff Wff::neg(Wff operand) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Neg;
  n->text = "~" + operand.text();
  n->a = std::move(operand);
  return Wff(std::move(n));
}

Wff Wff::impl(Wff antecedent, Wff consequent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Impl;
  n->text = "(" + antecedent.text() + " -> " + consequent.text() + ")";
  n->a = std::move(antecedent);
  n->b = std::move(consequent);
  return Wff(std::move(n));
}

Wff::Kind Wff::kind() const noexcept { return node_->kind; }

std::size_t Wff::index() const {
  if (!is_atom()) throw UsageError("not an atom: " + text());
  return node_->index;
}

const Wff& Wff::operand() const {
  if (!is_neg()) throw UsageError("not a negation: " + text());
  return *node_->a;
}

const Wff& Wff::antecedent() const {
  if (!is_impl()) throw UsageError("not an implication: " + text());
  return *node_->a;
}

const Wff& Wff::consequent() const {
  if (!is_impl()) throw UsageError("not an implication: " + text());
  return *node_->b;
}

const std::string& Wff::text() const noexcept { return node_->text; }

std::string Wff::token() const {
  std::string out;
  for (char c : text()) {
    if (c != ' ') out += c;
  }
  return out;
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Wff parse_all() {
    Wff w = formula();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_), pos_);
  }

  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' ||
                                s_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool eat(std::string_view lit) {
    if (s_.substr(pos_, lit.size()) == lit) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  Wff formula() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat("~") || eat("\xC2\xAC")) return Wff::neg(formula());
    if (eat("(")) {
      Wff a = formula();
      skip();
      if (!eat("->") && !eat("\xE2\x86\x92")) fail("expected '->'");
      Wff b = formula();
      skip();
      if (!eat(")")) fail("expected ')'");
      return Wff::impl(std::move(a), std::move(b));
    }
    if (eat("P")) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
      if (pos_ == start) fail("expected atom index");
      std::string digits(s_.substr(start, pos_ - start));
      if (digits.size() > 1 && digits[0] == '0') {
        pos_ = start;
        fail("leading zero in atom index");
      }
      if (digits.size() > 18) {
        pos_ = start;
        fail("atom index too large");
      }
      return Wff::atom(std::stoull(digits));
    }
    fail("expected formula");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Wff parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Wff& w) { return w.text(); }

Element to_element(const Wff& w) { return Element(w.token()); }

Wff from_element(const Element& e) { return parse(e.token()); }

// ---------------------------------------------------------------- semantics

namespace {

void collect_atoms(const Wff& w, std::set<std::size_t>& out) {
  switch (w.kind()) {
    case Wff::Kind::Atom: out.insert(w.index()); break;
    case Wff::Kind::Neg: collect_atoms(w.operand(), out); break;
    case Wff::Kind::Impl:
      collect_atoms(w.antecedent(), out);
      collect_atoms(w.consequent(), out);
      break;
  }
}

}  // namespace

std::vector<std::size_t> atoms(const Wff& w) {
  std::set<std::size_t> s;
  collect_atoms(w, s);
  return {s.begin(), s.end()};
}

bool eval(const Wff& w, const Valuation& v) {
  switch (w.kind()) {
    case Wff::Kind::Atom: {
      auto it = v.find(w.index());
      if (it == v.end()) throw DomainError("valuation has no value for " + w.text());
      return it->second;
    }
    case Wff::Kind::Neg: return !eval(w.operand(), v);
    case Wff::Kind::Impl: return !eval(w.antecedent(), v) || eval(w.consequent(), v);
  }
  return false;
}

std::optional<Valuation> falsifying_valuation(const Wff& w) {
  const auto as = atoms(w);
  if (as.size() > 24) throw UsageError("too many atoms for a truth table: " + w.text());
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << as.size()); ++row) {
    Valuation v;
    for (std::size_t i = 0; i < as.size(); ++i) v[as[i]] = (row >> i & 1) != 0;
    if (!eval(w, v)) return v;
  }
  return std::nullopt;
}

bool is_tautology(const Wff& w) { return !falsifying_valuation(w).has_value(); }

std::string valuation_to_string(const Valuation& v) {
  // Highest index first.
  std::string out = "{";
  bool first = true;
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (!first) out += ", ";
    first = false;
    out += "P" + std::to_string(it->first) + "=" + (it->second ? "true" : "false");
  }
  return out + "}";
}

Wff h_transform(const Wff& w) {
  switch (w.kind()) {
    case Wff::Kind::Atom: return w;
    case Wff::Kind::Neg: return h_transform(w.operand());
    case Wff::Kind::Impl:
      return Wff::impl(h_transform(w.antecedent()), h_transform(w.consequent()));
  }
  return w;
}

// ----------------------------------------------------------------- schemata

Wff j_formula(std::size_t n) {
  Wff p0 = Wff::atom(0), pn = Wff::atom(n);
  return Wff::impl(Wff::impl(Wff::neg(p0), Wff::neg(pn)), Wff::impl(pn, p0));
}

bool is_r1(const Wff& w) {
  return w.is_impl() && w.consequent().is_impl() && w.consequent().consequent() == w.antecedent();
}

bool is_r2(const Wff& w) {
  if (!w.is_impl()) return false;
  const Wff& l = w.antecedent();
  const Wff& r = w.consequent();
  if (!l.is_impl() || !l.consequent().is_impl()) return false;
  if (!r.is_impl() || !r.antecedent().is_impl() || !r.consequent().is_impl()) return false;
  const Wff& x = l.antecedent();
  const Wff& y = l.consequent().antecedent();
  const Wff& z = l.consequent().consequent();
  return r.antecedent().antecedent() == x && r.antecedent().consequent() == y &&
         r.consequent().antecedent() == x && r.consequent().consequent() == z;
}

bool is_r3(const Wff& w) {
  if (!w.is_impl()) return false;
  const Wff& l = w.antecedent();
  const Wff& r = w.consequent();
  if (!l.is_impl() || !l.antecedent().is_neg() || !l.consequent().is_neg()) return false;
  if (!r.is_impl()) return false;
  return r.antecedent() == l.consequent().operand() && r.consequent() == l.antecedent().operand();
}

namespace {

bool mentions_atom(const Wff& w, std::size_t i) {
  switch (w.kind()) {
    case Wff::Kind::Atom: return w.index() == i;
    case Wff::Kind::Neg: return mentions_atom(w.operand(), i);
    case Wff::Kind::Impl:
      return mentions_atom(w.antecedent(), i) || mentions_atom(w.consequent(), i);
  }
  return false;
}

bool is_r3_positive(const Wff& w) { return is_r3(w) && is_tautology(h_transform(w)); }

bool blocked_by_restriction(const Wff& major, std::size_t n) {
  // ((Pi -> P0), Pi, P0) with i > 0 and i != n
  const Wff& a = major.antecedent();
  const Wff& b = major.consequent();
  return a.is_atom() && a.index() > 0 && a.index() != n && b.is_atom() && b.index() == 0;
}

}  // namespace

std::string schema_name(const SchemaSet& s) {
  switch (s.kind) {
    case SchemaKind::R1: return "R1";
    case SchemaKind::R2: return "R2";
    case SchemaKind::R3: return "R3";
    case SchemaKind::R3Restricted: return "R3h+J" + std::to_string(s.n);
    case SchemaKind::R3Positive: return "R3h";
    case SchemaKind::R1PrimeUnionJ: return "R'+J" + std::to_string(s.n);
    case SchemaKind::MP: return "MP";
    case SchemaKind::MPRestricted: return "MP" + std::to_string(s.n);
  }
  return "?";
}

std::vector<RuleTuple> instantiate_schema(const SchemaSet& s, const std::vector<Wff>& pool) {
  std::vector<RuleTuple> out;
  auto add = [&](const Wff& w) { out.push_back({to_element(w)}); };
  if (s.kind == SchemaKind::MP || s.kind == SchemaKind::MPRestricted) {
    std::unordered_set<std::string> present;
    for (const auto& w : pool) present.insert(w.text());
    for (const auto& w : pool) {
      if (!w.is_impl()) continue;
      if (!present.count(w.antecedent().text()) || !present.count(w.consequent().text())) continue;
      if (s.kind == SchemaKind::MPRestricted && blocked_by_restriction(w, s.n)) continue;
      out.push_back({to_element(w), to_element(w.antecedent()), to_element(w.consequent())});
    }
    return out;
  }
  const Wff j = j_formula(s.n);
  for (const auto& w : pool) {
    switch (s.kind) {
      case SchemaKind::R1:
        if (is_r1(w)) add(w);
        break;
      case SchemaKind::R2:
        if (is_r2(w)) add(w);
        break;
      case SchemaKind::R3:
        if (is_r3(w)) add(w);
        break;
      case SchemaKind::R3Positive:
        if (is_r3_positive(w)) add(w);
        break;
      case SchemaKind::R3Restricted:
        if (is_r3_positive(w) || w == j) add(w);
        break;
      case SchemaKind::R1PrimeUnionJ:
        if (((is_r1(w) || is_r2(w) || is_r3(w)) && !mentions_atom(w, 0)) || w == j) add(w);
        break;
      default: break;
    }
  }
  return out;
}

// ------------------------------------------------------------------ systems

std::string PdVariant::describe() const {
  switch (kind) {
    case Kind::Standard: return "standard";
    case Kind::RestrictedMp: return "restricted_mp(" + std::to_string(n) + ")";
    case Kind::MissingAtom: return "missing_atom(" + std::to_string(n) + ")";
    case Kind::Positive: return "positive(" + std::to_string(n) + ")";
  }
  return "?";
}

PdVariant parse_variant(std::string_view name, std::size_t n) {
  if (name == "standard") return PdVariant::standard();
  if (name == "restricted_mp") return PdVariant::restricted_mp(n);
  if (name == "missing_atom") return PdVariant::missing_atom(n);
  if (name == "positive") return PdVariant::positive(n);
  throw UsageError("unknown variant '" + std::string(name) +
                   "' (expected standard, restricted_mp, missing_atom or positive)");
}

std::vector<Wff> variant_seeds(const PdVariant& v) {
  if (v.kind == PdVariant::Kind::MissingAtom || v.kind == PdVariant::Kind::Positive) {
    return {j_formula(v.n)};
  }
  return {};
}

bool FormulaPool::contains(const Wff& w) const {
  return std::binary_search(formulas.begin(), formulas.end(), w, ShorterFirst{});
}

namespace {

void add_subformulas(const Wff& w, std::set<Wff, ShorterFirst>& out) {
  if (!out.insert(w).second) return;
  if (w.is_neg()) add_subformulas(w.operand(), out);
  if (w.is_impl()) {
    add_subformulas(w.antecedent(), out);
    add_subformulas(w.consequent(), out);
  }
}

// Printed lengths of the schema instances, from the operand lengths.
std::size_t r1_size(std::size_t x, std::size_t y) { return 2 * x + y + 12; }
std::size_t r2_size(std::size_t x, std::size_t y, std::size_t z) {
  return 3 * x + 2 * y + 2 * z + 36;
}
std::size_t r3_size(std::size_t x, std::size_t y) { return 2 * x + 2 * y + 20; }

}  // namespace

FormulaPool subformula_closure(const std::vector<Wff>& inputs, std::size_t formula_cap,
                               std::size_t pool_cap) {
  std::set<Wff, ShorterFirst> pool;
  for (const auto& w : inputs) {
    if (w.size() > formula_cap) {
      throw UsageError("formula cap " + std::to_string(formula_cap) + " is below the input " +
                       w.text());
    }
    add_subformulas(w, pool);
  }
  FormulaPool result;
  if (pool.size() > pool_cap) result.truncated = true;

  while (!result.truncated) {
    std::vector<Wff> members(pool.begin(), pool.end());  // shorter first
    std::set<Wff, ShorterFirst> fresh;
    auto offer = [&](const Wff& w) {
      if (w.size() <= formula_cap && !pool.count(w)) fresh.insert(w);
    };
    for (const auto& x : members) {
      if (r1_size(x.size(), 2) > formula_cap && r3_size(x.size(), 2) > formula_cap &&
          r2_size(x.size(), 2, 2) > formula_cap) {
        break;
      }
      for (const auto& y : members) {
        bool any = false;
        if (r1_size(x.size(), y.size()) <= formula_cap) {
          offer(Wff::impl(x, Wff::impl(y, x)));
          any = true;
        }
        if (r3_size(x.size(), y.size()) <= formula_cap) {
          offer(Wff::impl(Wff::impl(Wff::neg(x), Wff::neg(y)), Wff::impl(y, x)));
          any = true;
        }
        for (const auto& z : members) {
          if (r2_size(x.size(), y.size(), z.size()) > formula_cap) break;
          any = true;
          offer(Wff::impl(Wff::impl(x, Wff::impl(y, z)),
                          Wff::impl(Wff::impl(x, y), Wff::impl(x, z))));
        }
        if (!any) break;
      }
    }
    if (fresh.empty()) break;
    for (const auto& w : fresh) {
      std::set<Wff, ShorterFirst> with_subs = pool;
      add_subformulas(w, with_subs);
      if (with_subs.size() > pool_cap) {
        result.truncated = true;
        break;
      }
      pool = std::move(with_subs);
    }
  }
  result.formulas.assign(pool.begin(), pool.end());
  return result;
}

namespace {

void require_subformula_closed(const std::vector<Wff>& pool) {
  std::unordered_set<std::string> present;
  for (const auto& w : pool) present.insert(w.text());
  for (const auto& w : pool) {
    auto need = [&](const Wff& sub) {
      if (!present.count(sub.text())) {
        throw UsageError("pool is not closed under subformulas: " + sub.text() +
                         " missing for " + w.text());
      }
    };
    if (w.is_neg()) need(w.operand());
    if (w.is_impl()) {
      need(w.antecedent());
      need(w.consequent());
    }
  }
}

UnaryRule axiom_relation(std::string id, const SchemaSet& s, const std::vector<Wff>& pool) {
  UnaryRule r{std::move(id), {}};
  for (auto& t : instantiate_schema(s, pool)) r.axioms.push_back(std::move(t.front()));
  return r;
}

UnaryRule single_axiom(std::string id, const Wff& w, const std::vector<Wff>& pool) {
  UnaryRule r{std::move(id), {}};
  if (std::find(pool.begin(), pool.end(), w) != pool.end()) r.axioms.push_back(to_element(w));
  return r;
}

SchemaRule mp_relation(const SchemaSet& s, const std::vector<Wff>& pool) {
  auto formulas = std::make_shared<const std::vector<Wff>>(pool);
  return SchemaRule{"MP", 2, [formulas, s](const SubsetRepr& p) {
                      std::vector<Wff> inside;
                      for (const auto& w : *formulas) {
                        if (p.contains(to_element(w))) inside.push_back(w);
                      }
                      return instantiate_schema(s, inside);
                    }};
}

}  // namespace

RuleSystem pd_system(const PdVariant& variant, const std::vector<Wff>& pool) {
  if (pool.empty()) throw UsageError("formula pool is empty");
  require_subformula_closed(pool);
  std::vector<Element> elements;
  for (const auto& w : pool) elements.push_back(to_element(w));
  LanguagePtr lang = Language::explicit_set(std::move(elements));

  std::vector<Rule> rules;
  SchemaSet mp{SchemaKind::MP, 0};
  std::string n = std::to_string(variant.n);
  switch (variant.kind) {
    case PdVariant::Kind::Standard:
      rules.emplace_back(axiom_relation("R1", {SchemaKind::R1}, pool));
      rules.emplace_back(axiom_relation("R2", {SchemaKind::R2}, pool));
      rules.emplace_back(axiom_relation("R3", {SchemaKind::R3}, pool));
      break;
    case PdVariant::Kind::RestrictedMp:
      if (variant.n < 1) throw UsageError("restricted_mp needs n >= 1");
      rules.emplace_back(axiom_relation("R1", {SchemaKind::R1}, pool));
      rules.emplace_back(axiom_relation("R2", {SchemaKind::R2}, pool));
      rules.emplace_back(axiom_relation("R3", {SchemaKind::R3}, pool));
      mp = {SchemaKind::MPRestricted, variant.n};
      break;
    case PdVariant::Kind::MissingAtom: {
      if (variant.n < 1) throw UsageError("missing_atom needs m >= 1");
      auto no_p0 = [&](std::string id, SchemaKind k) {
        UnaryRule r = axiom_relation(std::move(id), {k}, pool);
        std::erase_if(r.axioms, [](const Element& e) { return mentions_atom(from_element(e), 0); });
        return r;
      };
      rules.emplace_back(no_p0("R1'", SchemaKind::R1));
      rules.emplace_back(no_p0("R2'", SchemaKind::R2));
      rules.emplace_back(no_p0("R3'", SchemaKind::R3));
      rules.emplace_back(single_axiom("J" + n, j_formula(variant.n), pool));
      break;
    }
    case PdVariant::Kind::Positive:
      if (variant.n < 1) throw UsageError("positive needs n >= 1");
      rules.emplace_back(axiom_relation("R1", {SchemaKind::R1}, pool));
      rules.emplace_back(axiom_relation("R2", {SchemaKind::R2}, pool));
      rules.emplace_back(axiom_relation("R3h", {SchemaKind::R3Positive}, pool));
      rules.emplace_back(single_axiom("J" + n, j_formula(variant.n), pool));
      break;
  }
  rules.emplace_back(mp_relation(mp, pool));
  std::string name = variant.describe();
  std::replace(name.begin(), name.end(), '(', '_');
  name.erase(std::remove(name.begin(), name.end(), ')'), name.end());
  return RuleSystem("pd_" + name, lang, std::move(rules));
}

// ------------------------------------------------------------------- search

SearchResult search(const PdVariant& variant, const std::vector<Wff>& hypotheses,
                    const Wff& goal, const SearchOptions& options) {
  std::vector<Wff> inputs = hypotheses;
  inputs.push_back(goal);
  for (auto& w : variant_seeds(variant)) inputs.push_back(std::move(w));
  SearchResult result;
  result.pool = subformula_closure(inputs, options.formula_cap, options.pool_cap);
  RuleSystem system = pd_system(variant, result.pool.formulas);
  std::vector<Element> hyps;
  for (const auto& h : hypotheses) hyps.push_back(to_element(h));
  SubsetRepr all = SubsetRepr::full(system.language());
  SaturationResult sat = saturate(system, SubsetRepr::finite(system.language(), std::move(hyps)),
                                  SaturateOptions{all, options.max_steps});
  result.closure_size = sat.closure.size();
  auto it = sat.witness.find(to_element(goal));
  if (it != sat.witness.end()) result.derivation = it->second;
  return result;
}

std::string kind_name(CertificateResult::Kind k) {
  switch (k) {
    case CertificateResult::Kind::Certified: return "Certified";
    case CertificateResult::Kind::BoundedEvidence: return "BoundedEvidence";
    case CertificateResult::Kind::Derived: return "Derived";
    case CertificateResult::Kind::Refused: return "Refused";
  }
  return "?";
}

std::string CertificateResult::to_string() const {
  std::string out = kind_name(kind);
  if (valuation) out += " " + valuation_to_string(*valuation);
  if (!detail.empty()) out += " (" + detail + ")";
  out += "\n";
  if (derivation) out += derivation->to_string();
  return out;
}

CertificateResult certificate_non_derivable(const PdVariant& variant,
                                            const std::vector<Wff>& hypotheses,
                                            const Wff& goal, const SearchOptions& options) {
  CertificateResult out;
  if (std::find(hypotheses.begin(), hypotheses.end(), goal) != hypotheses.end()) {
    out.kind = CertificateResult::Kind::Refused;
    out.detail = "goal is a hypothesis";
    return out;
  }
  if (variant.kind == PdVariant::Kind::RestrictedMp) {
    // Every restricted rule is sound, so a valuation satisfying the
    // hypotheses and falsifying the goal rules out a derivation.
    Wff transform = goal;
    for (auto it = hypotheses.rbegin(); it != hypotheses.rend(); ++it) {
      transform = Wff::impl(*it, transform);
    }
    if (auto v = falsifying_valuation(transform)) {
      out.kind = CertificateResult::Kind::Certified;
      out.valuation = std::move(v);
      out.detail = "falsifies " + transform.text();
      return out;
    }
  }
  SearchResult found = search(variant, hypotheses, goal, options);
  std::string caps = "pool=" + std::to_string(found.pool.formulas.size()) +
                     (found.pool.truncated ? " (truncated)" : "") +
                     ", formula_cap=" + std::to_string(options.formula_cap) +
                     ", pool_cap=" + std::to_string(options.pool_cap) + ", max_steps=" +
                     (options.max_steps ? std::to_string(*options.max_steps) : "none");
  if (found.derivation) {
    out.kind = CertificateResult::Kind::Derived;
    out.derivation = std::move(found.derivation);
    out.detail = caps;
  } else {
    out.kind = CertificateResult::Kind::BoundedEvidence;
    out.detail = "closure of " + std::to_string(found.closure_size) +
                 " formulas without the goal; " + caps;
  }
  return out;
}

}  // namespace conseq::pd
