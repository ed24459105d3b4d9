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

#include "conseq/logic_system.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "conseq/error.hpp"

namespace conseq {

const std::string& rule_id(const Rule& rule) {
  return std::visit([](const auto& r) -> const std::string& { return r.id; }, rule);
}

bool is_valid_rule_id(std::string_view id) noexcept {
  return Element::is_valid_token(id) && id.find(':') == std::string_view::npos &&
         id.find(',') == std::string_view::npos;
}

RuleSystem::RuleSystem(std::string name, LanguagePtr language, std::vector<Rule> rules)
    : name_(std::move(name)), language_(std::move(language)), rules_(std::move(rules)) {
  if (!language_) throw UsageError("rule system without a language");
  std::unordered_set<std::string> seen;
  auto check_element = [&](const Element& e, const std::string& id) {
    if (!language_->contains(e)) {
      throw DomainError("rule '" + id + "' uses '" + e.token() + "', which is not in the language");
    }
  };
  for (const auto& rule : rules_) {
    const std::string& id = rule_id(rule);
    if (!is_valid_rule_id(id)) throw UsageError("invalid rule id '" + id + "'");
    if (!seen.insert(id).second) throw UsageError("duplicate rule id '" + id + "'");
    if (const auto* u = std::get_if<UnaryRule>(&rule)) {
      for (const auto& e : u->axioms) check_element(e, id);
    } else if (const auto* t = std::get_if<TupleRule>(&rule)) {
      if (t->arity < 2) throw UsageError("rule '" + id + "' needs arity >= 2");
      for (const auto& tuple : t->tuples) {
        if (tuple.size() != t->arity) {
          throw UsageError("rule '" + id + "' has a tuple of length " +
                           std::to_string(tuple.size()) + ", expected " +
                           std::to_string(t->arity));
        }
        for (const auto& e : tuple) check_element(e, id);
      }
    } else {
      const auto& s = std::get<SchemaRule>(rule);
      if (s.premise_count < 1) throw UsageError("schema '" + id + "' needs a premise");
      if (!s.instantiate) throw UsageError("schema '" + id + "' has no instantiation");
    }
  }
}

const Rule* RuleSystem::find(std::string_view id) const {
  for (const auto& r : rules_) {
    if (rule_id(r) == id) return &r;
  }
  return nullptr;
}

bool RuleSystem::has_schema() const noexcept {
  return std::any_of(rules_.begin(), rules_.end(),
                     [](const Rule& r) { return std::holds_alternative<SchemaRule>(r); });
}

std::size_t RuleSystem::max_arity() const noexcept {
  std::size_t out = 1;
  for (const auto& r : rules_) {
    if (const auto* t = std::get_if<TupleRule>(&r)) out = std::max(out, t->arity);
    if (const auto* s = std::get_if<SchemaRule>(&r)) out = std::max(out, s->premise_count + 1);
  }
  return out;
}

// ------------------------------------------------------------ derivations

const Element& step_element(const Step& step) {
  if (const auto* ins = std::get_if<InsertStep>(&step)) return ins->element;
  return std::get<ApplyStep>(step).conclusion;
}

const Element& Derivation::conclusion() const {
  if (steps_.empty()) throw UsageError("empty derivation has no conclusion");
  return step_element(steps_.back());
}

std::string Derivation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    out += std::to_string(i + 1) + ". " + step_element(steps_[i]).token() + "  [";
    if (const auto* ins = std::get_if<InsertStep>(&steps_[i])) {
      out += ins->axiom_rule ? "axiom " + *ins->axiom_rule : std::string("hyp");
    } else {
      const auto& app = std::get<ApplyStep>(steps_[i]);
      out += app.rule_id;
      for (std::size_t k = 0; k < app.premise_steps.size(); ++k) {
        out += (k ? "," : " ") + std::to_string(app.premise_steps[k]);
      }
    }
    out += "]\n";
  }
  return out;
}

namespace {

void require_finite_hypotheses(const RuleSystem& system, const SubsetRepr& hypotheses) {
  if (!same_language(system.language(), hypotheses.language())) {
    throw DomainError("hypotheses are not over the system's language");
  }
  if (!hypotheses.is_finite()) throw UsageError("hypotheses must be a finite subset");
}

// The system grounded against a finite universe: facts that may be
// inserted and tuples over interned element ids.
struct Ground {
  struct Fact {
    int element;
    std::optional<std::string> rule;  // nullopt: hypothesis
  };
  struct Tuple {
    const std::string* rule;
    std::vector<int> coords;    // premises then conclusion
    std::vector<int> distinct;  // distinct premises
    int conclusion() const { return coords.back(); }
  };

  std::vector<Element> elements;
  std::unordered_map<std::string, int> ids;
  std::vector<Fact> facts;
  std::vector<Tuple> tuples;

  int intern(const Element& e) {
    auto [it, inserted] = ids.emplace(e.token(), static_cast<int>(elements.size()));
    if (inserted) elements.push_back(e);
    return it->second;
  }
};

Ground ground_system(const RuleSystem& system, const SubsetRepr& hypotheses,
                     const std::optional<SubsetRepr>& pool) {
  require_finite_hypotheses(system, hypotheses);
  if (pool) {
    if (!same_language(system.language(), pool->language())) {
      throw DomainError("pool is not over the system's language");
    }
    if (!pool->is_finite()) throw UsageError("pool must be a finite subset");
    if (!hypotheses.subset_of(*pool)) throw UsageError("pool must contain the hypotheses");
  } else if (system.has_schema()) {
    throw UsageError("system '" + system.name() + "' has schema rules; a pool is required");
  }
  auto in_pool = [&](const Element& e) { return !pool || pool->contains(e); };

  Ground g;
  for (const auto& h : hypotheses.elements()) g.facts.push_back({g.intern(h), std::nullopt});
  for (const auto& rule : system.rules()) {
    const std::string& id = rule_id(rule);
    if (const auto* u = std::get_if<UnaryRule>(&rule)) {
      for (const auto& e : u->axioms) {
        if (in_pool(e)) g.facts.push_back({g.intern(e), id});
      }
      continue;
    }
    std::vector<RuleTuple> instances;
    const std::vector<RuleTuple>* source = nullptr;
    if (const auto* t = std::get_if<TupleRule>(&rule)) {
      source = &t->tuples;
    } else {
      const auto& s = std::get<SchemaRule>(rule);
      instances = s.instantiate(*pool);
      for (const auto& inst : instances) {
        if (inst.size() != s.premise_count + 1) {
          throw Error("schema '" + id + "' produced a malformed instance");
        }
      }
      source = &instances;
    }
    for (const auto& tuple : *source) {
      if (!std::all_of(tuple.begin(), tuple.end(), in_pool)) continue;
      Ground::Tuple gt;
      gt.rule = &id;
      for (const auto& e : tuple) gt.coords.push_back(g.intern(e));
      gt.distinct.assign(gt.coords.begin(), gt.coords.end() - 1);
      std::sort(gt.distinct.begin(), gt.distinct.end());
      gt.distinct.erase(std::unique(gt.distinct.begin(), gt.distinct.end()), gt.distinct.end());
      g.tuples.push_back(std::move(gt));
    }
  }
  return g;
}

// Why an element was derived.
struct Reason {
  int fact = -1;   // index into Ground::facts
  int tuple = -1;  // index into Ground::tuples
};

struct Fixpoint {
  std::vector<int> order;      // element ids in derivation order
  std::vector<int> position;   // element id -> index in order, or -1
  std::vector<Reason> reason;  // element id -> reason
};

Fixpoint run_fixpoint(const Ground& g, std::optional<std::size_t> max_depth) {
  const std::size_t n = g.elements.size();
  Fixpoint fp;
  fp.position.assign(n, -1);
  fp.reason.assign(n, Reason{});
  std::vector<std::size_t> depth(n, 0);

  auto derive = [&](int e, Reason why, std::size_t d) {
    fp.position[e] = static_cast<int>(fp.order.size());
    fp.order.push_back(e);
    fp.reason[e] = why;
    depth[e] = d;
  };
  for (std::size_t i = 0; i < g.facts.size(); ++i) {
    int e = g.facts[i].element;
    if (fp.position[e] < 0) derive(e, Reason{static_cast<int>(i), -1}, 0);
  }

  std::vector<std::vector<int>> watchers(n);
  std::vector<std::size_t> missing(g.tuples.size());
  for (std::size_t t = 0; t < g.tuples.size(); ++t) {
    missing[t] = g.tuples[t].distinct.size();
    for (int p : g.tuples[t].distinct) watchers[p].push_back(static_cast<int>(t));
  }

  // Semi-naive: each newly derived element wakes only the tuples it feeds.
  for (std::size_t head = 0; head < fp.order.size(); ++head) {
    int e = fp.order[head];
    for (int t : watchers[e]) {
      if (--missing[t] != 0) continue;
      const auto& tuple = g.tuples[t];
      int c = tuple.conclusion();
      if (fp.position[c] >= 0) continue;
      std::size_t d = 0;
      for (int p : tuple.distinct) d = std::max(d, depth[p]);
      ++d;
      if (max_depth && d > *max_depth) continue;
      derive(c, Reason{-1, t}, d);
    }
  }
  return fp;
}

Step make_step(const Ground& g, int element, const Reason& why,
               const std::unordered_map<int, std::size_t>& step_of) {
  if (why.fact >= 0) return InsertStep{g.elements[element], g.facts[why.fact].rule};
  const auto& tuple = g.tuples[why.tuple];
  ApplyStep app{*tuple.rule, {}, g.elements[element]};
  for (std::size_t k = 0; k + 1 < tuple.coords.size(); ++k) {
    app.premise_steps.push_back(step_of.at(tuple.coords[k]));
  }
  return app;
}

Derivation witness_for(const Ground& g, const Fixpoint& fp, int target) {
  std::vector<int> needed;
  std::vector<char> seen(g.elements.size(), 0);
  std::vector<int> stack{target};
  seen[target] = 1;
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    needed.push_back(e);
    const Reason& why = fp.reason[e];
    if (why.tuple < 0) continue;
    for (int p : g.tuples[why.tuple].distinct) {
      if (!seen[p]) {
        seen[p] = 1;
        stack.push_back(p);
      }
    }
  }
  std::sort(needed.begin(), needed.end(),
            [&](int a, int b) { return fp.position[a] < fp.position[b]; });
  std::unordered_map<int, std::size_t> step_of;
  std::vector<Step> steps;
  for (int e : needed) {
    steps.push_back(make_step(g, e, fp.reason[e], step_of));
    step_of[e] = steps.size();
  }
  return Derivation(std::move(steps));
}

}  // namespace

SaturationResult saturate(const RuleSystem& system, const SubsetRepr& hypotheses,
                          const SaturateOptions& options) {
  Ground g = ground_system(system, hypotheses, options.pool);
  Fixpoint fp = run_fixpoint(g, options.max_depth);
  std::vector<Element> members;
  std::map<Element, Derivation> witness;
  for (int e : fp.order) {
    members.push_back(g.elements[e]);
    witness.emplace(g.elements[e], witness_for(g, fp, e));
  }
  return SaturationResult{SubsetRepr::finite(system.language(), std::move(members)),
                          std::move(witness)};
}

SaturationResult saturate(const RuleSystem& system, const SubsetRepr& hypotheses,
                          const std::optional<SubsetRepr>& pool) {
  SaturateOptions options;
  options.pool = pool;
  return saturate(system, hypotheses, options);
}

// ------------------------------------------------------- checking

DerivationCheck check_derivation(const RuleSystem& system, const SubsetRepr& hypotheses,
                                 const Derivation& derivation,
                                 const std::optional<SubsetRepr>& pool) {
  auto fail = [](std::size_t step, const std::string& why) {
    return DerivationCheck{false, "step " + std::to_string(step) + ": " + why};
  };
  if (derivation.empty()) return DerivationCheck{false, "derivation has no steps"};
  if (!same_language(system.language(), hypotheses.language())) {
    return DerivationCheck{false, "hypotheses are not over the system's language"};
  }
  auto outside_pool = [&](const Element& e) { return pool && !pool->contains(e); };

  std::map<std::string, std::set<RuleTuple>> instance_cache;
  auto instances = [&](const std::string& id, const Rule& rule) -> const std::set<RuleTuple>& {
    auto it = instance_cache.find(id);
    if (it != instance_cache.end()) return it->second;
    std::set<RuleTuple> set;
    if (const auto* t = std::get_if<TupleRule>(&rule)) {
      set.insert(t->tuples.begin(), t->tuples.end());
    } else if (const auto* s = std::get_if<SchemaRule>(&rule)) {
      auto inst = s->instantiate(*pool);
      set.insert(inst.begin(), inst.end());
    }
    return instance_cache.emplace(id, std::move(set)).first->second;
  };

  const auto& steps = derivation.steps();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::size_t number = i + 1;
    const Element& e = step_element(steps[i]);
    if (!system.language()->contains(e)) {
      return fail(number, "'" + e.token() + "' is not in the language");
    }
    if (outside_pool(e)) return fail(number, "'" + e.token() + "' is outside the pool");
    if (const auto* ins = std::get_if<InsertStep>(&steps[i])) {
      if (!ins->axiom_rule) {
        if (!hypotheses.contains(e)) return fail(number, "'" + e.token() + "' is not a hypothesis");
        continue;
      }
      const Rule* rule = system.find(*ins->axiom_rule);
      if (!rule) return fail(number, "unknown rule '" + *ins->axiom_rule + "'");
      const auto* unary = std::get_if<UnaryRule>(rule);
      if (!unary) return fail(number, "rule '" + *ins->axiom_rule + "' is not unary");
      if (std::find(unary->axioms.begin(), unary->axioms.end(), e) == unary->axioms.end()) {
        return fail(number, "'" + e.token() + "' is not a member of '" + unary->id + "'");
      }
      continue;
    }
    const auto& app = std::get<ApplyStep>(steps[i]);
    const Rule* rule = system.find(app.rule_id);
    if (!rule) return fail(number, "unknown rule '" + app.rule_id + "'");
    if (std::holds_alternative<UnaryRule>(*rule)) {
      return fail(number, "rule '" + app.rule_id + "' is unary and cannot be applied");
    }
    if (std::holds_alternative<SchemaRule>(*rule) && !pool) {
      return fail(number, "schema rule '" + app.rule_id + "' needs a pool");
    }
    RuleTuple tuple;
    for (std::size_t ref : app.premise_steps) {
      if (ref < 1 || ref >= number) {
        return fail(number, "premise reference " + std::to_string(ref) + " is not an earlier step");
      }
      tuple.push_back(step_element(steps[ref - 1]));
    }
    tuple.push_back(app.conclusion);
    if (!instances(app.rule_id, *rule).count(tuple)) {
      return fail(number, "no tuple of '" + app.rule_id + "' matches");
    }
  }
  return DerivationCheck{true, {}};
}

// -------------------------------------------------- bounded deduction

namespace {

// Breadth-first search over the sets of elements derived so far. A set of
// size m is reachable exactly when its elements admit an m-step derivation.
class StepSearch {
 public:
  StepSearch(const RuleSystem& system, const SubsetRepr& hypotheses)
      : ground_(ground_system(system, hypotheses, std::nullopt)),
        fixpoint_(run_fixpoint(ground_, std::nullopt)) {
    const std::size_t k = fixpoint_.order.size();
    if (k > kMaxExactUniverse) {
      throw UsageError("exact step search supports at most " +
                       std::to_string(kMaxExactUniverse) + " derivable elements, got " +
                       std::to_string(k));
    }
    // Bits follow derivation order; elements outside the closure never matter.
    for (std::size_t f = 0; f < ground_.facts.size(); ++f) {
      int pos = fixpoint_.position[ground_.facts[f].element];
      if (!(insertable_ >> pos & 1)) {
        insertable_ |= std::uint64_t{1} << pos;
        insert_fact_[pos] = static_cast<int>(f);
      }
    }
    for (std::size_t t = 0; t < ground_.tuples.size(); ++t) {
      const auto& tuple = ground_.tuples[t];
      std::uint64_t need = 0;
      bool inside = true;
      for (int p : tuple.distinct) {
        if (fixpoint_.position[p] < 0) {
          inside = false;
          break;
        }
        need |= std::uint64_t{1} << fixpoint_.position[p];
      }
      if (!inside) continue;
      rules_.push_back({need, fixpoint_.position[tuple.conclusion()], static_cast<int>(t)});
    }
  }

  std::size_t universe() const { return fixpoint_.order.size(); }
  std::uint64_t all() const {
    return universe() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe()) - 1;
  }

  std::optional<int> bit_of(const Element& e) const {
    auto it = ground_.ids.find(e.token());
    if (it == ground_.ids.end() || fixpoint_.position[it->second] < 0) return std::nullopt;
    return fixpoint_.position[it->second];
  }

  // Expands level by level up to `cap` steps. `on_new` sees each newly
  // reached state and returns true to stop.
  template <typename OnNew>
  void run(std::size_t cap, OnNew on_new) {
    parents_.clear();
    parents_.emplace(0, Parent{});
    std::vector<std::uint64_t> level{0};
    for (std::size_t m = 0; m < cap && !level.empty(); ++m) {
      std::vector<std::uint64_t> next;
      for (std::uint64_t state : level) {
        for (int bit = 0; bit < static_cast<int>(universe()); ++bit) {
          std::uint64_t b = std::uint64_t{1} << bit;
          if (state & b) continue;
          int via_fact = -1, via_tuple = -1;
          if (insertable_ & b) {
            via_fact = insert_fact_.at(bit);
          } else {
            for (const auto& r : rules_) {
              if (r.conclusion == bit && (r.need & state) == r.need) {
                via_tuple = r.tuple;
                break;
              }
            }
            if (via_tuple < 0) continue;
          }
          std::uint64_t ns = state | b;
          if (!parents_.emplace(ns, Parent{state, bit, via_fact, via_tuple}).second) continue;
          if (parents_.size() > kMaxExactStates) {
            throw UsageError("exact step search exceeded " + std::to_string(kMaxExactStates) +
                             " states");
          }
          if (on_new(ns, bit)) return;
          next.push_back(ns);
        }
      }
      level = std::move(next);
    }
  }

  Derivation rebuild(std::uint64_t state) const {
    std::vector<const Parent*> path;
    while (state != 0) {
      const Parent& p = parents_.at(state);
      path.push_back(&p);
      state = p.prev;
    }
    std::reverse(path.begin(), path.end());
    std::unordered_map<int, std::size_t> step_of;
    std::vector<Step> steps;
    for (const Parent* p : path) {
      int element = fixpoint_.order[p->bit];
      steps.push_back(make_step(ground_, element, Reason{p->fact, p->tuple}, step_of));
      step_of[element] = steps.size();
    }
    return Derivation(std::move(steps));
  }

 private:
  struct Parent {
    std::uint64_t prev = 0;
    int bit = -1;
    int fact = -1;
    int tuple = -1;
  };
  struct MaskRule {
    std::uint64_t need;
    int conclusion;
    int tuple;
  };

  Ground ground_;
  Fixpoint fixpoint_;
  std::uint64_t insertable_ = 0;
  std::unordered_map<int, int> insert_fact_;
  std::vector<MaskRule> rules_;
  std::unordered_map<std::uint64_t, Parent> parents_;
};

}  // namespace

std::optional<Derivation> minimal_derivation(const RuleSystem& system,
                                             const SubsetRepr& hypotheses,
                                             const Element& goal, std::size_t cap) {
  if (cap < 1) throw UsageError("step cap must be at least 1");
  StepSearch search(system, hypotheses);
  auto goal_bit = search.bit_of(goal);
  if (!goal_bit) return std::nullopt;
  std::optional<std::uint64_t> found;
  search.run(cap, [&](std::uint64_t state, int bit) {
    if (bit != *goal_bit) return false;
    found = state;
    return true;
  });
  if (!found) return std::nullopt;
  return search.rebuild(*found);
}

std::optional<std::size_t> min_derivation_size(const RuleSystem& system,
                                               const SubsetRepr& hypotheses,
                                               const Element& goal, std::size_t cap) {
  auto d = minimal_derivation(system, hypotheses, goal, cap);
  if (!d) return std::nullopt;
  return d->size();
}

SubsetRepr bounded_consequences(const RuleSystem& system, const SubsetRepr& hypotheses,
                                std::size_t steps) {
  if (steps < 1) throw UsageError("step bound must be at least 1");
  SaturationResult full = saturate(system, hypotheses);
  // The whole closure, listed in derivation order, is itself a derivation.
  if (steps >= full.closure.size()) return full.closure;
  StepSearch search(system, hypotheses);
  std::uint64_t reached = 0;
  search.run(steps, [&](std::uint64_t state, int) {
    reached |= state;
    return reached == search.all();
  });
  std::vector<Element> members;
  for (const auto& [e, d] : full.witness) {
    auto bit = search.bit_of(e);
    if (bit && (reached >> *bit & 1)) members.push_back(e);
  }
  return SubsetRepr::finite(system.language(), std::move(members));
}

// --------------------------------------------------- system constructions

RuleSystem permute_premises(const RuleSystem& system, std::string_view rule,
                            std::size_t tuple_index,
                            const std::vector<std::size_t>& permutation) {
  std::vector<Rule> rules = system.rules();
  for (auto& r : rules) {
    if (rule_id(r) != rule) continue;
    auto* t = std::get_if<TupleRule>(&r);
    if (!t) throw UsageError("rule '" + std::string(rule) + "' is not an extensional tuple rule");
    if (tuple_index >= t->tuples.size()) throw UsageError("tuple index out of range");
    RuleTuple& tuple = t->tuples[tuple_index];
    const std::size_t premises = tuple.size() - 1;
    if (premises < 2) throw UsageError("permuting premises needs at least two premises");
    if (permutation.size() != premises) {
      throw UsageError("permutation has length " + std::to_string(permutation.size()) +
                       ", expected " + std::to_string(premises));
    }
    std::vector<char> used(premises, 0);
    RuleTuple permuted;
    for (std::size_t p : permutation) {
      if (p >= premises || used[p]) throw UsageError("not a permutation of the premise positions");
      used[p] = 1;
      permuted.push_back(tuple[p]);
    }
    permuted.push_back(tuple.back());
    tuple = std::move(permuted);
    return RuleSystem(system.name(), system.language(), std::move(rules));
  }
  throw UsageError("no rule '" + std::string(rule) + "'");
}

RuleSystem union_systems(const std::vector<RuleSystem>& systems) {
  if (systems.empty()) throw UsageError("union of an empty list of systems");
  std::vector<Rule> rules;
  std::string name;
  for (std::size_t k = 0; k < systems.size(); ++k) {
    if (!same_language(systems[k].language(), systems[0].language())) {
      throw DomainError("systems do not share a language");
    }
    name += (k ? "+" : "") + systems[k].name();
    for (Rule r : systems[k].rules()) {
      std::visit([&](auto& x) { x.id = "s" + std::to_string(k) + "." + x.id; }, r);
      rules.push_back(std::move(r));
    }
  }
  return RuleSystem(name, systems[0].language(), std::move(rules));
}

namespace {

std::set<Element> as_set(const std::vector<Element>& v) { return {v.begin(), v.end()}; }
std::set<RuleTuple> as_set(const std::vector<RuleTuple>& v) { return {v.begin(), v.end()}; }

bool is_empty_relation(const Rule& r) {
  if (const auto* u = std::get_if<UnaryRule>(&r)) return u->axioms.empty();
  if (const auto* t = std::get_if<TupleRule>(&r)) return t->tuples.empty();
  return false;
}

void reject_schema(const Rule& r) {
  if (std::holds_alternative<SchemaRule>(r)) {
    throw UsageError("schema rule '" + rule_id(r) + "' cannot be compared extensionally");
  }
}

}  // namespace

bool extensionally_equal(const Rule& a, const Rule& b) {
  reject_schema(a);
  reject_schema(b);
  // Every empty relation is the empty set, whatever its nominal arity.
  if (is_empty_relation(a) || is_empty_relation(b)) {
    return is_empty_relation(a) && is_empty_relation(b);
  }
  if (const auto* ua = std::get_if<UnaryRule>(&a)) {
    const auto* ub = std::get_if<UnaryRule>(&b);
    return ub && as_set(ua->axioms) == as_set(ub->axioms);
  }
  const auto& ta = std::get<TupleRule>(a);
  const auto* tb = std::get_if<TupleRule>(&b);
  return tb && ta.arity == tb->arity && as_set(ta.tuples) == as_set(tb->tuples);
}

RuleSystem intersect_systems(const std::vector<RuleSystem>& systems) {
  if (systems.empty()) throw UsageError("intersection of an empty list of systems");
  for (const auto& s : systems) {
    if (!same_language(s.language(), systems[0].language())) {
      throw DomainError("systems do not share a language");
    }
  }
  std::vector<Rule> kept;
  for (const auto& r : systems[0].rules()) {
    bool everywhere = std::all_of(systems.begin() + 1, systems.end(), [&](const RuleSystem& s) {
      return std::any_of(s.rules().begin(), s.rules().end(),
                         [&](const Rule& other) { return extensionally_equal(r, other); });
    });
    bool duplicate = std::any_of(kept.begin(), kept.end(),
                                 [&](const Rule& k) { return extensionally_equal(r, k); });
    if (everywhere && !duplicate) kept.push_back(r);
  }
  return RuleSystem("intersection", systems[0].language(), std::move(kept));
}

RuleSystem intersect_rulewise(const RuleSystem& a, const RuleSystem& b) {
  if (!same_language(a.language(), b.language())) {
    throw DomainError("systems do not share a language");
  }
  if (a.rules().size() != b.rules().size()) {
    throw UsageError("rule-wise intersection needs the same number of relations");
  }
  std::vector<Rule> out;
  for (std::size_t i = 0; i < a.rules().size(); ++i) {
    const Rule& ra = a.rules()[i];
    const Rule& rb = b.rules()[i];
    reject_schema(ra);
    reject_schema(rb);
    if (const auto* ua = std::get_if<UnaryRule>(&ra)) {
      UnaryRule r{ua->id, {}};
      if (const auto* ub = std::get_if<UnaryRule>(&rb)) {
        auto other = as_set(ub->axioms);
        std::set<Element> taken;
        for (const auto& e : ua->axioms) {
          if (other.count(e) && taken.insert(e).second) r.axioms.push_back(e);
        }
      }
      out.emplace_back(std::move(r));
      continue;
    }
    const auto& ta = std::get<TupleRule>(ra);
    TupleRule r{ta.id, ta.arity, {}};
    if (const auto* tb = std::get_if<TupleRule>(&rb); tb && tb->arity == ta.arity) {
      auto other = as_set(tb->tuples);
      std::set<RuleTuple> taken;
      for (const auto& t : ta.tuples) {
        if (other.count(t) && taken.insert(t).second) r.tuples.push_back(t);
      }
    }
    out.emplace_back(std::move(r));
  }
  return RuleSystem(a.name() + "^" + b.name(), a.language(), std::move(out));
}

bool structurally_equal(const RuleSystem& a, const RuleSystem& b) {
  if (!same_language(a.language(), b.language())) return false;
  if (a.rules().size() != b.rules().size()) return false;
  for (std::size_t i = 0; i < a.rules().size(); ++i) {
    const Rule& ra = a.rules()[i];
    const Rule& rb = b.rules()[i];
    if (ra.index() != rb.index() || rule_id(ra) != rule_id(rb)) return false;
    if (const auto* ua = std::get_if<UnaryRule>(&ra)) {
      if (ua->axioms != std::get<UnaryRule>(rb).axioms) return false;
    } else if (const auto* ta = std::get_if<TupleRule>(&ra)) {
      const auto& tb = std::get<TupleRule>(rb);
      if (ta->arity != tb.arity || ta->tuples != tb.tuples) return false;
    } else if (std::get<SchemaRule>(ra).premise_count !=
               std::get<SchemaRule>(rb).premise_count) {
      return false;
    }
  }
  return true;
}

}  // namespace conseq
