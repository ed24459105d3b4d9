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

#include <gtest/gtest.h>

#include "conseq/consequence.hpp"
#include "conseq/error.hpp"
#include "conseq/generators.hpp"
#include "conseq/logic_system.hpp"

using namespace conseq;

namespace {

using Tuples = std::vector<std::vector<std::string>>;

TupleRule rel(std::string id, const Tuples& ts) {
  TupleRule r{std::move(id), ts.front().size(), {}};
  for (const auto& t : ts) {
    RuleTuple tuple;
    for (const auto& s : t) tuple.emplace_back(s);
    r.tuples.push_back(tuple);
  }
  return r;
}

SubsetRepr S(const LanguagePtr& l, std::initializer_list<std::string_view> t) {
  return SubsetRepr::finite(l, t);
}

ConsequenceOperator rules(const LanguagePtr& l, std::vector<Rule> rs) {
  return ConsequenceOperator::rule_backed(RuleSystem("s", l, std::move(rs)));
}

LanguagePtr abcd() { return Language::explicit_set({"a", "b", "c", "d"}); }

// Direct set arithmetic, no operator machinery.
SubsetRepr cpair_oracle(const SubsetRepr& x, const SubsetRepr& y, const SubsetRepr& a) {
  return a.intersect(y).empty() ? a : a.unite(x);
}
SubsetRepr cprime_oracle(const SubsetRepr& x, const SubsetRepr& y, const SubsetRepr& a) {
  return y.subset_of(a) ? a.unite(x) : a;
}

bool all_true(const AxiomReport& r) {
  return r.finite_consequence_operator() && !r.counterexample;
}

}  // namespace

// -------------------------------------------------------------- apply

TEST(Apply, CPrimeCofinite) {
  auto f = Language::enumerated("f");
  auto x = S(f, {"f0"});
  auto y = SubsetRepr::cofinite(f, {"f0"});
  auto c = ConsequenceOperator::cprime(x, y);
  EXPECT_EQ(c(SubsetRepr::cofinite(f, {"f0"})), SubsetRepr::full(f));
  EXPECT_EQ(c(S(f, {"f1", "f2", "f9"})), S(f, {"f1", "f2", "f9"}));
  EXPECT_EQ(c(S(f, {})), S(f, {}));
  EXPECT_EQ(c(SubsetRepr::cofinite(f, {"f0", "f3"})), SubsetRepr::cofinite(f, {"f0", "f3"}));
}

TEST(Apply, CPairDisjointTrigger) {
  auto l = Language::explicit_set({"x", "y", "z"});
  auto c = ConsequenceOperator::cpair(S(l, {"x"}), S(l, {"y"}));
  EXPECT_EQ(c(S(l, {"z"})), S(l, {"z"}));
  EXPECT_EQ(c(S(l, {"y", "z"})), S(l, {"x", "y", "z"}));
}

TEST(Apply, UnitAndIdentity) {
  auto l = abcd();
  EXPECT_EQ(ConsequenceOperator::unit(l)(S(l, {"a"})), SubsetRepr::full(l));
  EXPECT_EQ(ConsequenceOperator::identity(l)(S(l, {"a"})), S(l, {"a"}));
  auto f = Language::enumerated("f");
  EXPECT_EQ(ConsequenceOperator::unit(f)(S(f, {})), SubsetRepr::cofinite(f, {}));
}

TEST(Apply, Errors) {
  auto l = abcd();
  auto other = Language::explicit_set({"a"});
  EXPECT_THROW(ConsequenceOperator::identity(l)(S(other, {"a"})), DomainError);
  auto f = Language::enumerated("f");
  auto t = ConsequenceOperator::from_closure_family({SubsetRepr::full(l)}, l);
  EXPECT_THROW(t(SubsetRepr::cofinite(f, {})), DomainError);
  EXPECT_THROW(ConsequenceOperator::meet({}), UsageError);
  EXPECT_THROW(ConsequenceOperator::from_closure_family({S(l, {"a"})}, l), UsageError);
  EXPECT_THROW(ConsequenceOperator::cpair(SubsetRepr::cofinite(f, {}), S(f, {})), UsageError);
}

// ------------------------------------------------------------- axioms

TEST(Axioms, RuleBackedExample) {
  auto l = Language::explicit_set({"x1", "x2", "a", "b"});
  RuleSystem s("steps", l, {rel("R", {{"x1", "x2", "a"}}), rel("S", {{"a", "b"}})});
  EXPECT_TRUE(all_true(check_axioms(ConsequenceOperator::rule_backed(s), l)));

  AxiomReport d = check_axioms(ConsequenceOperator::bounded_steps(s, 3), l);
  EXPECT_TRUE(d.extensive);
  EXPECT_TRUE(d.monotone);
  EXPECT_FALSE(d.idempotent);
  ASSERT_TRUE(d.counterexample);
  EXPECT_EQ(d.counterexample->axiom, "idempotent");
  ASSERT_EQ(d.counterexample->inputs.size(), 1u);
  EXPECT_EQ(d.counterexample->inputs[0], S(l, {"x1", "x2"}));
  EXPECT_NE(d.to_string().find("idempotent: false"), std::string::npos);
}

TEST(Axioms, CupJoinNotIdempotent) {
  auto l = abcd();
  auto b = rules(l, {rel("R1", {{"a", "b"}, {"c", "d"}})});
  auto r = rules(l, {rel("R1", {{"a", "c"}})});
  auto k = cup_join(b, r);
  EXPECT_EQ(k(S(l, {"a"})), S(l, {"a", "b", "c"}));
  EXPECT_EQ(k(k(S(l, {"a"}))), S(l, {"a", "b", "c", "d"}));
  AxiomReport rep = check_axioms(k, l);
  EXPECT_FALSE(rep.idempotent);
  ASSERT_TRUE(rep.counterexample);
  EXPECT_EQ(rep.counterexample->axiom, "idempotent");
  EXPECT_EQ(rep.counterexample->inputs[0], S(l, {"a"}));
  auto i = ConsequenceOperator::identity(l);
  EXPECT_EQ(cup_join(i, i)(S(l, {"a"})), S(l, {"a"}));
}

TEST(Axioms, CounterexampleReproduces) {
  auto l = Language::explicit_set({"a", "b", "c"});
  // Drops everything: not extensive.
  auto shrink = ConsequenceOperator::tabulate(l, [&](const SubsetRepr&) { return S(l, {}); });
  AxiomReport r = check_axioms(shrink, l);
  EXPECT_FALSE(r.extensive);
  ASSERT_TRUE(r.counterexample);
  const auto& x = r.counterexample->inputs[0];
  EXPECT_FALSE(x.subset_of(shrink(x)));

  // Extensive but not monotone: {a} gets b, {a,c} does not.
  auto odd = ConsequenceOperator::tabulate(l, [&](const SubsetRepr& a) {
    return a == S(l, {"a"}) ? S(l, {"a", "b"}) : a;
  });
  r = check_axioms(odd, l);
  EXPECT_TRUE(r.extensive);
  EXPECT_FALSE(r.monotone);
  ASSERT_EQ(r.counterexample->axiom, "monotone");
  const auto& in = r.counterexample->inputs;
  ASSERT_EQ(in.size(), 2u);
  EXPECT_TRUE(in[0].subset_of(in[1]));
  EXPECT_FALSE(odd(in[0]).subset_of(odd(in[1])));
}

TEST(Axioms, BoundExceeded) {
  auto l = gen::letters(7);
  EXPECT_THROW(check_axioms(ConsequenceOperator::identity(l), l), UsageError);
  EXPECT_TRUE(all_true(check_axioms(ConsequenceOperator::identity(l), l, 7)));
  EXPECT_THROW(check_axioms(ConsequenceOperator::identity(l), l, kMaxExhaustiveBound + 1),
               UsageError);
  AxiomReport s = check_axioms_sampled(ConsequenceOperator::identity(l), l, 50, 1);
  EXPECT_TRUE(all_true(s));
}

TEST(Axioms, SampledFindsCupFailure) {
  auto l = abcd();
  auto k = cup_join(rules(l, {rel("R1", {{"a", "b"}, {"c", "d"}})}), rules(l, {rel("R1", {{"a", "c"}})}));
  AxiomReport s = check_axioms_sampled(k, l, 400, 3);
  EXPECT_FALSE(s.idempotent);
}

// ---------------------------------------------------------------- meet

TEST(Meet, TwoChainExample) {
  auto l = abcd();
  auto c = rules(l, {rel("R1", {{"a", "b"}})});
  auto d = rules(l, {rel("R1", {{"a", "b"}, {"b", "c"}})});
  auto m = meet({c, d});
  EXPECT_EQ(m(S(l, {"a"})), S(l, {"a", "b"}));
  EXPECT_TRUE(leq(m, c, l));
  EXPECT_TRUE(leq(m, d, l));
  EXPECT_TRUE(equal_ops(meet({c, ConsequenceOperator::unit(l)}), c, l));
}

TEST(Meet, ChainFamily) {
  auto f = Language::enumerated("f");
  auto fam = std::make_shared<CPrimeChainFamily>(f, S(f, {"f0"}));
  auto inf = ConsequenceOperator::meet_family(fam);
  // Some B_n is not inside F, so F is returned unchanged.
  for (auto a : {S(f, {}), S(f, {"f1"}), S(f, {"f1", "f2", "f3"}), S(f, {"f2", "f5"})}) {
    EXPECT_EQ(inf(a), a);
  }
  EXPECT_EQ(inf(SubsetRepr::cofinite(f, {"f0"})), SubsetRepr::full(f));
  EXPECT_EQ(inf(SubsetRepr::cofinite(f, {"f0", "f4"})), SubsetRepr::cofinite(f, {"f0", "f4"}));
  // The prefix meets agree with the answer once B_n escapes F.
  auto a = S(f, {"f1", "f2", "f3"});
  EXPECT_EQ(prefix_meet_apply(*fam, a, 3), a.unite(S(f, {"f0"})));
  EXPECT_EQ(prefix_meet_apply(*fam, a, 4), a);
  EXPECT_EQ(fam->chain_member(3), S(f, {"f1", "f2", "f3"}));
  EXPECT_THROW(fam->member(0), UsageError);
}

TEST(Meet, ChainFamilyWitnessesInfiniteCharacter) {
  auto f = Language::enumerated("f");
  auto fam = std::make_shared<CPrimeChainFamily>(f, S(f, {"f0"}));
  auto inf = ConsequenceOperator::meet_family(fam);
  const Element f0("f0");
  EXPECT_TRUE(inf(SubsetRepr::cofinite(f, {"f0"})).contains(f0));
  gen::Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Element> es;
    std::size_t n = gen::below(rng, 12);
    for (std::size_t i = 0; i < n; ++i) es.push_back(f->at(1 + gen::below(rng, 40)));
    auto finite = SubsetRepr::finite(f, es);
    ASSERT_TRUE(finite.subset_of(SubsetRepr::cofinite(f, {"f0"})));
    ASSERT_FALSE(inf(finite).contains(f0));
  }
}

TEST(Meet, ClosureProperty) {
  gen::Rng rng(32);
  for (int trial = 0; trial < 80; ++trial) {
    auto l = gen::letters(1 + trial % 5);
    std::vector<ConsequenceOperator> ops;
    std::size_t k = 2 + gen::below(rng, 3);
    for (std::size_t i = 0; i < k; ++i) ops.push_back(gen::random_operator(rng, l));
    AxiomReport r = check_axioms(meet(ops), l);
    ASSERT_TRUE(r.consequence_operator()) << r.to_string();
    for (const auto& op : ops) ASSERT_TRUE(leq(meet(ops), op, l));
  }
}

TEST(Meet, RuleIntersectionGuard) {
  gen::Rng rng(33);
  int exercised = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto l = gen::letters(4);
    RuleSystem base = gen::random_system(rng, l);
    std::vector<Rule> extra = base.rules();
    RuleSystem more = gen::random_system(rng, l);
    for (const auto& r : more.rules()) {
      std::visit([](auto& x) { x.id = "X" + x.id; }, extra.emplace_back(r));
    }
    RuleSystem bigger("bigger", l, extra);
    RuleSystem in = intersect_systems({base, bigger});
    bool matches = false;
    for (const auto* s : {&base, &bigger}) {
      matches = matches || (in.rules().size() == s->rules().size() &&
                            std::equal(in.rules().begin(), in.rules().end(), s->rules().begin(),
                                       extensionally_equal));
    }
    if (!matches) continue;
    ++exercised;
    auto m = meet({ConsequenceOperator::rule_backed(base), ConsequenceOperator::rule_backed(bigger)});
    ASSERT_TRUE(equal_ops(ConsequenceOperator::rule_backed(in), m, l));
  }
  EXPECT_GT(exercised, 50);
}

TEST(Meet, RuleIntersectionCanFallBelowMeet) {
  auto l = abcd();
  RuleSystem e("E", l, {rel("R1", {{"a", "b"}, {"b", "c"}})});
  RuleSystem f("F", l, {rel("R1", {{"a", "b"}, {"b", "d"}, {"d", "c"}})});
  auto ef = ConsequenceOperator::rule_backed(intersect_rulewise(e, f));
  auto m = meet({ConsequenceOperator::rule_backed(e), ConsequenceOperator::rule_backed(f)});
  EXPECT_EQ(m(S(l, {"a"})), S(l, {"a", "b", "c"}));
  EXPECT_EQ(ef(S(l, {"a"})), S(l, {"a", "b"}));
  EXPECT_TRUE(leq(ef, m, l));
  EXPECT_FALSE(equal_ops(ef, m, l));
}

// ----------------------------------------------------------------- sup

TEST(Sup, CupCounterexampleSystems) {
  auto l = abcd();
  auto b = rules(l, {rel("R1", {{"a", "b"}, {"c", "d"}})});
  auto r = rules(l, {rel("R1", {{"a", "c"}})});
  auto s = sup_w({b, r}, l);
  EXPECT_TRUE(s(S(l, {"a"})).contains(Element("d")));
  EXPECT_EQ(s(S(l, {"a"})), S(l, {"a", "b", "c", "d"}));
  EXPECT_TRUE(equal_ops(sup_w({b, b}, l), b, l));
  EXPECT_TRUE(equal_ops(sup_w({ConsequenceOperator::identity(l), b}, l), b, l));
  EXPECT_TRUE(leq(b, s, l));
  EXPECT_TRUE(leq(r, s, l));
}

TEST(Sup, BoundAndLanguageErrors) {
  auto big = gen::letters(7);
  EXPECT_THROW(sup_w({ConsequenceOperator::identity(big)}, big), UsageError);
  EXPECT_THROW(ConsequenceOperator::sup_w({}, big), UsageError);
  auto f = Language::enumerated("f");
  EXPECT_THROW(sup_w({ConsequenceOperator::identity(f)}, f), UsageError);
}

TEST(Sup, UnionOfSystemsGeneratesSup) {
  gen::Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    auto l = gen::letters(1 + trial % 5);
    std::vector<RuleSystem> systems;
    std::vector<ConsequenceOperator> ops;
    std::size_t k = 1 + gen::below(rng, 3);
    for (std::size_t i = 0; i < k; ++i) {
      systems.push_back(gen::random_system(rng, l));
      ops.push_back(ConsequenceOperator::rule_backed(systems.back()));
    }
    RuleSystem u = union_systems(systems);
    ConsequenceOperator s = sup_w(ops, l);
    for (const auto& x : power_set(l)) ASSERT_EQ(saturate(u, x).closure, s(x));
  }
}

TEST(Sup, LeastUpperBound) {
  gen::Rng rng(35);
  for (int trial = 0; trial < 40; ++trial) {
    auto l = gen::letters(4);
    auto a = gen::random_operator(rng, l);
    auto b = gen::random_operator(rng, l);
    auto s = sup_w({a, b}, l);
    ASSERT_TRUE(check_axioms(s, l).consequence_operator());
    ASSERT_TRUE(leq(a, s, l) && leq(b, s, l));
    // Any upper bound among random operators lies above the sup.
    for (int j = 0; j < 10; ++j) {
      auto c = gen::random_operator(rng, l);
      if (leq(a, c, l) && leq(b, c, l)) ASSERT_TRUE(leq(s, c, l));
    }
    auto top = ConsequenceOperator::unit(l);
    ASSERT_TRUE(leq(s, top, l));
  }
}

// ----------------------------------------------------- closure families

TEST(ClosureFamily, Examples) {
  auto l = Language::explicit_set({"a", "b", "c"});
  EXPECT_TRUE(equal_ops(from_closure_family({SubsetRepr::full(l)}, l),
                        ConsequenceOperator::unit(l), l));
  EXPECT_TRUE(equal_ops(from_closure_family(power_set(l), l), ConsequenceOperator::identity(l), l));
  auto c = rules(l, {rel("R1", {{"a", "b"}})});
  std::vector<SubsetRepr> images;
  for (const auto& x : power_set(l)) images.push_back(c(x));
  EXPECT_TRUE(equal_ops(from_closure_family(images, l), c, l));
}

TEST(ClosureFamily, RandomFamiliesAreConsequenceOperators) {
  gen::Rng rng(36);
  for (int trial = 0; trial < 100; ++trial) {
    auto l = gen::letters(1 + trial % 5);
    std::vector<SubsetRepr> fam{SubsetRepr::full(l)};
    std::size_t k = gen::below(rng, 6);
    for (std::size_t i = 0; i < k; ++i) fam.push_back(gen::random_subset(rng, l));
    AxiomReport r = check_axioms(from_closure_family(fam, l), l);
    ASSERT_TRUE(r.finite_consequence_operator()) << r.to_string();
  }
}

// -------------------------------------------------------------- compare

TEST(Compare, Units) {
  gen::Rng rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    auto l = gen::letters(1 + trial % 5);
    auto op = gen::random_operator(rng, l);
    ASSERT_TRUE(leq(ConsequenceOperator::identity(l), op, l));
    ASSERT_TRUE(leq(op, ConsequenceOperator::unit(l), l));
    ASSERT_TRUE(equal_ops(op, op, l));
  }
  auto l = Language::explicit_set({"a", "b"});
  auto diff = first_difference(ConsequenceOperator::identity(l), ConsequenceOperator::unit(l), l);
  ASSERT_TRUE(diff);
  EXPECT_EQ(*diff, S(l, {}));
  EXPECT_FALSE(first_difference(ConsequenceOperator::unit(l), ConsequenceOperator::unit(l), l));
}

// ---------------------------------------------------------- CPair, CPrime

TEST(Direct, CPairAndCPrimeAreFinite) {
  auto l = gen::letters(4);
  auto subsets = power_set(l);
  for (const auto& x : subsets) {
    for (const auto& y : subsets) {
      auto p = ConsequenceOperator::cpair(x, y);
      auto q = ConsequenceOperator::cprime(x, y);
      ASSERT_TRUE(all_true(check_axioms(p, l))) << x.to_string() << " " << y.to_string();
      ASSERT_TRUE(all_true(check_axioms(q, l))) << x.to_string() << " " << y.to_string();
    }
  }
}

TEST(Direct, GeneratedSystemsMatchDefinitions) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto l = gen::letters(n);
    auto subsets = power_set(l);
    gen::Rng rng(38 + n);
    // All pairs for small n; a sample of pairs at n = 5.
    for (std::size_t i = 0; i < (n < 5 ? subsets.size() * subsets.size() : 300); ++i) {
      const auto& x = n < 5 ? subsets[i / subsets.size()] : subsets[gen::below(rng, subsets.size())];
      const auto& y = n < 5 ? subsets[i % subsets.size()] : subsets[gen::below(rng, subsets.size())];
      RuleSystem ps = cpair_system(x, y);
      RuleSystem qs = cprime_system(x, y);
      for (const auto& a : subsets) {
        ASSERT_EQ(saturate(ps, a).closure, cpair_oracle(x, y, a));
        ASSERT_EQ(saturate(qs, a).closure, cprime_oracle(x, y, a));
        ASSERT_EQ(ConsequenceOperator::cpair(x, y)(a), cpair_oracle(x, y, a));
        ASSERT_EQ(ConsequenceOperator::cprime(x, y)(a), cprime_oracle(x, y, a));
      }
    }
  }
}

TEST(Direct, DegenerateCases) {
  auto l = Language::explicit_set({"a", "b", "c"});
  auto e = S(l, {});
  EXPECT_TRUE(cpair_system(e, S(l, {"a"})).rules().empty());
  EXPECT_TRUE(cpair_system(S(l, {"a"}), e).rules().empty());
  EXPECT_TRUE(cprime_system(e, S(l, {"a"})).rules().empty());
  RuleSystem adjoin = cprime_system(S(l, {"b"}), e);
  ASSERT_EQ(adjoin.rules().size(), 1u);
  EXPECT_TRUE(std::holds_alternative<UnaryRule>(adjoin.rules()[0]));
  EXPECT_EQ(saturate(adjoin, e).closure, S(l, {"b"}));
  auto f = Language::enumerated("f");
  EXPECT_THROW(cprime_system(S(f, {"f0"}), SubsetRepr::cofinite(f, {"f0"})), UsageError);
}
