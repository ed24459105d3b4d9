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
#include "conseq/csystems.hpp"
#include "conseq/error.hpp"
#include "conseq/generators.hpp"

using namespace conseq;

namespace {

SubsetRepr S(const LanguagePtr& l, std::initializer_list<std::string_view> t) {
  return SubsetRepr::finite(l, t);
}

LanguagePtr abcd() { return Language::explicit_set({"a", "b", "c", "d"}); }

ConsequenceOperator b_operator(const LanguagePtr& l) {
  TupleRule r{"R", 2, {{Element("a"), Element("c")}}};
  TupleRule s{"S", 4, {{Element("a"), Element("b"), Element("c"), Element("d")}}};
  return ConsequenceOperator::rule_backed(RuleSystem("B", l, {r, s}));
}

ConsequenceOperator cup_b(const LanguagePtr& l) {
  TupleRule r{"R1", 2, {{Element("a"), Element("b")}, {Element("c"), Element("d")}}};
  return ConsequenceOperator::rule_backed(RuleSystem("B", l, {r}));
}

// Minimum member above X by brute force over the family.
SubsetRepr brute_least(const CSystemFamily& fam, const SubsetRepr& x) {
  std::optional<SubsetRepr> best;
  for (const auto& y : fam.members) {
    if (x.subset_of(y) && (!best || y.size() < best->size())) best = y;
  }
  for (const auto& y : fam.members) {
    if (x.subset_of(y)) EXPECT_TRUE(best->subset_of(y));
  }
  return *best;
}

}  // namespace

TEST(ClosedSystems, IdentityAndUnit) {
  auto l = abcd();
  EXPECT_EQ(closed_systems(ConsequenceOperator::identity(l), l).members.size(), 16u);
  auto u = closed_systems(ConsequenceOperator::unit(l), l);
  ASSERT_EQ(u.members.size(), 1u);
  EXPECT_EQ(u.members[0], SubsetRepr::full(l));
}

TEST(ClosedSystems, FourElementSystem) {
  auto l = abcd();
  auto fam = closed_systems(b_operator(l), l);
  EXPECT_FALSE(fam.contains(S(l, {"a", "b", "c"})));
  EXPECT_TRUE(fam.contains(S(l, {"a", "b", "c", "d"})));
  EXPECT_TRUE(fam.contains(S(l, {"b", "c"})));
  EXPECT_FALSE(fam.contains(S(l, {"a"})));
  for (std::size_t i = 1; i < fam.members.size(); ++i) {
    const auto& p = fam.members[i - 1];
    const auto& q = fam.members[i];
    EXPECT_TRUE(p.size() < q.size() || (p.size() == q.size() && p < q));
  }
}

TEST(ClosedSystems, Refusals) {
  auto l = Language::explicit_set({"x1", "x2", "a", "b"});
  TupleRule r{"R", 3, {{Element("x1"), Element("x2"), Element("a")}}};
  TupleRule s{"S", 2, {{Element("a"), Element("b")}}};
  auto d = ConsequenceOperator::bounded_steps(RuleSystem("d", l, {r, s}), 3);
  EXPECT_THROW(closed_systems(d, l), UsageError);
  auto big = gen::letters(7);
  EXPECT_THROW(closed_systems(ConsequenceOperator::identity(big), big), UsageError);
}

TEST(Join, Examples) {
  auto l = abcd();
  auto b = cup_b(l);
  auto fam = closed_systems(b, l);
  auto bb = b(S(l, {"b"}));
  auto ba = b(S(l, {"a"}));
  EXPECT_EQ(bb.unite(ba), S(l, {"a", "b"}));
  EXPECT_EQ(join_uplus(fam, bb, ba), S(l, {"a", "b"}));

  auto bsys = b_operator(l);
  auto bf = closed_systems(bsys, l);
  auto x = bsys(S(l, {"b"}));
  auto y = bsys(S(l, {"a"}));
  EXPECT_EQ(x.unite(y), S(l, {"a", "b", "c"}));
  EXPECT_FALSE(bf.contains(x.unite(y)));
  EXPECT_EQ(join_uplus(bf, x, y), S(l, {"a", "b", "c", "d"}));
  EXPECT_EQ(join_uplus(bsys, x, y), S(l, {"a", "b", "c", "d"}));
  for (const auto& m : bf.members) {
    EXPECT_EQ(join_uplus(bf, m, m), m);
    EXPECT_EQ(join_uplus(bf, m, SubsetRepr::full(l)), SubsetRepr::full(l));
  }
}

TEST(Join, RejectsNonClosed) {
  auto l = abcd();
  auto bsys = b_operator(l);
  auto fam = closed_systems(bsys, l);
  EXPECT_THROW(join_uplus(fam, S(l, {"a"}), S(l, {"b"})), UsageError);
  EXPECT_THROW(join_uplus(bsys, S(l, {"a"}), S(l, {"b"})), UsageError);
  EXPECT_THROW(meet_cap(fam, S(l, {"a"}), SubsetRepr::full(l)), UsageError);
  EXPECT_THROW(meet_cap(bsys, S(l, {"a"}), SubsetRepr::full(l)), UsageError);
}

TEST(Meet, Examples) {
  auto l = Language::explicit_set({"a", "b", "c"});
  auto id = ConsequenceOperator::identity(l);
  EXPECT_EQ(meet_cap(id, S(l, {"a", "b"}), S(l, {"a", "c"})), S(l, {"a"}));
  auto l4 = abcd();
  auto fam = closed_systems(b_operator(l4), l4);
  for (const auto& x : fam.members) {
    EXPECT_EQ(meet_cap(fam, x, SubsetRepr::full(l4)), x);
    for (const auto& y : fam.members) EXPECT_TRUE(fam.contains(meet_cap(fam, x, y)));
  }
}

TEST(Properties, LatticeLaws) {
  gen::Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    auto l = gen::letters(1 + trial % 5);
    auto op = gen::random_operator(rng, l);
    auto fam = closed_systems(op, l);
    ASSERT_TRUE(fam.contains(SubsetRepr::full(l)));
    for (const auto& x : power_set(l)) {
      ASSERT_EQ(op(x), fam.least_above(x));
      ASSERT_EQ(op(x), brute_least(fam, x));
    }
    const auto& m = fam.members;
    for (const auto& x : m) {
      ASSERT_EQ(join_uplus(fam, x, x), x);
      for (const auto& y : m) {
        ASSERT_TRUE(fam.contains(x.intersect(y)));
        auto j = join_uplus(fam, x, y);
        ASSERT_EQ(j, join_uplus(fam, y, x));
        ASSERT_EQ(j, brute_least(fam, x.unite(y)));
        // Associativity against a third member.
        const auto& z = m[gen::below(rng, m.size())];
        ASSERT_EQ(join_uplus(fam, j, z), join_uplus(fam, x, join_uplus(fam, y, z)));
      }
    }
  }
}
