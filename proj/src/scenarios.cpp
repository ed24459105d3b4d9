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

#include "conseq/scenarios.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <numeric>

#include "conseq/consequence.hpp"
#include "conseq/csystems.hpp"
#include "conseq/error.hpp"
#include "conseq/generators.hpp"
#include "conseq/logic_system.hpp"
#include "conseq/propositional.hpp"

namespace conseq {

bool ScenarioReport::passed() const {
  return std::all_of(assertions.begin(), assertions.end(),
                     [](const Assertion& a) { return a.pass; });
}

std::string ScenarioReport::to_string() const {
  std::string out;
  for (const auto& a : assertions) {
    out += "ASSERT " + a.name + ": " + (a.pass ? "PASS" : "FAIL") + " (expected=" + a.expected +
           ", got=" + a.got + ")\n";
  }
  out += "RESULT " + id + ": " + (passed() ? "PASS" : "FAIL") + "\n";
  return out;
}

namespace {

using Tuples = std::vector<std::vector<std::string>>;

class Recorder {
 public:
  explicit Recorder(ScenarioReport& r) : r_(r) {}

  void eq(std::string name, const std::string& expected, const std::string& got) {
    r_.assertions.push_back({std::move(name), expected, got, expected == got});
  }
  void eq(std::string name, const SubsetRepr& expected, const SubsetRepr& got) {
    eq(std::move(name), expected.to_string(), got.to_string());
  }
  void eq(std::string name, std::size_t expected, std::size_t got) {
    eq(std::move(name), std::to_string(expected), std::to_string(got));
  }
  void is(std::string name, bool expected, bool got) {
    eq(std::move(name), std::string(expected ? "true" : "false"), got ? "true" : "false");
  }

 private:
  ScenarioReport& r_;
};

SubsetRepr set(const LanguagePtr& lang, std::initializer_list<std::string_view> toks) {
  return SubsetRepr::finite(lang, toks);
}

TupleRule relation(std::string id, const Tuples& tuples) {
  TupleRule r{std::move(id), tuples.front().size(), {}};
  for (const auto& t : tuples) {
    RuleTuple tuple;
    for (const auto& tok : t) tuple.emplace_back(tok);
    r.tuples.push_back(std::move(tuple));
  }
  return r;
}

RuleSystem system_of(std::string name, const LanguagePtr& lang, std::vector<TupleRule> rels) {
  std::vector<Rule> rules(rels.begin(), rels.end());
  return RuleSystem(std::move(name), lang, std::move(rules));
}

SubsetRepr saturated(const RuleSystem& s, const SubsetRepr& x) { return saturate(s, x).closure; }

// Same set of relations, each compared extensionally.
bool same_relations(const RuleSystem& a, const RuleSystem& b) {
  auto covered = [](const RuleSystem& p, const RuleSystem& q) {
    for (const auto& r : p.rules()) {
      bool found = false;
      for (const auto& s : q.rules()) found = found || extensionally_equal(r, s);
      if (!found) return false;
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

std::string count_of(std::size_t n, std::size_t total) {
  return std::to_string(n) + "/" + std::to_string(total);
}

// ------------------------------------------------------------------------

void theorem_2_1(Recorder& rec, const ScenarioOptions& opt) {
  const std::size_t trials = opt.trials.value_or(200);
  gen::Rng rng(opt.seed);
  LanguagePtr lang = gen::letters(5);
  std::size_t ok = 0, witnesses = 0, checked = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    RuleSystem s = gen::random_system(rng, lang);
    if (check_axioms(ConsequenceOperator::rule_backed(s), lang, 5).finite_consequence_operator()) {
      ++ok;
    }
    for (const auto& x : power_set(lang, 5)) {
      SaturationResult r = saturate(s, x);
      for (const auto& [e, d] : r.witness) {
        ++witnesses;
        if (check_derivation(s, x, d).valid && d.conclusion() == e) ++checked;
      }
    }
  }
  rec.eq("systems generating finite consequence operators", count_of(trials, trials),
         count_of(ok, trials));
  rec.eq("witnesses passing check_derivation", count_of(witnesses, witnesses),
         count_of(checked, witnesses));
}

RuleSystem steps_system() {
  LanguagePtr lang = Language::explicit_set({"x1", "x2", "a", "b"});
  return system_of("steps", lang, {relation("R", {{"x1", "x2", "a"}}), relation("S", {{"a", "b"}})});
}

void example_2_2(Recorder& rec, const ScenarioOptions&) {
  RuleSystem s = steps_system();
  const LanguagePtr& lang = s.language();
  ConsequenceOperator d = ConsequenceOperator::bounded_steps(s, 3);
  SubsetRepr x = set(lang, {"x1", "x2"});
  SubsetRepr dx = d(x);
  rec.eq("D({x1,x2})", set(lang, {"x1", "x2", "a"}), dx);
  rec.eq("D(D({x1,x2}))", set(lang, {"x1", "x2", "a", "b"}), d(dx));
  AxiomReport rep = check_axioms(d, lang);
  rec.is("D idempotent", false, rep.idempotent);
  rec.eq("idempotence counterexample",
         "idempotent " + x.to_string(),
         rep.counterexample ? rep.counterexample->axiom + " " + rep.counterexample->inputs.at(0).to_string()
                            : "none");
  auto steps = [&](const char* goal) {
    auto m = min_derivation_size(s, x, Element(goal), 8);
    return m ? std::to_string(*m) : "none";
  };
  rec.eq("min steps to a", "3", steps("a"));
  rec.eq("min steps to b", "4", steps("b"));
  rec.eq("min steps to x1", "1", steps("x1"));
  rec.is("unbounded operator is a finite consequence operator", true,
         check_axioms(ConsequenceOperator::rule_backed(s), lang).finite_consequence_operator());
}

void cup_not_join(Recorder& rec, const ScenarioOptions&) {
  LanguagePtr lang = Language::explicit_set({"a", "b", "c", "d"});
  RuleSystem bs = system_of("B", lang, {relation("R1", {{"a", "b"}, {"c", "d"}})});
  RuleSystem rs = system_of("R", lang, {relation("R1", {{"a", "c"}})});
  auto b = ConsequenceOperator::rule_backed(bs);
  auto r = ConsequenceOperator::rule_backed(rs);
  auto k = cup_join(b, r);
  SubsetRepr a = set(lang, {"a"});
  rec.eq("K({a})", set(lang, {"a", "b", "c"}), k(a));
  rec.eq("K(K({a}))", set(lang, {"a", "b", "c", "d"}), k(k(a)));
  rec.eq("B({a,b,c})", set(lang, {"a", "b", "c", "d"}), b(set(lang, {"a", "b", "c"})));
  rec.is("K idempotent", false, check_axioms(k, lang).idempotent);
  rec.eq("sup_w(B,R)({a})", set(lang, {"a", "b", "c", "d"}), sup_w({b, r}, lang)(a));

  RuleSystem b2s = system_of("B2", lang, {relation("R", {{"a", "c"}}), relation("S", {{"a", "b", "c", "d"}})});
  auto b2 = ConsequenceOperator::rule_backed(b2s);
  CSystemFamily fam = closed_systems(b2, lang);
  SubsetRepr u = b2(set(lang, {"b"})).unite(b2(a));
  rec.eq("B({b}) u B({a})", set(lang, {"a", "b", "c"}), u);
  rec.is("{a,b,c} is a C-system", false, fam.contains(u));
  rec.eq("B({b}) (+) B({a})", set(lang, {"a", "b", "c", "d"}),
         join_uplus(fam, b2(set(lang, {"b"})), b2(a)));
}

void meet_rules_counterexample(Recorder& rec, const ScenarioOptions&) {
  LanguagePtr lang = Language::explicit_set({"a", "b", "c", "d"});
  SubsetRepr a = set(lang, {"a"});
  RuleSystem c = system_of("C", lang, {relation("R1", {{"a", "b"}})});
  RuleSystem d = system_of("D", lang, {relation("R1", {{"a", "b"}, {"b", "c"}})});
  RuleSystem cd = intersect_systems({c, d});
  auto meet_cd = meet({ConsequenceOperator::rule_backed(c), ConsequenceOperator::rule_backed(d)});
  rec.eq("relations in RI_C n RI_D", 0, cd.rules().size());
  rec.is("RI_C n RI_D generates I", true,
         equal_ops(ConsequenceOperator::rule_backed(cd), ConsequenceOperator::identity(lang), lang));
  rec.eq("saturate(RI_C n RI_D)({a})", a, saturated(cd, a));
  rec.eq("(C meet D)({a})", set(lang, {"a", "b"}), meet_cd(a));

  RuleSystem e = system_of("E", lang, {relation("R1", {{"a", "b"}, {"b", "c"}})});
  RuleSystem f = system_of("F", lang, {relation("R1", {{"a", "b"}, {"b", "d"}, {"d", "c"}})});
  RuleSystem ef = intersect_rulewise(e, f);
  auto meet_ef = meet({ConsequenceOperator::rule_backed(e), ConsequenceOperator::rule_backed(f)});
  const auto* r = std::get_if<TupleRule>(&ef.rules().at(0));
  rec.eq("tuples in RI_E n1 RI_F", 1, r ? r->tuples.size() : 0);
  rec.eq("saturate(RI_E n1 RI_F)({a})", set(lang, {"a", "b"}), saturated(ef, a));
  rec.eq("(E meet F)({a})", set(lang, {"a", "b", "c"}), meet_ef(a));
  rec.is("RI_E n1 RI_F generates E meet F", false,
         equal_ops(ConsequenceOperator::rule_backed(ef), meet_ef, lang));
}

// ------------------------------------------------------------------------

void example_3_1(Recorder& rec, const ScenarioOptions& opt) {
  const std::size_t trials = opt.trials.value_or(40);
  LanguagePtr lang = Language::explicit_set({"a", "b", "c", "d"});
  RuleSystem s1 = system_of("S1", lang, {relation("R1", {{"a", "b"}})});
  RuleSystem s2 = system_of("S2", lang, {relation("R1", {{"a", "b"}}), relation("R2", {{"b", "c"}})});
  RuleSystem s3 = system_of("S3", lang, {relation("R1", {{"a", "b"}}), relation("R2", {{"c", "d"}})});
  RuleSystem inter = intersect_systems({s1, s2, s3});
  std::vector<ConsequenceOperator> ops{ConsequenceOperator::rule_backed(s1),
                                       ConsequenceOperator::rule_backed(s2),
                                       ConsequenceOperator::rule_backed(s3)};
  rec.is("intersection equals RI_1", true, same_relations(inter, s1));
  rec.is("generated operator equals the meet", true,
         equal_ops(ConsequenceOperator::rule_backed(inter), meet(ops), lang));

  gen::Rng rng(opt.seed);
  LanguagePtr l5 = gen::letters(5);
  std::size_t guarded = 0, agree = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    RuleSystem g = gen::random_system(rng, l5);
    std::vector<RuleSystem> family{g};
    std::vector<ConsequenceOperator> fops{ConsequenceOperator::rule_backed(g)};
    std::size_t extra = 1 + gen::below(rng, 3);
    for (std::size_t k = 0; k < extra; ++k) {
      std::vector<Rule> rules = g.rules();
      RuleSystem more = gen::random_system(rng, l5);
      for (const auto& r : more.rules()) {
        Rule copy = r;
        std::visit([&](auto& x) { x.id = "X" + std::to_string(rules.size()); }, copy);
        rules.push_back(std::move(copy));
      }
      family.emplace_back("member", l5, std::move(rules));
      fops.push_back(ConsequenceOperator::rule_backed(family.back()));
    }
    RuleSystem in = intersect_systems(family);
    if (!std::any_of(family.begin(), family.end(),
                     [&](const RuleSystem& s) { return same_relations(in, s); })) {
      continue;
    }
    ++guarded;
    if (equal_ops(ConsequenceOperator::rule_backed(in), meet(fops), l5, 5)) ++agree;
  }
  rec.eq("random families meeting the guard where intersection generates the meet",
         count_of(guarded, guarded), count_of(agree, guarded));
}

void example_3_2(Recorder& rec, const ScenarioOptions&) {
  LanguagePtr lang = gen::letters(5);
  const auto subsets = power_set(lang, 5);
  std::size_t pair_eq = 0, prime_eq = 0, pair_ax = 0, prime_ax = 0, total = 0;
  for (const auto& x : subsets) {
    for (const auto& y : subsets) {
      ++total;
      auto cp = ConsequenceOperator::cpair(x, y);
      auto cq = ConsequenceOperator::cprime(x, y);
      if (equal_ops(cp, ConsequenceOperator::rule_backed(cpair_system(x, y)), lang, 5)) ++pair_eq;
      if (equal_ops(cq, ConsequenceOperator::rule_backed(cprime_system(x, y)), lang, 5)) ++prime_eq;
      if (check_axioms(cp, lang, 5).finite_consequence_operator()) ++pair_ax;
      if (check_axioms(cq, lang, 5).finite_consequence_operator()) ++prime_ax;
    }
  }
  rec.eq("C(X,Y) equals its generated system", count_of(total, total), count_of(pair_eq, total));
  rec.eq("C'(X,Y) equals its generated system", count_of(total, total), count_of(prime_eq, total));
  rec.eq("C(X,Y) passes all axioms", count_of(total, total), count_of(pair_ax, total));
  rec.eq("C'(X,Y) passes all axioms", count_of(total, total), count_of(prime_ax, total));

  SubsetRepr none = SubsetRepr::empty(lang);
  SubsetRepr xa = set(lang, {"a"});
  auto id = ConsequenceOperator::identity(lang);
  rec.is("C(X,{}) is I", true, equal_ops(ConsequenceOperator::cpair(xa, none), id, lang, 5));
  rec.is("C({},Y) is I", true, equal_ops(ConsequenceOperator::cpair(none, xa), id, lang, 5));
  rec.is("C'({},Y) is I", true,
         equal_ops(ConsequenceOperator::cprime(none, set(lang, {"b"})), id, lang, 5));
  rec.eq("C'({a},{})({b})", set(lang, {"a", "b"}),
         ConsequenceOperator::cprime(xa, none)(set(lang, {"b"})));
  const auto& rules = cprime_system(xa, none).rules();
  rec.is("C'({a},{}) system is one axiom relation", true,
         rules.size() == 1 && std::holds_alternative<UnaryRule>(rules[0]));
}

void example_3_3(Recorder& rec, const ScenarioOptions& opt) {
  LanguagePtr lang = Language::enumerated("f");
  SubsetRepr x = SubsetRepr::finite(lang, {"f0"});
  auto family = std::make_shared<CPrimeChainFamily>(lang, x);
  auto inf = ConsequenceOperator::meet_family(family);
  SubsetRepr y = family->chain_union();

  rec.is("f0 in inf(Cofinite{f0})", true, inf(y).contains(Element("f0")));
  rec.eq("inf(Cofinite{f0})", SubsetRepr::full(lang), inf(y));
  std::size_t members_ok = 0;
  for (std::size_t n = 1; n <= 16; ++n) {
    if (family->member(n)(y).contains(Element("f0"))) ++members_ok;
  }
  rec.eq("members adjoining f0 on Cofinite{f0}", "16/16", count_of(members_ok, 16));

  std::vector<SubsetRepr> finite_sets;
  for (std::uint32_t m = 0; m < 256; ++m) {
    std::vector<Element> es;
    for (std::size_t i = 0; i < 8; ++i) {
      if (m >> i & 1) es.push_back(lang->at(i + 1));
    }
    finite_sets.push_back(SubsetRepr::finite(lang, std::move(es)));
  }
  gen::Rng rng(opt.seed);
  for (std::size_t k = 0; k < 64; ++k) {
    std::vector<Element> es;
    std::size_t count = gen::below(rng, 20);
    for (std::size_t i = 0; i < count; ++i) es.push_back(lang->at(1 + gen::below(rng, 1000)));
    finite_sets.push_back(SubsetRepr::finite(lang, std::move(es)));
  }
  std::size_t excluded = 0, prefix_agree = 0;
  for (const auto& f : finite_sets) {
    if (!inf(f).contains(Element("f0"))) ++excluded;
    std::size_t top = 1;
    for (const auto& e : f.elements()) top = std::max(top, *lang->index_of(e) + 1);
    // B_top is not inside F, so a finite prefix of the meet already agrees.
    if (prefix_meet_apply(*family, f, top) == inf(f)) ++prefix_agree;
  }
  const std::size_t n = finite_sets.size();
  rec.eq("finite F with f0 not in inf(F)", count_of(n, n), count_of(excluded, n));
  rec.eq("finite F where a finite prefix meet agrees", count_of(n, n), count_of(prefix_agree, n));
  rec.is("inf(Cofinite{f0}) differs from every inf(F)", true, excluded == n);
}

std::vector<pd::Wff> prefix_hyps(std::size_t top) {
  std::vector<pd::Wff> out;
  for (std::size_t i = 1; i <= top; ++i) {
    out.push_back(pd::Wff::impl(pd::Wff::atom(i), pd::Wff::atom(0)));
    out.push_back(pd::Wff::atom(i));
  }
  return out;
}

std::vector<pd::Wff> j_hyps(std::size_t n) {
  using pd::Wff;
  return {Wff::impl(Wff::neg(Wff::atom(0)), Wff::neg(Wff::atom(n))), Wff::atom(n)};
}

// Searches, then re-checks the witness against a freshly built system.
bool derived_and_checked(const pd::PdVariant& v, const std::vector<pd::Wff>& hyps,
                         std::size_t* steps = nullptr) {
  pd::SearchResult r = pd::search(v, hyps, pd::Wff::atom(0));
  if (!r.derivation) return false;
  RuleSystem s = pd::pd_system(v, r.pool.formulas);
  std::vector<Element> hs;
  for (const auto& h : hyps) hs.push_back(pd::to_element(h));
  SubsetRepr pool = SubsetRepr::full(s.language());
  if (steps) *steps = r.derivation->size();
  return check_derivation(s, SubsetRepr::finite(s.language(), hs), *r.derivation, pool).valid &&
         r.derivation->conclusion() == pd::to_element(pd::Wff::atom(0));
}

void bounded_negatives(Recorder& rec, const char* label,
                       const std::function<pd::PdVariant(std::size_t)>& variant,
                       const std::function<std::vector<pd::Wff>(std::size_t)>& hyps) {
  for (std::size_t m = 1; m <= 3; ++m) {
    auto r = pd::certificate_non_derivable(variant(m + 1), hyps(m), pd::Wff::atom(0));
    rec.eq(std::string(label) + " P0 from M=" + std::to_string(m) + " under " +
               variant(m + 1).describe(),
           "BoundedEvidence", pd::kind_name(r.kind));
  }
}

void example_3_3_1(Recorder& rec, const ScenarioOptions&) {
  std::size_t derived = 0, total = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t top = n; top <= 4; ++top) {
      ++total;
      if (derived_and_checked(pd::PdVariant::restricted_mp(n), prefix_hyps(top))) ++derived;
    }
  }
  rec.eq("P0 derived from X_N under restricted_mp(n), N >= n", count_of(total, total),
         count_of(derived, total));

  using pd::Wff;
  auto cert = pd::certificate_non_derivable(
      pd::PdVariant::restricted_mp(1), {Wff::impl(Wff::atom(2), Wff::atom(0)), Wff::atom(1)},
      Wff::atom(0));
  rec.eq("certificate j=2 k=1 n=1", "Certified {P2=false, P1=true, P0=false}",
         pd::kind_name(cert.kind) + (cert.valuation ? " " + pd::valuation_to_string(*cert.valuation) : ""));
  std::size_t certified = 0, cases = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t j = 1; j <= 4; ++j) {
      if (j == n) continue;
      ++cases;
      auto c = pd::certificate_non_derivable(pd::PdVariant::restricted_mp(n),
                                             {Wff::impl(Wff::atom(j), Wff::atom(0)), Wff::atom(n)},
                                             Wff::atom(0));
      pd::Valuation want{{0, false}, {j, false}, {n, true}};
      if (c.kind == pd::CertificateResult::Kind::Certified && c.valuation == want) ++certified;
    }
  }
  rec.eq("certificates for j != k = n", count_of(cases, cases), count_of(certified, cases));
  bounded_negatives(rec, "3.3.1", pd::PdVariant::restricted_mp, prefix_hyps);
}

void example_3_3_2(Recorder& rec, const ScenarioOptions&) {
  std::size_t ok = 0;
  std::string sizes;
  for (std::size_t m = 1; m <= 4; ++m) {
    std::size_t steps = 0;
    if (derived_and_checked(pd::PdVariant::missing_atom(m), j_hyps(m), &steps)) ++ok;
    sizes += (m > 1 ? "," : "") + std::to_string(steps);
  }
  rec.eq("P0 derived under missing_atom(m), m=1..4", "4/4", count_of(ok, 4));
  rec.eq("derivation lengths", "5,5,5,5", sizes);
  bounded_negatives(rec, "3.3.2", pd::PdVariant::missing_atom, j_hyps);
}

void example_3_3_3(Recorder& rec, const ScenarioOptions&) {
  std::size_t ok = 0, excluded = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    if (derived_and_checked(pd::PdVariant::positive(n), j_hyps(n))) ++ok;
    auto inst = pd::instantiate_schema({pd::SchemaKind::R3Positive}, {pd::j_formula(n)});
    if (inst.empty() && pd::is_r3(pd::j_formula(n))) ++excluded;
  }
  rec.eq("P0 derived under positive(n), n=1..4", "4/4", count_of(ok, 4));
  rec.eq("J_n outside the positive fragment of R3", "4/4", count_of(excluded, 4));

  pd::FormulaPool pool = pd::subformula_closure(j_hyps(2));
  std::size_t axioms = 0, good = 0;
  for (const auto& w : pool.formulas) {
    if (pd::is_r1(w) || pd::is_r2(w)) {
      ++axioms;
      if (pd::is_tautology(w) && pd::is_tautology(pd::h_transform(w))) ++good;
    }
  }
  rec.eq("R1/R2 instances whose h-transform is a tautology", count_of(axioms, axioms),
         count_of(good, axioms));
  bounded_negatives(rec, "3.3.3", pd::PdVariant::positive, j_hyps);
}

void example_3_4(Recorder& rec, const ScenarioOptions&) {
  LanguagePtr lang = Language::explicit_set({"a", "f1", "f2", "f3", "f4"});
  SubsetRepr a = set(lang, {"a"});
  std::vector<ConsequenceOperator> ops;
  std::size_t images = 0, finite = 0;
  for (std::uint32_t m = 1; m < 16; ++m) {
    std::vector<Element> xs;
    TupleRule r{"R", 2, {}};
    for (std::size_t i = 0; i < 4; ++i) {
      if (m >> i & 1) {
        xs.push_back(lang->at(i + 1));
        r.tuples.push_back({Element("a"), lang->at(i + 1)});
      }
    }
    auto op = ConsequenceOperator::rule_backed(RuleSystem("R_X", lang, {r}));
    if (op(a) == a.unite(SubsetRepr::finite(lang, xs))) ++images;
    if (check_axioms(op, lang).finite_consequence_operator()) ++finite;
    ops.push_back(op);
  }
  std::size_t distinct = 0, pairs = 0;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      ++pairs;
      if (ops[i](a) != ops[j](a)) ++distinct;
    }
  }
  rec.eq("C_X({a}) = {a} u X", "15/15", count_of(images, 15));
  rec.eq("C_X finite consequence operators", "15/15", count_of(finite, 15));
  rec.eq("pairwise distinct on {a}", count_of(pairs, pairs), count_of(distinct, pairs));
}

std::size_t permutation_family(const RuleSystem& base, const std::string& rule,
                               std::size_t premises, const ConsequenceOperator& target,
                               std::size_t* agree) {
  std::vector<std::size_t> perm(premises);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<RuleSystem> systems;
  do {
    systems.push_back(permute_premises(base, rule, 0, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  *agree = 0;
  for (const auto& s : systems) {
    if (equal_ops(ConsequenceOperator::rule_backed(s), target, s.language())) ++*agree;
  }
  std::size_t distinct_pairs = 0;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    for (std::size_t j = i + 1; j < systems.size(); ++j) {
      if (!structurally_equal(systems[i], systems[j])) ++distinct_pairs;
    }
  }
  return distinct_pairs;
}

void example_3_5(Recorder& rec, const ScenarioOptions& opt) {
  const std::size_t trials = opt.trials.value_or(20);
  LanguagePtr lang = Language::explicit_set({"a", "b", "c", "d"});
  std::vector<Rule> ri1;
  for (std::uint32_t m = 1; m < 16; ++m) {
    std::vector<Element> xs;
    for (std::size_t i = 0; i < 4; ++i) {
      if (m >> i & 1) xs.push_back(lang->at(i));
    }
    TupleRule r{"R" + std::to_string(m), xs.size() + 1, {}};
    for (const auto& x : xs) {
      RuleTuple t = xs;
      t.push_back(x);
      r.tuples.push_back(std::move(t));
    }
    ri1.emplace_back(std::move(r));
  }
  rec.is("RI_1 generates I", true,
         equal_ops(ConsequenceOperator::rule_backed(RuleSystem("RI_1", lang, ri1)),
                   ConsequenceOperator::identity(lang), lang));

  gen::Rng rng(opt.seed);
  std::size_t round_trips = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    LanguagePtr l = gen::letters(2 + t % 3);
    ConsequenceOperator op = gen::random_operator(rng, l);
    if (equal_ops(ConsequenceOperator::rule_backed(canonical_system(op, l)), op, l)) ++round_trips;
  }
  rec.eq("canonical round trips", count_of(trials, trials), count_of(round_trips, trials));

  RuleSystem base = system_of("B", lang, {relation("R1", {{"a", "b"}, {"c", "d"}})});
  ConsequenceOperator c = ConsequenceOperator::rule_backed(base);
  RuleSystem canon = canonical_system(c, lang);
  std::size_t agree = 0;
  std::size_t d3 = permutation_family(canon, "R3", 3, c, &agree);
  rec.eq("3-premise permutations generating C", "6/6", count_of(agree, 6));
  rec.eq("3-premise permutations pairwise distinct", "15/15", count_of(d3, 15));
  std::size_t d4 = permutation_family(canon, "R4", 4, c, &agree);
  rec.eq("4-premise permutations generating C", "24/24", count_of(agree, 24));
  rec.eq("4-premise permutations pairwise distinct", "276/276", count_of(d4, 276));
}

void theorem_2_2(Recorder& rec, const ScenarioOptions& opt) {
  const std::size_t trials = opt.trials.value_or(50);
  gen::Rng rng(opt.seed);
  LanguagePtr lang = gen::letters(5);
  std::size_t ok = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::size_t k = 2 + gen::below(rng, 2);
    std::vector<RuleSystem> systems;
    std::vector<ConsequenceOperator> ops;
    for (std::size_t i = 0; i < k; ++i) {
      systems.push_back(gen::random_system(rng, lang));
      ops.push_back(ConsequenceOperator::rule_backed(systems.back()));
    }
    auto via_union = ConsequenceOperator::rule_backed(union_systems(systems));
    if (equal_ops(via_union, sup_w(ops, lang, 5), lang, 5)) ++ok;
  }
  rec.eq("union system equals sup_w", count_of(trials, trials), count_of(ok, trials));
}

void csystem_lattice(Recorder& rec, const ScenarioOptions& opt) {
  const std::size_t trials = opt.trials.value_or(50);
  gen::Rng rng(opt.seed);
  std::size_t closed = 0, least = 0, recovered = 0, laws = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    LanguagePtr lang = gen::letters(3 + gen::below(rng, 3));
    ConsequenceOperator op = gen::random_operator(rng, lang);
    CSystemFamily fam = closed_systems(op, lang, 5);
    bool cap_ok = true, join_ok = true, law_ok = true;
    for (const auto& x : fam.members) {
      for (const auto& y : fam.members) {
        cap_ok = cap_ok && fam.contains(x.intersect(y));
        SubsetRepr j = join_uplus(fam, x, y);
        // Brute-force minimum: the member above X u Y inside every other one.
        std::optional<SubsetRepr> best;
        for (const auto& z : fam.members) {
          if (!x.unite(y).subset_of(z)) continue;
          bool below_all = true;
          for (const auto& w : fam.members) {
            if (x.unite(y).subset_of(w) && !z.subset_of(w)) below_all = false;
          }
          if (below_all) best = z;
        }
        join_ok = join_ok && best && *best == j;
        law_ok = law_ok && j == join_uplus(fam, y, x) && join_uplus(fam, x, x) == x;
      }
    }
    if (cap_ok) ++closed;
    if (join_ok) ++least;
    if (law_ok) ++laws;
    if (equal_ops(from_closure_family(fam.members, lang), op, lang, 5)) ++recovered;
  }
  rec.eq("families closed under intersection", count_of(trials, trials), count_of(closed, trials));
  rec.eq("join is the least closed superset", count_of(trials, trials), count_of(least, trials));
  rec.eq("join commutative and idempotent", count_of(trials, trials), count_of(laws, trials));
  rec.eq("operator recovered from its family", count_of(trials, trials),
         count_of(recovered, trials));

  LanguagePtr lang = Language::explicit_set({"a", "b", "c", "d"});
  auto id = closed_systems(ConsequenceOperator::identity(lang), lang);
  auto unit = closed_systems(ConsequenceOperator::unit(lang), lang);
  rec.eq("closed systems of I", 16, id.members.size());
  rec.eq("closed systems of U", 1, unit.members.size());
}

using Runner = void (*)(Recorder&, const ScenarioOptions&);

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r{
      {"2.1-axioms", theorem_2_1},
      {"2.2", example_2_2},
      {"cup-not-join", cup_not_join},
      {"meet-rules-counterexample", meet_rules_counterexample},
      {"3.1", example_3_1},
      {"3.2", example_3_2},
      {"3.3", example_3_3},
      {"3.3.1", example_3_3_1},
      {"3.3.2", example_3_3_2},
      {"3.3.3", example_3_3_3},
      {"3.4-construction", example_3_4},
      {"3.5", example_3_5},
      {"thm-2.2-random", theorem_2_2},
      {"csystem-lattice", csystem_lattice},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, _] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

ScenarioReport run_scenario(std::string_view id, const ScenarioOptions& options) {
  for (const auto& [name, run] : registry()) {
    if (name != id) continue;
    ScenarioReport report{name, {}};
    Recorder rec(report);
    run(rec, options);
    return report;
  }
  std::string list;
  for (const auto& name : scenario_ids()) list += " " + name;
  throw UsageError("unknown scenario '" + std::string(id) + "'; known:" + list);
}

std::vector<ScenarioReport> run_scenarios(const std::vector<std::string>& ids,
                                          const ScenarioOptions& options) {
  for (const auto& id : ids) {
    if (std::find(scenario_ids().begin(), scenario_ids().end(), id) == scenario_ids().end()) {
      run_scenario(id, options);  // throws the usage error
    }
  }
  std::vector<std::future<ScenarioReport>> jobs;
  for (const auto& id : ids) {
    jobs.push_back(std::async(std::launch::async, [id, options] { return run_scenario(id, options); }));
  }
  std::vector<ScenarioReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace conseq
