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

#include "conseq/conseq.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "conseq/consequence.hpp"
#include "conseq/csystems.hpp"
#include "conseq/error.hpp"
#include "conseq/logic_system.hpp"
#include "conseq/propositional.hpp"
#include "conseq/scenarios.hpp"
#include "conseq/system_file.hpp"

struct cq_system {
  conseq::RuleSystem system;
};

namespace {

using namespace conseq;

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
cq_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const ParseError& e) {
    last_error = e.what();
    return CQ_ERR_PARSE;
  } catch (const DomainError& e) {
    last_error = e.what();
    return CQ_ERR_DOMAIN;
  } catch (const UsageError& e) {
    last_error = e.what();
    return CQ_ERR_USAGE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CQ_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return CQ_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw UsageError(std::string(what) + " is NULL");
}

std::vector<std::string> split_csv(const char* s) {
  std::vector<std::string> out;
  if (!s) return out;
  std::string cur;
  for (const char* c = s;; ++c) {
    if (*c == ',' || *c == '\0') {
      auto b = cur.find_first_not_of(" \t");
      if (b != std::string::npos) out.push_back(cur.substr(b, cur.find_last_not_of(" \t") - b + 1));
      cur.clear();
      if (*c == '\0') break;
    } else {
      cur += *c;
    }
  }
  return out;
}

SubsetRepr hyp_set(const RuleSystem& s, const char* hyps) {
  std::vector<Element> es;
  for (const auto& t : split_csv(hyps)) {
    if (!Element::is_valid_token(t)) throw ParseError("invalid element '" + t + "'", 0);
    Element e(t);
    if (!s.language()->contains(e)) throw DomainError("unknown element '" + t + "'");
    es.push_back(std::move(e));
  }
  return SubsetRepr::finite(s.language(), std::move(es));
}

std::string lines(const SubsetRepr& s) {
  std::string out;
  for (const auto& e : s.elements()) out += e.token() + "\n";
  return out;
}

cq_status emit(char** out, const std::string& text, cq_status status = CQ_OK) {
  need(out, "out");
  *out = dup(text);
  if (!*out) throw std::bad_alloc();
  return status;
}

std::vector<ConsequenceOperator> operators(const cq_system* const* systems, size_t count) {
  need(systems, "systems");
  if (count == 0) throw UsageError("at least one system is required");
  std::vector<ConsequenceOperator> ops;
  for (size_t i = 0; i < count; ++i) {
    need(systems[i], "system");
    ops.push_back(ConsequenceOperator::rule_backed(systems[i]->system));
  }
  return ops;
}

}  // namespace

extern "C" {

const char* cq_last_error(void) { return last_error.c_str(); }

void cq_string_free(char* s) { std::free(s); }

cq_status cq_system_load(const char* path, cq_system** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new cq_system{load_system(path)};
    return CQ_OK;
  });
}

cq_status cq_system_parse(const char* text, cq_system** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new cq_system{parse_system(text)};
    return CQ_OK;
  });
}

cq_status cq_system_serialize(const cq_system* system, char** out) {
  return guarded([&] {
    need(system, "system");
    return emit(out, serialize_system(system->system));
  });
}

cq_status cq_system_save(const cq_system* system, const char* path) {
  return guarded([&] {
    need(system, "system");
    need(path, "path");
    save_system(system->system, path);
    return CQ_OK;
  });
}

void cq_system_free(cq_system* system) { delete system; }

cq_status cq_saturate(const cq_system* system, const char* hyps, char** out) {
  return guarded([&] {
    need(system, "system");
    const RuleSystem& s = system->system;
    return emit(out, lines(saturate(s, hyp_set(s, hyps)).closure));
  });
}

cq_status cq_derive(const cq_system* system, const char* hyps, const char* goal,
                    size_t max_steps, char** out) {
  return guarded([&] {
    need(system, "system");
    need(goal, "goal");
    const RuleSystem& s = system->system;
    SubsetRepr h = hyp_set(s, hyps);
    if (!Element::is_valid_token(goal)) throw ParseError(std::string("invalid element '") + goal + "'", 0);
    Element g(goal);
    if (!s.language()->contains(g)) throw DomainError("unknown element '" + g.token() + "'");
    if (max_steps > 0) {
      if (auto d = minimal_derivation(s, h, g, max_steps)) return emit(out, d->to_string());
      return emit(out, "no derivation of " + g.token() + " within " + std::to_string(max_steps) +
                           " steps\n", CQ_FALSE);
    }
    SaturationResult r = saturate(s, h);
    auto it = r.witness.find(g);
    if (it != r.witness.end()) return emit(out, it->second.to_string());
    return emit(out, g.token() + " is not derivable\n", CQ_FALSE);
  });
}

cq_status cq_bounded(const cq_system* system, const char* hyps, size_t steps, char** out) {
  return guarded([&] {
    need(system, "system");
    if (steps < 1) throw UsageError("--steps must be at least 1");
    const RuleSystem& s = system->system;
    return emit(out, lines(bounded_consequences(s, hyp_set(s, hyps), steps)));
  });
}

cq_status cq_check_axioms(const cq_system* system, size_t bound, char** out) {
  return guarded([&] {
    need(system, "system");
    const RuleSystem& s = system->system;
    AxiomReport r = check_axioms(ConsequenceOperator::rule_backed(s), s.language(),
                                 bound ? bound : kDefaultExhaustiveBound);
    return emit(out, r.to_string(), r.finite_consequence_operator() ? CQ_OK : CQ_FALSE);
  });
}

cq_status cq_meet(const cq_system* const* systems, size_t count, const char* hyps, char** out) {
  return guarded([&] {
    auto ops = operators(systems, count);
    return emit(out, lines(meet(ops)(hyp_set(systems[0]->system, hyps))));
  });
}

cq_status cq_sup(const cq_system* const* systems, size_t count, const char* hyps,
                 cq_sup_via via, size_t bound, char** out) {
  return guarded([&] {
    auto ops = operators(systems, count);
    const RuleSystem& first = systems[0]->system;
    SubsetRepr h = hyp_set(first, hyps);
    if (via == CQ_SUP_UNION) {
      std::vector<RuleSystem> all;
      for (size_t i = 0; i < count; ++i) all.push_back(systems[i]->system);
      return emit(out, lines(saturate(union_systems(all), h).closure));
    }
    if (via != CQ_SUP_CLOSED_SYSTEMS) throw UsageError("unknown sup method");
    return emit(out, lines(sup_w(ops, first.language(), bound ? bound : kDefaultExhaustiveBound)(h)));
  });
}

cq_status cq_csystems(const cq_system* system, size_t bound, char** out) {
  return guarded([&] {
    need(system, "system");
    const RuleSystem& s = system->system;
    CSystemFamily fam = closed_systems(ConsequenceOperator::rule_backed(s), s.language(),
                                       bound ? bound : kDefaultExhaustiveBound);
    std::string text;
    for (const auto& m : fam.members) text += m.to_string() + "\n";
    return emit(out, text);
  });
}

cq_status cq_pd_is_tautology(const char* formula, char** out) {
  return guarded([&] {
    need(formula, "formula");
    pd::Wff w = pd::parse(formula);
    if (auto v = pd::falsifying_valuation(w)) {
      return emit(out, "not a tautology: " + pd::valuation_to_string(*v) + "\n", CQ_FALSE);
    }
    return emit(out, "tautology\n");
  });
}

cq_status cq_pd_h(const char* formula, char** out) {
  return guarded([&] {
    need(formula, "formula");
    return emit(out, pd::print(pd::h_transform(pd::parse(formula))) + "\n");
  });
}

cq_status cq_pd_search(const char* variant, size_t n, const char* hyps, const char* goal,
                       size_t formula_cap, size_t pool_cap, size_t max_steps, char** out) {
  return guarded([&] {
    need(variant, "variant");
    need(goal, "goal");
    pd::PdVariant v = pd::parse_variant(variant, n);
    std::vector<pd::Wff> hs;
    for (const auto& t : split_csv(hyps)) hs.push_back(pd::parse(t));
    pd::Wff g = pd::parse(goal);
    pd::SearchOptions opt;
    if (formula_cap) opt.formula_cap = formula_cap;
    if (pool_cap) opt.pool_cap = pool_cap;
    if (max_steps) opt.max_steps = max_steps;
    pd::SearchResult r = pd::search(v, hs, g, opt);
    if (r.derivation) {
      return emit(out, "Derived (pool=" + std::to_string(r.pool.formulas.size()) + ")\n" +
                           r.derivation->to_string());
    }
    return emit(out, pd::certificate_non_derivable(v, hs, g, opt).to_string(), CQ_FALSE);
  });
}

cq_status cq_scenario_list(char** out) {
  return guarded([&] {
    std::string text;
    for (const auto& id : scenario_ids()) text += id + "\n";
    return emit(out, text);
  });
}

cq_status cq_run_scenario(const char* id, uint64_t seed, size_t trials, char** out) {
  return guarded([&] {
    need(id, "id");
    ScenarioOptions opt{seed, trials ? std::optional<std::size_t>(trials) : std::nullopt};
    ScenarioReport r = run_scenario(id, opt);
    return emit(out, r.to_string(), r.passed() ? CQ_OK : CQ_FALSE);
  });
}

cq_status cq_run_scenarios(const char* ids, uint64_t seed, size_t trials, char** out) {
  return guarded([&] {
    need(ids, "ids");
    std::vector<std::string> list = split_csv(ids);
    if (list.size() == 1 && list[0] == "all") list = scenario_ids();
    if (list.empty()) throw UsageError("no scenario ids given");
    ScenarioOptions opt{seed, trials ? std::optional<std::size_t>(trials) : std::nullopt};
    std::string text;
    bool ok = true;
    for (const auto& r : run_scenarios(list, opt)) {
      text += r.to_string();
      ok = ok && r.passed();
    }
    return emit(out, text, ok ? CQ_OK : CQ_FALSE);
  });
}

}  // extern "C"
