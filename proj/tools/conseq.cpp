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

// Command-line front end over the C API.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conseq/conseq.h"

namespace {

struct SystemHandle {
  cq_system* p = nullptr;
  ~SystemHandle() { cq_system_free(p); }
};

// 0 success, 1 negative answer, 2 usage, parse or domain error.
int exit_code(cq_status s) {
  if (s == CQ_OK) return 0;
  if (s == CQ_FALSE) return 1;
  return 2;
}

int report(cq_status s, char*& text) {
  if (s == CQ_OK || s == CQ_FALSE) {
    std::fputs(text ? text : "", stdout);
    cq_string_free(text);
  } else {
    std::fprintf(stderr, "error: %s\n", cq_last_error());
  }
  return exit_code(s);
}

int load(const std::string& path, SystemHandle& h) {
  cq_status s = cq_system_load(path.c_str(), &h.p);
  if (s != CQ_OK) std::fprintf(stderr, "error: %s\n", cq_last_error());
  return exit_code(s);
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conseq: logic-systems, consequence operators and their lattice"};
  app.require_subcommand(1);

  std::string system_path, systems_csv, hyp, goal, via = "union";
  std::size_t bound = 6, steps = 0, max_steps = 0;

  auto* check = app.add_subcommand("check-axioms", "Check the generated operator's axioms");
  check->add_option("--system", system_path, "System file")->required();
  check->add_option("--bound", bound, "Largest language checked exhaustively");

  auto* sat = app.add_subcommand("saturate", "Print the closure of the hypotheses");
  sat->add_option("--system", system_path)->required();
  sat->add_option("--hyp", hyp, "Comma-separated elements");

  auto* derive = app.add_subcommand("derive", "Print a derivation of the goal");
  derive->add_option("--system", system_path)->required();
  derive->add_option("--hyp", hyp);
  derive->add_option("--goal", goal)->required();
  derive->add_option("--max-steps", max_steps, "Shortest derivation within this many steps");

  auto* bounded = app.add_subcommand("bounded", "Print what is deducible in at most n steps");
  bounded->add_option("--system", system_path)->required();
  bounded->add_option("--hyp", hyp);
  bounded->add_option("--steps", steps)->required();

  auto* meet = app.add_subcommand("meet", "Apply the meet of the systems' operators");
  meet->add_option("--systems", systems_csv, "Comma-separated system files")->required();
  meet->add_option("--hyp", hyp);

  auto* sup = app.add_subcommand("sup", "Apply the supremum of the systems' operators");
  sup->add_option("--systems", systems_csv)->required();
  sup->add_option("--hyp", hyp);
  sup->add_option("--via", via, "union or closed-systems")
      ->check(CLI::IsMember({"union", "closed-systems"}));
  sup->add_option("--bound", bound);

  auto* cs = app.add_subcommand("csystems", "List the closed systems");
  cs->add_option("--system", system_path)->required();
  cs->add_option("--bound", bound);

  auto* pd = app.add_subcommand("pd", "Propositional tools");
  pd->require_subcommand(1);
  std::string formula, variant = "standard";
  std::size_t n = 1, pool_cap = 0, formula_cap = 0;
  auto* taut = pd->add_subcommand("taut", "Decide whether a formula is a tautology");
  taut->add_option("formula", formula)->required();
  auto* h = pd->add_subcommand("h", "Erase every negation");
  h->add_option("formula", formula)->required();
  auto* search = pd->add_subcommand("search", "Bounded proof search");
  search->add_option("--variant", variant, "standard, restricted_mp, missing_atom or positive");
  search->add_option("--n", n, "Variant index");
  search->add_option("--hyp", hyp, "Comma-separated formulas");
  search->add_option("--goal", goal)->required();
  search->add_option("--pool-cap", pool_cap, "Most formulas in the pool");
  search->add_option("--formula-cap", formula_cap, "Longest printed formula in the pool");
  search->add_option("--max-steps", max_steps, "Saturation rounds");

  auto* example = app.add_subcommand("example", "Run a scenario (or 'all', or 'list')");
  std::string id;
  std::uint64_t seed = 7;
  std::size_t trials = 0;
  example->add_option("id", id)->required();
  example->add_option("--seed", seed);
  example->add_option("--trials", trials);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  char* out = nullptr;
  SystemHandle sys;
  if (*check || *sat || *derive || *bounded || *cs) {
    if (int rc = load(system_path, sys)) return rc;
  }
  if (*check) return report(cq_check_axioms(sys.p, bound, &out), out);
  if (*sat) return report(cq_saturate(sys.p, hyp.c_str(), &out), out);
  if (*derive) return report(cq_derive(sys.p, hyp.c_str(), goal.c_str(), max_steps, &out), out);
  if (*bounded) return report(cq_bounded(sys.p, hyp.c_str(), steps, &out), out);
  if (*cs) return report(cq_csystems(sys.p, bound, &out), out);

  if (*meet || *sup) {
    std::vector<std::unique_ptr<SystemHandle>> handles;
    std::vector<const cq_system*> ptrs;
    for (const auto& path : split(systems_csv)) {
      handles.push_back(std::make_unique<SystemHandle>());
      if (int rc = load(path, *handles.back())) return rc;
      ptrs.push_back(handles.back()->p);
    }
    if (*meet) return report(cq_meet(ptrs.data(), ptrs.size(), hyp.c_str(), &out), out);
    cq_sup_via how = via == "union" ? CQ_SUP_UNION : CQ_SUP_CLOSED_SYSTEMS;
    return report(cq_sup(ptrs.data(), ptrs.size(), hyp.c_str(), how, bound, &out), out);
  }

  if (*taut) return report(cq_pd_is_tautology(formula.c_str(), &out), out);
  if (*h) return report(cq_pd_h(formula.c_str(), &out), out);
  if (*search) {
    return report(cq_pd_search(variant.c_str(), n, hyp.c_str(), goal.c_str(), formula_cap,
                               pool_cap, max_steps, &out),
                  out);
  }

  if (*example) {
    if (id == "list") return report(cq_scenario_list(&out), out);
    if (id == "all") return report(cq_run_scenarios("all", seed, trials, &out), out);
    return report(cq_run_scenario(id.c_str(), seed, trials, &out), out);
  }
  return 2;
}
