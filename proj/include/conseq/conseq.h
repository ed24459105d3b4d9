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

#ifndef CONSEQ_CONSEQ_H_
#define CONSEQ_CONSEQ_H_

#include <stddef.h>
#include <stdint.h>

#if defined(CQ_BUILDING_LIBRARY)
#define CQ_API __attribute__((visibility("default")))
#else
#define CQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cq_status {
  CQ_OK = 0,
  CQ_FALSE = 1,  // the call worked and the answer is negative
  CQ_ERR_USAGE = 2,
  CQ_ERR_PARSE = 3,
  CQ_ERR_DOMAIN = 4,
  CQ_ERR_INTERNAL = 5
} cq_status;

typedef struct cq_system cq_system;

typedef enum cq_sup_via { CQ_SUP_UNION = 0, CQ_SUP_CLOSED_SYSTEMS = 1 } cq_sup_via;

// Message of the last failed call on this thread; never NULL.
CQ_API const char* cq_last_error(void);

// Frees any char* a cq_ function returned through an out parameter.
CQ_API void cq_string_free(char* s);

CQ_API cq_status cq_system_load(const char* path, cq_system** out);
CQ_API cq_status cq_system_parse(const char* text, cq_system** out);
CQ_API cq_status cq_system_serialize(const cq_system* system, char** out);
CQ_API cq_status cq_system_save(const cq_system* system, const char* path);
CQ_API void cq_system_free(cq_system* system);

// Element lists are comma-separated tokens; results are one element per
// line, sorted.
CQ_API cq_status cq_saturate(const cq_system* system, const char* hyps, char** out);

// A witness derivation of goal. With max_steps > 0 the derivation is a
// shortest one of at most max_steps steps. CQ_FALSE when there is none.
CQ_API cq_status cq_derive(const cq_system* system, const char* hyps, const char* goal,
                           size_t max_steps, char** out);

CQ_API cq_status cq_bounded(const cq_system* system, const char* hyps, size_t steps, char** out);

// The axiom report; CQ_FALSE unless all four properties hold.
CQ_API cq_status cq_check_axioms(const cq_system* system, size_t bound, char** out);

CQ_API cq_status cq_meet(const cq_system* const* systems, size_t count, const char* hyps,
                         char** out);
CQ_API cq_status cq_sup(const cq_system* const* systems, size_t count, const char* hyps,
                        cq_sup_via via, size_t bound, char** out);

// Closed systems, one "{a,b}" per line, by size.
CQ_API cq_status cq_csystems(const cq_system* system, size_t bound, char** out);

// CQ_FALSE when not a tautology; *out then holds a falsifying valuation.
CQ_API cq_status cq_pd_is_tautology(const char* formula, char** out);
CQ_API cq_status cq_pd_h(const char* formula, char** out);

// variant: standard, restricted_mp, missing_atom or positive. hyps are
// comma-separated formulas. Zero caps select the defaults; max_steps 0 is
// unbounded. CQ_OK with a derivation, or CQ_FALSE with a certificate or
// bounded evidence.
CQ_API cq_status cq_pd_search(const char* variant, size_t n, const char* hyps, const char* goal,
                              size_t formula_cap, size_t pool_cap, size_t max_steps, char** out);

CQ_API cq_status cq_scenario_list(char** out);
// trials 0 keeps each scenario's default. CQ_FALSE when an assertion fails.
CQ_API cq_status cq_run_scenario(const char* id, uint64_t seed, size_t trials, char** out);
// Comma-separated ids, run concurrently; "all" runs the registry.
CQ_API cq_status cq_run_scenarios(const char* ids, uint64_t seed, size_t trials, char** out);

#ifdef __cplusplus
}
#endif

#endif  // CONSEQ_CONSEQ_H_
