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

#include "conseq/error.hpp"
#include "conseq/scenarios.hpp"

using namespace conseq;

class Registry : public ::testing::TestWithParam<std::string> {};

TEST_P(Registry, Passes) {
  ScenarioReport r = run_scenario(GetParam());
  EXPECT_EQ(r.id, GetParam());
  EXPECT_FALSE(r.assertions.empty());
  EXPECT_TRUE(r.passed()) << r.to_string();
  std::string text = r.to_string();
  EXPECT_NE(text.find("RESULT " + GetParam() + ": PASS"), std::string::npos);
}

INSTANTIATE_TEST_SUITE_P(All, Registry, ::testing::ValuesIn(scenario_ids()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& c : s)
                             if (!isalnum(static_cast<unsigned char>(c))) c = '_';
                           return s;
                         });

TEST(Scenarios, RegistryIds) {
  const auto& ids = scenario_ids();
  EXPECT_EQ(ids.size(), 14u);
  for (const char* id : {"2.1-axioms", "2.2", "cup-not-join", "meet-rules-counterexample", "3.1",
                         "3.2", "3.3", "3.3.1", "3.3.2", "3.3.3", "3.4-construction", "3.5",
                         "thm-2.2-random", "csystem-lattice"}) {
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  }
}

TEST(Scenarios, Deterministic) {
  ScenarioOptions o{11, 10};
  for (const char* id : {"2.1-axioms", "thm-2.2-random", "3.1"}) {
    EXPECT_EQ(run_scenario(id, o).to_string(), run_scenario(id, o).to_string()) << id;
  }
}

TEST(Scenarios, ConcurrentMatchesSequential) {
  std::vector<std::string> ids{"2.2", "cup-not-join", "3.3", "csystem-lattice"};
  auto together = run_scenarios(ids);
  ASSERT_EQ(together.size(), ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    EXPECT_EQ(together[i].id, ids[i]);
    EXPECT_EQ(together[i].to_string(), run_scenario(ids[i]).to_string());
  }
}

TEST(Scenarios, UnknownId) {
  try {
    run_scenario("9.9");
    FAIL();
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("2.1-axioms"), std::string::npos);
  }
}

TEST(Scenarios, ReportFormat) {
  ScenarioReport r{"x", {{"a", "1", "1", true}, {"b", "2", "3", false}}};
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.to_string(),
            "ASSERT a: PASS (expected=1, got=1)\n"
            "ASSERT b: FAIL (expected=2, got=3)\n"
            "RESULT x: FAIL\n");
}
