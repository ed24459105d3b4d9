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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace conseq {

struct Assertion {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct ScenarioReport {
  std::string id;
  std::vector<Assertion> assertions;

  bool passed() const;
  // ASSERT lines, then "RESULT <id>: PASS|FAIL".
  std::string to_string() const;
};

struct ScenarioOptions {
  std::uint64_t seed = 7;
  std::optional<std::size_t> trials;  // scenario default when unset
};

const std::vector<std::string>& scenario_ids();

ScenarioReport run_scenario(std::string_view id, const ScenarioOptions& options = {});

// Runs concurrently; reports come back in the order of `ids`.
std::vector<ScenarioReport> run_scenarios(const std::vector<std::string>& ids,
                                          const ScenarioOptions& options = {});

}  // namespace conseq
