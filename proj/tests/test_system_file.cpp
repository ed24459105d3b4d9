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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "conseq/error.hpp"
#include "conseq/system_file.hpp"

using namespace conseq;

namespace {

std::string data_dir() {
  const char* d = std::getenv("CONSEQ_TEST_DATA");
  return d ? d : "data";
}

std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void expect_parse_error(std::string_view text, std::size_t line, std::string_view needle) {
  try {
    parse_system(text);
    ADD_FAILURE() << "no error for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location(), line) << e.what();
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(SystemFile, FourElementFile) {
  RuleSystem s = load_system(data_dir() + "/b_system.sys");
  EXPECT_EQ(s.name(), "b_system");
  ASSERT_EQ(s.rules().size(), 2u);
  const auto& r = std::get<TupleRule>(s.rules()[0]);
  EXPECT_EQ(r.id, "R");
  EXPECT_EQ(r.arity, 2u);
  const auto& t = std::get<TupleRule>(s.rules()[1]);
  EXPECT_EQ(t.arity, 4u);
  auto l = s.language();
  EXPECT_EQ(saturate(s, SubsetRepr::finite(l, {"a", "b"})).closure,
            SubsetRepr::finite(l, {"a", "b", "c", "d"}));
}

TEST(SystemFile, EmptySystemIsIdentity) {
  RuleSystem s = load_system(data_dir() + "/empty.sys");
  EXPECT_TRUE(s.rules().empty());
  auto x = SubsetRepr::finite(s.language(), {"a"});
  EXPECT_EQ(saturate(s, x).closure, x);
}

TEST(SystemFile, CanonicalCorpusRoundTripsByteForByte) {
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(data_dir())) {
    std::string name = entry.path().filename().string();
    if (entry.path().extension() != ".sys" || name.rfind("bad_", 0) == 0 ||
        name == "commented.sys") {
      continue;
    }
    ++files;
    std::string text = read(entry.path().string());
    RuleSystem s = parse_system(text, entry.path().stem().string());
    EXPECT_EQ(serialize_system(s), text) << name;
    RuleSystem again = parse_system(serialize_system(s), s.name());
    EXPECT_TRUE(structurally_equal(s, again)) << name;
  }
  EXPECT_GE(files, 10);
}

TEST(SystemFile, CommentsAndSpacing) {
  RuleSystem c = load_system(data_dir() + "/commented.sys");
  RuleSystem b = load_system(data_dir() + "/b_system.sys");
  EXPECT_EQ(serialize_system(c), serialize_system(b));
}

TEST(SystemFile, SaveAndLoad) {
  RuleSystem b = load_system(data_dir() + "/b_system.sys");
  auto path = std::filesystem::temp_directory_path() / "conseq_save_test.sys";
  save_system(b, path.string());
  EXPECT_EQ(read(path.string()), read(data_dir() + "/b_system.sys"));
  std::filesystem::remove(path);
  EXPECT_THROW(load_system(data_dir() + "/no_such_file.sys"), UsageError);
}

TEST(SystemFile, AccumulatesAndEnumerated) {
  RuleSystem s = parse_system(
      "language: enumerated f\naxioms A: f0\nrule R: f0 => f1\nrule R: f1 => f7\n");
  ASSERT_EQ(s.rules().size(), 2u);
  EXPECT_EQ(std::get<TupleRule>(s.rules()[1]).tuples.size(), 2u);
  auto closure = saturate(s, SubsetRepr::empty(s.language())).closure;
  EXPECT_EQ(closure, SubsetRepr::finite(s.language(), {"f0", "f1", "f7"}));
}

TEST(SystemFile, Errors) {
  expect_parse_error("language: a b c\nrule R: a => z\n", 2, "'z'");
  expect_parse_error("language: a b c\nrule R: a => b\nrule R: a b => c\n", 3, "R");
  expect_parse_error("rule R: a => b\n", 1, "language");
  expect_parse_error("language: a a\n", 1, "");
  expect_parse_error("language: a b\nrule R: => b\n", 2, "");
  expect_parse_error("language: a b\nrule R: a b\n", 2, "=>");
  expect_parse_error("language: a b\naxioms A: a\nrule A: a => b\n", 3, "A");
  expect_parse_error("language: a b\nfrobnicate\n", 2, "");
  expect_parse_error("", 1, "language");
  for (const char* f : {"bad_unknown.sys", "bad_arity.sys", "bad_header.sys"}) {
    EXPECT_THROW(load_system(data_dir() + "/" + f), ParseError) << f;
  }
}

TEST(SystemFile, SerializeRefusals) {
  auto l = Language::explicit_set({"a", "b"});
  RuleSystem empty_tuple("e", l, {TupleRule{"R", 2, {}}});
  EXPECT_THROW(serialize_system(empty_tuple), UsageError);
  RuleSystem schema("s", l, {SchemaRule{"M", 1, [](const SubsetRepr&) {
                                          return std::vector<RuleTuple>{};
                                        }}});
  EXPECT_THROW(serialize_system(schema), UsageError);
}
