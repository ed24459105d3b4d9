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

#include "conseq/system_file.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "conseq/error.hpp"

namespace conseq {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what, line);
}

struct Pending {
  bool unary = false;
  std::size_t arity = 0;
  std::size_t line = 0;
  std::vector<Element> axioms;
  std::vector<RuleTuple> tuples;
};

}  // namespace

RuleSystem parse_system(std::string_view text, std::string name) {
  LanguagePtr lang;
  std::vector<std::string> order;
  std::map<std::string, Pending> relations;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string_view line = trim(raw);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }

    auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(line_no, "expected ':'");
    auto head = split_ws(line.substr(0, colon));
    std::string_view body = line.substr(colon + 1);

    if (!lang) {
      if (head.size() != 1 || head[0] != "language") {
        fail(line_no, "the first line must be 'language: ...'");
      }
      auto toks = split_ws(body);
      if (toks.empty()) fail(line_no, "language has no elements");
      try {
        if (toks[0] == "enumerated") {
          if (toks.size() != 2) fail(line_no, "expected 'language: enumerated <prefix>'");
          lang = Language::enumerated(toks[1]);
        } else {
          std::vector<Element> elems;
          for (const auto& t : toks) {
            if (!Element::is_valid_token(t)) fail(line_no, "invalid element '" + t + "'");
            elems.emplace_back(t);
          }
          lang = Language::explicit_set(std::move(elems));
        }
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        fail(line_no, e.what());
      }
      continue;
    }

    if (head.size() != 2 || (head[0] != "axioms" && head[0] != "rule")) {
      fail(line_no, "expected 'axioms <id>:' or 'rule <id>:'");
    }
    const bool unary = head[0] == "axioms";
    const std::string& id = head[1];
    if (!is_valid_rule_id(id)) fail(line_no, "invalid rule id '" + id + "'");

    auto element = [&](const std::string& tok) {
      if (!Element::is_valid_token(tok)) fail(line_no, "invalid element '" + tok + "'");
      Element e(tok);
      if (!lang->contains(e)) {
        fail(line_no, "unknown element '" + tok + "' in " + std::string(unary ? "axioms " : "rule ") + id);
      }
      return e;
    };

    auto [it, fresh] = relations.try_emplace(id);
    Pending& p = it->second;
    if (fresh) {
      order.push_back(id);
      p.unary = unary;
      p.line = line_no;
    } else if (p.unary != unary) {
      fail(line_no, "id '" + id + "' is used for both axioms and rules");
    }

    if (unary) {
      for (const auto& t : split_ws(body)) p.axioms.push_back(element(t));
      continue;
    }
    // Separate "=>" even when written without blanks.
    std::string spaced;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body.substr(i, 2) == "=>") {
        spaced += " => ";
        ++i;
      } else {
        spaced += body[i];
      }
    }
    auto toks = split_ws(spaced);
    std::size_t arrows = 0, arrow_at = 0;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (toks[i] == "=>") {
        ++arrows;
        arrow_at = i;
      }
    }
    if (arrows != 1) fail(line_no, "expected exactly one '=>'");
    if (arrow_at == 0) fail(line_no, "rule needs at least one premise");
    if (arrow_at + 2 != toks.size()) fail(line_no, "expected exactly one conclusion after '=>'");
    RuleTuple tuple;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (i != arrow_at) tuple.push_back(element(toks[i]));
    }
    if (fresh) {
      p.arity = tuple.size();
    } else if (p.arity != tuple.size()) {
      fail(line_no, "rule " + id + " has arity " + std::to_string(p.arity) + " but this line has " +
                        std::to_string(tuple.size()));
    }
    p.tuples.push_back(std::move(tuple));
  }
  if (!lang) throw ParseError("line 1: missing 'language:' line", 1);

  std::vector<Rule> rules;
  for (const auto& id : order) {
    Pending& p = relations.at(id);
    if (p.unary) {
      rules.emplace_back(UnaryRule{id, std::move(p.axioms)});
    } else {
      rules.emplace_back(TupleRule{id, p.arity, std::move(p.tuples)});
    }
  }
  return RuleSystem(std::move(name), lang, std::move(rules));
}

RuleSystem load_system(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string name = std::filesystem::path(path).stem().string();
  if (!Element::is_valid_token(name)) name = "system";
  return parse_system(buf.str(), name);
}

std::string serialize_system(const RuleSystem& system) {
  std::string out = "language: " + system.language()->describe() + "\n";
  for (const auto& rule : system.rules()) {
    if (const auto* u = std::get_if<UnaryRule>(&rule)) {
      out += "axioms " + u->id + ":";
      for (const auto& e : u->axioms) out += " " + e.token();
      out += "\n";
    } else if (const auto* t = std::get_if<TupleRule>(&rule)) {
      if (t->tuples.empty()) {
        throw UsageError("relation " + t->id + " has no tuples and cannot be written");
      }
      for (const auto& tuple : t->tuples) {
        out += "rule " + t->id + ":";
        for (std::size_t i = 0; i + 1 < tuple.size(); ++i) out += " " + tuple[i].token();
        out += " => " + tuple.back().token() + "\n";
      }
    } else {
      throw UsageError("schema relation " + rule_id(rule) + " cannot be written to a file");
    }
  }
  return out;
}

void save_system(const RuleSystem& system, const std::string& path) {
  std::string text = serialize_system(system);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out) throw UsageError("write failed: " + path);
}

}  // namespace conseq
