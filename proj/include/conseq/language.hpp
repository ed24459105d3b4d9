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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace conseq {

/// A symbol of a language. Tokens are non-empty, free of whitespace and
/// '#', and never contain "=>". Ordering is lexicographic on the token.
class Element {
 public:
  explicit Element(std::string token);

  static bool is_valid_token(std::string_view token) noexcept;

  const std::string& token() const noexcept { return token_; }

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element&, const Element&) = default;

 private:
  std::string token_;
};

class Language;
using LanguagePtr = std::shared_ptr<const Language>;

/// Either an explicit finite set of elements (kept in declaration order) or
/// the denumerable language prefix0, prefix1, ... enumerated lazily.
class Language {
 public:
  enum class Kind { Explicit, Enumerated };

  static LanguagePtr explicit_set(std::vector<Element> elements);
  static LanguagePtr explicit_set(std::initializer_list<std::string_view> tokens);
  static LanguagePtr enumerated(std::string prefix);

  Kind kind() const noexcept { return kind_; }
  bool is_explicit() const noexcept { return kind_ == Kind::Explicit; }
  bool is_enumerated() const noexcept { return kind_ == Kind::Enumerated; }

  // Explicit only.
  const std::vector<Element>& elements() const;
  std::size_t size() const;

  // Enumerated only.
  const std::string& prefix() const;

  bool contains(const Element& e) const;

  // Element at a position: declaration order for explicit languages, the
  // enumeration index for enumerated ones.
  Element at(std::size_t index) const;
  std::optional<std::size_t> index_of(const Element& e) const;

  // The `language:` line payload, e.g. "a b c" or "enumerated f".
  std::string describe() const;

  friend bool operator==(const Language& a, const Language& b);

 private:
  explicit Language(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<Element> elements_;
  std::unordered_map<std::string, std::size_t> positions_;
  std::string prefix_;
};

bool same_language(const LanguagePtr& a, const LanguagePtr& b);

/// A finite subset, or (over an enumerated language only) the complement of
/// a finite subset. Storage is sorted and duplicate-free, so equality is
/// structural.
class SubsetRepr {
 public:
  enum class Kind { Finite, Cofinite };

  static SubsetRepr finite(LanguagePtr lang, std::vector<Element> members);
  static SubsetRepr finite(LanguagePtr lang, std::initializer_list<std::string_view> tokens);
  static SubsetRepr cofinite(LanguagePtr lang, std::vector<Element> excluded);
  static SubsetRepr cofinite(LanguagePtr lang, std::initializer_list<std::string_view> tokens);
  static SubsetRepr empty(LanguagePtr lang);
  static SubsetRepr full(LanguagePtr lang);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_cofinite() const noexcept { return kind_ == Kind::Cofinite; }
  const LanguagePtr& language() const noexcept { return lang_; }

  // Members for Finite, excluded elements for Cofinite.
  const std::vector<Element>& elements() const noexcept { return elems_; }
  // Finite only.
  std::size_t size() const;
  bool empty() const noexcept { return is_finite() && elems_.empty(); }

  bool contains(const Element& e) const;
  bool subset_of(const SubsetRepr& other) const;
  SubsetRepr unite(const SubsetRepr& other) const;
  SubsetRepr intersect(const SubsetRepr& other) const;
  SubsetRepr without(const SubsetRepr& other) const;

  // "{a,b}" or "L-{f0}".
  std::string to_string() const;

  friend bool operator==(const SubsetRepr& a, const SubsetRepr& b);
  // Finite before Cofinite, then lexicographic on the stored elements.
  friend std::weak_ordering operator<=>(const SubsetRepr& a, const SubsetRepr& b);

 private:
  SubsetRepr(LanguagePtr lang, Kind kind, std::vector<Element> elems);
  void require_same_language(const SubsetRepr& other) const;

  LanguagePtr lang_;
  Kind kind_;
  std::vector<Element> elems_;
};

inline bool contains(const SubsetRepr& s, const Element& e) { return s.contains(e); }
inline bool subset_of(const SubsetRepr& s, const SubsetRepr& t) { return s.subset_of(t); }

// Builds the sorted, duplicate-free element list from tokens.
std::vector<Element> make_elements(std::initializer_list<std::string_view> tokens);

}  // namespace conseq
