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

#include "conseq/language.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

#include "conseq/error.hpp"

namespace conseq {

namespace {

void canonicalize(std::vector<Element>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool sorted_includes(const std::vector<Element>& big, const std::vector<Element>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<Element> sorted_union(const std::vector<Element>& a, const std::vector<Element>& b) {
  std::vector<Element> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Element> sorted_intersection(const std::vector<Element>& a,
                                         const std::vector<Element>& b) {
  std::vector<Element> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Element> sorted_difference(const std::vector<Element>& a,
                                       const std::vector<Element>& b) {
  std::vector<Element> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Element

Element::Element(std::string token) : token_(std::move(token)) {
  if (!is_valid_token(token_)) {
    throw DomainError("invalid element token '" + token_ + "'");
  }
}

bool Element::is_valid_token(std::string_view token) noexcept {
  if (token.empty()) return false;
  if (token.find("=>") != std::string_view::npos) return false;
  for (char c : token) {
    if (c == '#' || std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<Element> make_elements(std::initializer_list<std::string_view> tokens) {
  std::vector<Element> out;
  out.reserve(tokens.size());
  for (auto t : tokens) out.emplace_back(std::string(t));
  canonicalize(out);
  return out;
}

// --------------------------------------------------------------- Language

LanguagePtr Language::explicit_set(std::vector<Element> elements) {
  if (elements.empty()) throw DomainError("a language must be non-empty");
  auto lang = std::shared_ptr<Language>(new Language(Kind::Explicit));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    auto [it, inserted] = lang->positions_.emplace(elements[i].token(), i);
    if (!inserted) {
      throw DomainError("duplicate element '" + elements[i].token() + "' in language");
    }
  }
  lang->elements_ = std::move(elements);
  return lang;
}

LanguagePtr Language::explicit_set(std::initializer_list<std::string_view> tokens) {
  std::vector<Element> elems;
  for (auto t : tokens) elems.emplace_back(std::string(t));
  return explicit_set(std::move(elems));
}

LanguagePtr Language::enumerated(std::string prefix) {
  if (!Element::is_valid_token(prefix)) {
    throw DomainError("invalid enumeration prefix '" + prefix + "'");
  }
  auto lang = std::shared_ptr<Language>(new Language(Kind::Enumerated));
  lang->prefix_ = std::move(prefix);
  return lang;
}

const std::vector<Element>& Language::elements() const {
  if (!is_explicit()) throw UsageError("enumerated language has no finite element list");
  return elements_;
}

std::size_t Language::size() const { return elements().size(); }

const std::string& Language::prefix() const {
  if (!is_enumerated()) throw UsageError("explicit language has no enumeration prefix");
  return prefix_;
}

std::optional<std::size_t> Language::index_of(const Element& e) const {
  if (is_explicit()) {
    auto it = positions_.find(e.token());
    if (it == positions_.end()) return std::nullopt;
    return it->second;
  }
  const std::string& t = e.token();
  if (t.size() <= prefix_.size() || t.compare(0, prefix_.size(), prefix_) != 0) {
    return std::nullopt;
  }
  std::string_view digits(t.data() + prefix_.size(), t.size() - prefix_.size());
  if (digits.size() > 18) return std::nullopt;
  if (digits.size() > 1 && digits[0] == '0') return std::nullopt;
  std::size_t value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

bool Language::contains(const Element& e) const { return index_of(e).has_value(); }

Element Language::at(std::size_t index) const {
  if (is_explicit()) {
    if (index >= elements_.size()) throw DomainError("language index out of range");
    return elements_[index];
  }
  return Element(prefix_ + std::to_string(index));
}

std::string Language::describe() const {
  if (is_enumerated()) return "enumerated " + prefix_;
  std::string out;
  for (const auto& e : elements_) {
    if (!out.empty()) out += ' ';
    out += e.token();
  }
  return out;
}

bool operator==(const Language& a, const Language& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.is_enumerated()) return a.prefix_ == b.prefix_;
  return a.elements_ == b.elements_;
}

bool same_language(const LanguagePtr& a, const LanguagePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ------------------------------------------------------------- SubsetRepr

SubsetRepr::SubsetRepr(LanguagePtr lang, Kind kind, std::vector<Element> elems)
    : lang_(std::move(lang)), kind_(kind), elems_(std::move(elems)) {
  if (!lang_) throw UsageError("subset without a language");
  canonicalize(elems_);
  for (const auto& e : elems_) {
    if (!lang_->contains(e)) {
      throw DomainError("element '" + e.token() + "' is not in the language");
    }
  }
  if (kind_ == Kind::Cofinite && !lang_->is_enumerated()) {
    throw DomainError("cofinite subsets require an enumerated language");
  }
}

SubsetRepr SubsetRepr::finite(LanguagePtr lang, std::vector<Element> members) {
  return SubsetRepr(std::move(lang), Kind::Finite, std::move(members));
}

SubsetRepr SubsetRepr::finite(LanguagePtr lang, std::initializer_list<std::string_view> tokens) {
  return finite(std::move(lang), make_elements(tokens));
}

SubsetRepr SubsetRepr::cofinite(LanguagePtr lang, std::vector<Element> excluded) {
  return SubsetRepr(std::move(lang), Kind::Cofinite, std::move(excluded));
}

SubsetRepr SubsetRepr::cofinite(LanguagePtr lang, std::initializer_list<std::string_view> tokens) {
  return cofinite(std::move(lang), make_elements(tokens));
}

SubsetRepr SubsetRepr::empty(LanguagePtr lang) { return finite(std::move(lang), {}); }

SubsetRepr SubsetRepr::full(LanguagePtr lang) {
  if (lang->is_explicit()) {
    auto elems = lang->elements();
    return finite(std::move(lang), std::move(elems));
  }
  return cofinite(std::move(lang), std::vector<Element>{});
}

std::size_t SubsetRepr::size() const {
  if (!is_finite()) throw UsageError("cofinite subsets have no finite size");
  return elems_.size();
}

void SubsetRepr::require_same_language(const SubsetRepr& other) const {
  if (!same_language(lang_, other.lang_)) {
    throw DomainError("subsets belong to different languages");
  }
}

bool SubsetRepr::contains(const Element& e) const {
  if (!lang_->contains(e)) {
    throw DomainError("element '" + e.token() + "' is not in the language");
  }
  bool listed = std::binary_search(elems_.begin(), elems_.end(), e);
  return is_finite() ? listed : !listed;
}

bool SubsetRepr::subset_of(const SubsetRepr& other) const {
  require_same_language(other);
  if (is_finite() && other.is_finite()) return sorted_includes(other.elems_, elems_);
  if (is_finite()) return sorted_intersection(elems_, other.elems_).empty();
  // A cofinite set over a denumerable language is infinite.
  if (other.is_finite()) return false;
  return sorted_includes(elems_, other.elems_);
}

SubsetRepr SubsetRepr::unite(const SubsetRepr& other) const {
  require_same_language(other);
  if (is_finite() && other.is_finite()) {
    return SubsetRepr(lang_, Kind::Finite, sorted_union(elems_, other.elems_));
  }
  if (is_cofinite() && other.is_cofinite()) {
    return SubsetRepr(lang_, Kind::Cofinite, sorted_intersection(elems_, other.elems_));
  }
  const SubsetRepr& co = is_cofinite() ? *this : other;
  const SubsetRepr& fin = is_cofinite() ? other : *this;
  return SubsetRepr(lang_, Kind::Cofinite, sorted_difference(co.elems_, fin.elems_));
}

SubsetRepr SubsetRepr::intersect(const SubsetRepr& other) const {
  require_same_language(other);
  if (is_finite() && other.is_finite()) {
    return SubsetRepr(lang_, Kind::Finite, sorted_intersection(elems_, other.elems_));
  }
  if (is_cofinite() && other.is_cofinite()) {
    return SubsetRepr(lang_, Kind::Cofinite, sorted_union(elems_, other.elems_));
  }
  const SubsetRepr& co = is_cofinite() ? *this : other;
  const SubsetRepr& fin = is_cofinite() ? other : *this;
  return SubsetRepr(lang_, Kind::Finite, sorted_difference(fin.elems_, co.elems_));
}

SubsetRepr SubsetRepr::without(const SubsetRepr& other) const {
  require_same_language(other);
  if (is_finite() && other.is_finite()) {
    return SubsetRepr(lang_, Kind::Finite, sorted_difference(elems_, other.elems_));
  }
  if (is_finite()) {
    return SubsetRepr(lang_, Kind::Finite, sorted_intersection(elems_, other.elems_));
  }
  if (other.is_finite()) {
    return SubsetRepr(lang_, Kind::Cofinite, sorted_union(elems_, other.elems_));
  }
  // (L - E1) - (L - E2) = E2 - E1
  return SubsetRepr(lang_, Kind::Finite, sorted_difference(other.elems_, elems_));
}

std::string SubsetRepr::to_string() const {
  std::string body = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) body += ',';
    body += elems_[i].token();
  }
  body += '}';
  return is_finite() ? body : "L-" + body;
}

bool operator==(const SubsetRepr& a, const SubsetRepr& b) {
  return a.kind_ == b.kind_ && a.elems_ == b.elems_ && same_language(a.lang_, b.lang_);
}

std::weak_ordering operator<=>(const SubsetRepr& a, const SubsetRepr& b) {
  if (a.kind_ != b.kind_) {
    return a.is_finite() ? std::weak_ordering::less : std::weak_ordering::greater;
  }
  return std::lexicographical_compare_three_way(a.elems_.begin(), a.elems_.end(),
                                                b.elems_.begin(), b.elems_.end());
}

}  // namespace conseq
