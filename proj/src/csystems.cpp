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

#include "conseq/csystems.hpp"

#include <algorithm>

#include "conseq/error.hpp"

namespace conseq {

namespace {

bool by_size(const SubsetRepr& a, const SubsetRepr& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void require_closed(const ConsequenceOperator& op, const SubsetRepr& s, const char* which) {
  if (op.apply(s) != s) {
    throw UsageError(std::string(which) + " = " + s.to_string() + " is not a closed system");
  }
}

}  // namespace

bool CSystemFamily::contains(const SubsetRepr& y) const {
  return std::binary_search(members.begin(), members.end(), y, by_size);
}

SubsetRepr CSystemFamily::least_above(const SubsetRepr& x) const {
  SubsetRepr out = SubsetRepr::full(lang);
  for (const auto& y : members) {
    if (x.subset_of(y)) out = out.intersect(y);
  }
  return out;
}

CSystemFamily closed_systems(const ConsequenceOperator& op, const LanguagePtr& lang,
                             std::size_t bound) {
  if (!same_language(op.language(), lang)) throw DomainError("language mismatch");
  detail::PowerSetIndex index(lang, bound);
  const auto table = index.tabulate(op);
  std::vector<char> seen(index.count(), 0);
  std::vector<SubsetRepr> members;
  for (std::uint32_t m = 0; m < index.count(); ++m) {
    std::uint32_t image = table[m];
    if (table[image] != image) {
      throw UsageError("image " + index.subset(image).to_string() + " of " +
                       index.subset(m).to_string() + " is not a fixed point");
    }
    if (!seen[image]) {
      seen[image] = 1;
      members.push_back(index.subset(image));
    }
  }
  std::sort(members.begin(), members.end(), by_size);
  return CSystemFamily{op, lang, std::move(members)};
}

SubsetRepr join_uplus(const ConsequenceOperator& op, const SubsetRepr& x, const SubsetRepr& y) {
  require_closed(op, x, "X");
  require_closed(op, y, "Y");
  return op.apply(x.unite(y));
}

SubsetRepr join_uplus(const CSystemFamily& family, const SubsetRepr& x, const SubsetRepr& y) {
  if (!family.contains(x)) throw UsageError("X = " + x.to_string() + " is not a closed system");
  if (!family.contains(y)) throw UsageError("Y = " + y.to_string() + " is not a closed system");
  SubsetRepr out = family.op.apply(x.unite(y));
  if (out != family.least_above(x.unite(y))) {
    throw Error("join " + out.to_string() + " is not the least closed superset");
  }
  return out;
}

SubsetRepr meet_cap(const ConsequenceOperator& op, const SubsetRepr& x, const SubsetRepr& y) {
  require_closed(op, x, "X");
  require_closed(op, y, "Y");
  SubsetRepr out = x.intersect(y);
  if (op.apply(out) != out) throw Error("intersection " + out.to_string() + " is not closed");
  return out;
}

SubsetRepr meet_cap(const CSystemFamily& family, const SubsetRepr& x, const SubsetRepr& y) {
  if (!family.contains(x)) throw UsageError("X = " + x.to_string() + " is not a closed system");
  if (!family.contains(y)) throw UsageError("Y = " + y.to_string() + " is not a closed system");
  SubsetRepr out = x.intersect(y);
  if (!family.contains(out)) throw Error("intersection " + out.to_string() + " is not closed");
  return out;
}

}  // namespace conseq
