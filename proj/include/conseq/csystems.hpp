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

#include <cstddef>
#include <vector>

#include "conseq/consequence.hpp"
#include "conseq/language.hpp"

namespace conseq {

/// The closed sets Y = C(Y) of an operator over an explicit language,
/// sorted by (size, elements).
struct CSystemFamily {
  ConsequenceOperator op;
  LanguagePtr lang;
  std::vector<SubsetRepr> members;

  bool contains(const SubsetRepr& y) const;
  // Intersection of the members containing x.
  SubsetRepr least_above(const SubsetRepr& x) const;
};

// Images of P(lang). Refused when some image is not a fixed point.
CSystemFamily closed_systems(const ConsequenceOperator& op, const LanguagePtr& lang,
                             std::size_t bound = kDefaultExhaustiveBound);

// C(X u Y) for closed X, Y.
SubsetRepr join_uplus(const ConsequenceOperator& op, const SubsetRepr& x, const SubsetRepr& y);
// As above, and checks the result is the least member above X u Y.
SubsetRepr join_uplus(const CSystemFamily& family, const SubsetRepr& x, const SubsetRepr& y);

// X n Y for closed X, Y; the result is checked to be closed.
SubsetRepr meet_cap(const ConsequenceOperator& op, const SubsetRepr& x, const SubsetRepr& y);
SubsetRepr meet_cap(const CSystemFamily& family, const SubsetRepr& x, const SubsetRepr& y);

}  // namespace conseq
