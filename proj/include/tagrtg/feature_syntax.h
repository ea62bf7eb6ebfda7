// Copyright 2026 The tagrtg Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TAGRTG_FEATURE_SYNTAX_H_
#define TAGRTG_FEATURE_SYNTAX_H_

#include <string>
#include <string_view>

#include "tagrtg/feature.h"

namespace tagrtg {

// Text syntax: atoms bare (3sg, +, ind), variables ?t, matrices
// [attr: value, ...], top as [].
std::string to_string(const FeatureTerm& t);

// A constraint prints as one matrix listing every conjunct's entries in
// order, so a repeated attribute shows the conjunction. Non-matrix
// conjuncts are joined with " & ".
std::string to_string(const Constraint& c);

FeatureTerm parse_feature_term(std::string_view text);
Constraint parse_constraint(std::string_view text);

// Canonical form of a constraint: top conjuncts and top-valued entries
// dropped, matrix entries distributed so each entry lands in the first
// conjunct that lacks its attribute. parse(to_string(c)) == c on this form.
Constraint normalize(const Constraint& c);

}  // namespace tagrtg

#endif  // TAGRTG_FEATURE_SYNTAX_H_
