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

#ifndef TAGRTG_TRANSLATE_H_
#define TAGRTG_TRANSLATE_H_

#include <string>

#include "tagrtg/rtg.h"
#include "tagrtg/tag.h"

namespace tagrtg {

// Plain derivation grammar: one rule per elementary tree plus X_A -> e_A
// for every X. Axiom S_S, nonterminals N_S then N_A.
FbRtg to_rtg(const Tag& tag);

// Feature-based derivation grammar. Each rule is passed through tidy().
FbRtg to_fbrtg(const Tag& tag);

// "t", or "t1", "t2", ... when the tree already uses ?t.
std::string interface_variable(const ElemTree& tree);

// [top: ?t] & [top: top(root)], plus [bot: bot(foot)] for auxiliary trees.
Constraint interface_of(const ElemTree& tree, const std::string& var);

// [top: ?t, bot: bot(root)] at the root, [top: top, bot: bot] elsewhere.
FeatureTerm feats(const TreeNode& node, bool is_root, const std::string& var);

// Slot kinds per elementary tree, in rank order.
SiteTable build_site_table(const Tag& tag);

// The rule no adjunction: (X_A, [top: ?v, bot: ?v]) -> e_A.
FbRule no_adjunction_rule(const std::string& label, bool with_features);

}  // namespace tagrtg

#endif  // TAGRTG_TRANSLATE_H_
