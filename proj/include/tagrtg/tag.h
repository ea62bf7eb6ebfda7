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

#ifndef TAGRTG_TAG_H_
#define TAGRTG_TAG_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tagrtg/errors.h"
#include "tagrtg/feature.h"

namespace tagrtg {

// Whether a node takes part in substitution or adjunction. The root of an
// elementary tree is either kAdjunction or kInternal.
enum class NodeKind { kInternal, kAdjunction, kSubstitution, kFoot, kAnchor };

std::string_view to_string(NodeKind kind);

struct TreeNode {
  std::string label;  // nonterminal, or the word for anchors
  NodeKind kind = NodeKind::kInternal;
  FeatureTerm top;
  FeatureTerm bot;
  std::vector<TreeNode> children;

  bool is_active() const {
    return kind == NodeKind::kAdjunction || kind == NodeKind::kSubstitution;
  }
};

enum class TreeKind { kInitial, kAuxiliary };

struct ElemTree {
  std::string name;  // terminal symbol of the derivation alphabet
  TreeKind kind = TreeKind::kInitial;
  TreeNode root;

  bool is_auxiliary() const { return kind == TreeKind::kAuxiliary; }
};

struct Tag {
  std::string start;
  std::vector<std::string> nonterminals;  // first-appearance order
  std::vector<std::string> terminals;     // anchor words
  std::vector<ElemTree> initial;
  std::vector<ElemTree> auxiliary;

  // Initial trees, then auxiliary trees, each in file order.
  std::vector<const ElemTree*> trees() const;
};

// An active node together with its rank position.
struct ActiveNode {
  const TreeNode* node;
  bool is_root;
};

// The active nodes gamma_1..gamma_n: the root first when it is an
// adjunction site, then substitution and adjunction sites in depth-first
// left-to-right order. Foot nodes are never active.
std::vector<ActiveNode> active_nodes(const ElemTree& tree);
int rank(const ElemTree& tree);

// X_A for adjunction sites, X_S for substitution sites.
std::string nt(const TreeNode& node);
std::string substitution_nt(std::string_view label);
std::string adjunction_nt(std::string_view label);

// Foot node of an auxiliary tree, nullptr for initial trees.
const TreeNode* foot(const ElemTree& tree);

// Internal non-root nodes that carry features; these never reach a rule.
std::vector<std::pair<std::string, std::string>> inert_feature_nodes(const Tag& tag);

// Checks every structural invariant; throws ValidationError naming the
// tree and the violated invariant.
void validate(const Tag& tag);

// Grammar text format; see docs/grammar-format.md. parse_tag validates.
Tag parse_tag(std::string_view text);
Tag load_tag(const std::filesystem::path& path);
std::string format_tag(const Tag& tag);

}  // namespace tagrtg

#endif  // TAGRTG_TAG_H_
