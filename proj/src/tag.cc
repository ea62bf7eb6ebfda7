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

#include "tagrtg/tag.h"

#include <algorithm>
#include <set>
#include <string>

namespace tagrtg {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::kInternal:
      return "internal";
    case NodeKind::kAdjunction:
      return "adj";
    case NodeKind::kSubstitution:
      return "subst";
    case NodeKind::kFoot:
      return "foot";
    case NodeKind::kAnchor:
      return "anchor";
  }
  return "internal";
}

std::vector<const ElemTree*> Tag::trees() const {
  std::vector<const ElemTree*> out;
  out.reserve(initial.size() + auxiliary.size());
  for (const auto& t : initial) out.push_back(&t);
  for (const auto& t : auxiliary) out.push_back(&t);
  return out;
}

namespace {

void collect_active(const TreeNode& node, std::vector<ActiveNode>& out) {
  for (const auto& child : node.children) {
    if (child.is_active()) out.push_back({&child, false});
    collect_active(child, out);
  }
}

const TreeNode* find_foot(const TreeNode& node) {
  if (node.kind == NodeKind::kFoot) return &node;
  for (const auto& child : node.children) {
    if (const TreeNode* f = find_foot(child)) return f;
  }
  return nullptr;
}

void collect_inert(const ElemTree& tree, const TreeNode& node, bool is_root,
                   std::vector<std::pair<std::string, std::string>>& out) {
  if (!is_root && node.kind == NodeKind::kInternal &&
      (!node.top.is_top() || !node.bot.is_top())) {
    out.emplace_back(tree.name, node.label);
  }
  for (const auto& child : node.children) collect_inert(tree, child, false, out);
}

bool has_reserved_suffix(std::string_view label) {
  return label.size() > 2 && (label.ends_with("_S") || label.ends_with("_A"));
}

[[noreturn]] void invalid(const ElemTree& tree, const std::string& what) {
  throw ValidationError("tree '" + tree.name + "': " + what);
}

void check_node(const Tag& tag, const ElemTree& tree, const TreeNode& node,
                bool is_root, int& feet) {
  if (node.kind == NodeKind::kAnchor) {
    if (std::find(tag.terminals.begin(), tag.terminals.end(), node.label) ==
        tag.terminals.end()) {
      invalid(tree, "anchor '" + node.label + "' is not a declared terminal");
    }
  } else {
    if (std::find(tag.nonterminals.begin(), tag.nonterminals.end(),
                  node.label) == tag.nonterminals.end()) {
      invalid(tree, "label '" + node.label + "' is not a declared nonterminal");
    }
    if (has_reserved_suffix(node.label)) {
      invalid(tree, "label '" + node.label + "' ends in a reserved _S/_A suffix");
    }
  }
  if (is_root && node.kind != NodeKind::kAdjunction &&
      node.kind != NodeKind::kInternal) {
    invalid(tree, std::string("root node cannot be a ") +
                      std::string(to_string(node.kind)) + " node");
  }
  bool leaf_kind = node.kind == NodeKind::kSubstitution ||
                   node.kind == NodeKind::kFoot || node.kind == NodeKind::kAnchor;
  if (leaf_kind && !node.children.empty()) {
    invalid(tree, std::string(to_string(node.kind)) + " node '" + node.label +
                      "' must be a leaf");
  }
  if (node.kind == NodeKind::kFoot) ++feet;
  for (const auto& child : node.children) check_node(tag, tree, child, false, feet);
}

}  // namespace

std::vector<ActiveNode> active_nodes(const ElemTree& tree) {
  std::vector<ActiveNode> out;
  if (tree.root.kind == NodeKind::kAdjunction) out.push_back({&tree.root, true});
  collect_active(tree.root, out);
  return out;
}

int rank(const ElemTree& tree) { return static_cast<int>(active_nodes(tree).size()); }

std::string substitution_nt(std::string_view label) {
  return std::string(label) + "_S";
}

std::string adjunction_nt(std::string_view label) {
  return std::string(label) + "_A";
}

std::string nt(const TreeNode& node) {
  return node.kind == NodeKind::kSubstitution ? substitution_nt(node.label)
                                              : adjunction_nt(node.label);
}

const TreeNode* foot(const ElemTree& tree) {
  return tree.is_auxiliary() ? find_foot(tree.root) : nullptr;
}

std::vector<std::pair<std::string, std::string>> inert_feature_nodes(const Tag& tag) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const ElemTree* tree : tag.trees()) collect_inert(*tree, tree->root, true, out);
  return out;
}

void validate(const Tag& tag) {
  if (tag.start.empty()) throw ValidationError("start symbol not declared");
  if (std::find(tag.nonterminals.begin(), tag.nonterminals.end(), tag.start) ==
      tag.nonterminals.end()) {
    throw ValidationError("start symbol '" + tag.start + "' not declared");
  }
  std::set<std::string> names;
  for (const ElemTree* tree : tag.trees()) {
    if (tree->name.empty()) throw ValidationError("tree with an empty name");
    if (tree->name == "e_A" || tree->name == "e_S") {
      invalid(*tree, "name is reserved");
    }
    if (!names.insert(tree->name).second) invalid(*tree, "duplicate tree name");
    int feet = 0;
    check_node(tag, *tree, tree->root, true, feet);
    if (!tree->is_auxiliary() && feet > 0) invalid(*tree, "foot node in initial tree");
    if (tree->is_auxiliary()) {
      if (feet != 1) invalid(*tree, "auxiliary tree needs exactly one foot node");
      if (foot(*tree)->label != tree->root.label) {
        invalid(*tree, "foot label '" + foot(*tree)->label + "' != root label '" +
                           tree->root.label + "'");
      }
    }
  }
}

}  // namespace tagrtg
