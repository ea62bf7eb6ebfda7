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

#include "tagrtg/translate.h"

#include <set>
#include <string>
#include <vector>

namespace tagrtg {
namespace {

void tree_variables(const TreeNode& node, std::set<std::string>& out) {
  collect_variables(node.top, out);
  collect_variables(node.bot, out);
  for (const auto& c : node.children) tree_variables(c, out);
}

FeatureTerm top_bot(const char* first, FeatureTerm a, const char* second, FeatureTerm b) {
  return FeatureTerm::avm({{first, std::move(a)}, {second, std::move(b)}});
}

std::string lhs_nt(const ElemTree& tree) {
  return tree.is_auxiliary() ? adjunction_nt(tree.root.label)
                             : substitution_nt(tree.root.label);
}

FbRule tree_rule(const ElemTree& tree, bool with_features) {
  FbRule r;
  r.lhs = lhs_nt(tree);
  r.terminal = tree.name;
  const std::string var = interface_variable(tree);
  if (with_features) r.lhs_feature = interface_of(tree, var);
  for (const auto& active : active_nodes(tree)) {
    RhsSlot slot{nt(*active.node), FeatureTerm::top()};
    if (with_features) slot.feature = feats(*active.node, active.is_root, var);
    r.rhs.push_back(std::move(slot));
  }
  return with_features ? tidy(r) : r;
}

FbRtg translate(const Tag& tag, bool with_features) {
  FbRtg g;
  g.axiom = substitution_nt(tag.start);
  for (const auto& x : tag.nonterminals) g.nonterminals.push_back(substitution_nt(x));
  for (const auto& x : tag.nonterminals) g.nonterminals.push_back(adjunction_nt(x));
  for (const ElemTree* tree : tag.trees()) {
    g.terminals.push_back({tree->name, rank(*tree)});
    g.rules.push_back(tree_rule(*tree, with_features));
  }
  g.terminals.push_back({kNoAdjunction, 0});
  for (const auto& x : tag.nonterminals) {
    g.rules.push_back(no_adjunction_rule(x, with_features));
  }
  g.sites = build_site_table(tag);
  return g;
}

}  // namespace

std::string interface_variable(const ElemTree& tree) {
  std::set<std::string> used;
  tree_variables(tree.root, used);
  if (!used.count("t")) return "t";
  for (int i = 1;; ++i) {
    std::string name = "t" + std::to_string(i);
    if (!used.count(name)) return name;
  }
}

Constraint interface_of(const ElemTree& tree, const std::string& var) {
  Constraint c;
  c.conjuncts.push_back(FeatureTerm::avm({{"top", FeatureTerm::var(var)}}));
  c.conjuncts.push_back(FeatureTerm::avm({{"top", tree.root.top}}));
  if (const TreeNode* f = foot(tree)) {
    c.conjuncts.push_back(FeatureTerm::avm({{"bot", f->bot}}));
  }
  return c;
}

FeatureTerm feats(const TreeNode& node, bool is_root, const std::string& var) {
  if (is_root) return top_bot("top", FeatureTerm::var(var), "bot", node.bot);
  return top_bot("top", node.top, "bot", node.bot);
}

SiteTable build_site_table(const Tag& tag) {
  SiteTable table;
  for (const ElemTree* tree : tag.trees()) {
    SiteInfo site;
    site.initial = !tree->is_auxiliary();
    for (const auto& active : active_nodes(*tree)) {
      if (active.is_root) site.root_slot = true;
      site.slots.push_back(active.node->kind == NodeKind::kSubstitution
                               ? SiteKind::kSubstitution
                               : SiteKind::kAdjunction);
    }
    table[tree->name] = std::move(site);
  }
  return table;
}

FbRule no_adjunction_rule(const std::string& label, bool with_features) {
  FbRule r;
  r.lhs = adjunction_nt(label);
  r.terminal = kNoAdjunction;
  if (with_features) {
    r.lhs_feature.conjuncts.push_back(
        top_bot("top", FeatureTerm::var("v"), "bot", FeatureTerm::var("v")));
  }
  return r;
}

FbRtg to_rtg(const Tag& tag) { return translate(tag, false); }

FbRtg to_fbrtg(const Tag& tag) { return translate(tag, true); }

}  // namespace tagrtg
