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

#include "tagrtg/left_corner.h"

#include <string>
#include <vector>

#include "tagrtg/rtg_syntax.h"
#include "tagrtg/translate.h"

namespace tagrtg {
namespace {

FeatureTerm var(const std::string& name) { return FeatureTerm::var(name); }

RhsSlot tr(const ActiveNode& a, bool with_features, const std::string& v) {
  RhsSlot slot{nt(*a.node), FeatureTerm::top()};
  if (with_features) slot.feature = feats(*a.node, a.is_root, v);
  return slot;
}

// [top: ?t] & [top: top(root)] & [bot: bot(root)].
Constraint feats_lc_root(const TreeNode& root, const std::string& v) {
  Constraint c;
  c.conjuncts.push_back(FeatureTerm::avm({{"top", var(v)}}));
  c.conjuncts.push_back(FeatureTerm::avm({{"top", root.top}}));
  c.conjuncts.push_back(FeatureTerm::avm({{"bot", root.bot}}));
  return c;
}

FbRule finish(FbRule r, bool with_features) {
  return with_features ? tidy(r) : r;
}

FbRule untransformed(const ElemTree& tree, bool with_features) {
  const std::string v = interface_variable(tree);
  FbRule r;
  r.lhs = substitution_nt(tree.root.label);
  r.terminal = tree.name;
  if (with_features) r.lhs_feature = interface_of(tree, v);
  for (const auto& a : active_nodes(tree)) r.rhs.push_back(tr(a, with_features, v));
  return finish(r, with_features);
}

// (X, feats_lc(alpha_1)) -> alpha(tr_lc(alpha_2), ...).
FbRule initial_rule(const ElemTree& tree, bool with_features) {
  const std::string v = interface_variable(tree);
  FbRule r;
  r.lhs = tree.root.label;
  r.terminal = tree.name;
  if (with_features) r.lhs_feature = feats_lc_root(tree.root, v);
  auto active = active_nodes(tree);
  for (std::size_t i = 1; i < active.size(); ++i) {
    r.rhs.push_back(tr(active[i], with_features, v));
  }
  return finish(r, with_features);
}

// (X, feats_lc(beta_1)) -> beta((X, in_lc(beta)), tr_lc(beta_2), ...).
FbRule root_adjunction_rule(const ElemTree& tree, bool with_features) {
  const std::string v = interface_variable(tree);
  FbRule r;
  r.lhs = tree.root.label;
  r.terminal = tree.name;
  RhsSlot first{tree.root.label, FeatureTerm::top()};
  if (with_features) {
    r.lhs_feature = feats_lc_root(tree.root, v);
    first.feature = FeatureTerm::avm({{"top", var(v)}, {"bot", foot(tree)->bot}});
  }
  r.rhs.push_back(std::move(first));
  auto active = active_nodes(tree);
  for (std::size_t i = 1; i < active.size(); ++i) {
    r.rhs.push_back(tr(active[i], with_features, v));
  }
  return finish(r, with_features);
}

// (X_A, in(beta)) -> beta(tr(beta_1), tr_lc(beta_2), ...).
FbRule adjunction_rule(const ElemTree& tree, bool with_features) {
  const std::string v = interface_variable(tree);
  FbRule r;
  r.lhs = adjunction_nt(tree.root.label);
  r.terminal = tree.name;
  if (with_features) r.lhs_feature = interface_of(tree, v);
  for (const auto& a : active_nodes(tree)) r.rhs.push_back(tr(a, with_features, v));
  return finish(r, with_features);
}

FbRule start_rule(const std::string& label, bool with_features) {
  FbRule r;
  r.lhs = substitution_nt(label);
  r.terminal = kSubstitutionStart;
  RhsSlot slot{label, FeatureTerm::top()};
  if (with_features) {
    r.lhs_feature.conjuncts.push_back(FeatureTerm::avm({{"top", var("t")}}));
    slot.feature = FeatureTerm::avm({{"top", var("t")}, {"bot", var("t")}});
  }
  r.rhs.push_back(std::move(slot));
  return r;
}

bool root_active(const ElemTree& tree) {
  return tree.root.kind == NodeKind::kAdjunction;
}

FbRtg transform(const Tag& tag, bool with_features) {
  for (const auto& beta : tag.auxiliary) {
    if (!root_active(beta)) {
      throw RootNotAdjoinable("auxiliary tree '" + beta.name +
                              "': root is not an adjunction site");
    }
  }
  FbRtg g;
  g.left_corner = true;
  g.axiom = substitution_nt(tag.start);
  g.nonterminals = tag.nonterminals;
  for (const auto& x : tag.nonterminals) g.nonterminals.push_back(substitution_nt(x));
  for (const auto& x : tag.nonterminals) g.nonterminals.push_back(adjunction_nt(x));
  for (const ElemTree* tree : tag.trees()) {
    int r = rank(*tree);
    if (!tree->is_auxiliary() && root_active(*tree)) --r;
    g.terminals.push_back({tree->name, r});
  }
  g.terminals.push_back({kNoAdjunction, 0});
  g.terminals.push_back({kSubstitutionStart, 1});

  for (const auto& x : tag.nonterminals) g.rules.push_back(start_rule(x, with_features));
  for (const auto& alpha : tag.initial) {
    g.rules.push_back(root_active(alpha) ? initial_rule(alpha, with_features)
                                         : untransformed(alpha, with_features));
  }
  for (const auto& beta : tag.auxiliary) {
    g.rules.push_back(root_adjunction_rule(beta, with_features));
  }
  for (const auto& beta : tag.auxiliary) {
    g.rules.push_back(adjunction_rule(beta, with_features));
  }
  for (const auto& x : tag.nonterminals) {
    g.rules.push_back(no_adjunction_rule(x, with_features));
  }
  g.sites = build_site_table(tag);
  return g;
}

class Inverter {
 public:
  explicit Inverter(const SiteTable& sites) : sites_(sites) {}

  // Tree at a substitution slot.
  DerivTree inv(const DerivTree& t) const {
    if (t.label == kSubstitutionStart) {
      if (t.children.size() != 1) fail(t, "e_S must have exactly one child");
      return s(t.children[0], DerivTree{kNoAdjunction, {}});
    }
    const SiteInfo& site = lookup(t);
    if (site.initial && !site.root_slot) return a(t);
    fail(t, "expected e_S or an untransformed initial tree at a substitution site");
  }

  // Tree at an adjunction slot; no transformation happened below it.
  DerivTree a(const DerivTree& t) const {
    if (t.label == kNoAdjunction) {
      if (!t.children.empty()) fail(t, "e_A takes no children");
      return t;
    }
    const SiteInfo& site = lookup(t);
    if (site.initial && site.root_slot) fail(t, "initial tree at an adjunction site");
    check_arity(t, site.slots.size());
    DerivTree out{t.label, {}};
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      out.children.push_back(f(site.slots[i], t.children[i]));
    }
    return out;
  }

 private:
  // Walks a chain of root adjunctions, accumulating the original tree.
  DerivTree s(const DerivTree& t, DerivTree acc) const {
    const SiteInfo& site = lookup(t);
    if (!site.initial) {
      check_arity(t, site.slots.size());
      if (t.children.empty()) fail(t, "auxiliary tree without root slot");
      DerivTree wrapped{t.label, {std::move(acc)}};
      for (std::size_t i = 1; i < t.children.size(); ++i) {
        wrapped.children.push_back(f(site.slots[i], t.children[i]));
      }
      return s(t.children[0], std::move(wrapped));
    }
    if (!site.root_slot) {
      if (!(acc == DerivTree{kNoAdjunction, {}})) {
        fail(t, "root adjunction into a tree without a root adjunction site");
      }
      return a_initial(t, site);
    }
    check_arity(t, site.slots.size() - 1);
    DerivTree out{t.label, {std::move(acc)}};
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      out.children.push_back(f(site.slots[i + 1], t.children[i]));
    }
    return out;
  }

  DerivTree a_initial(const DerivTree& t, const SiteInfo& site) const {
    check_arity(t, site.slots.size());
    DerivTree out{t.label, {}};
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      out.children.push_back(f(site.slots[i], t.children[i]));
    }
    return out;
  }

  DerivTree f(SiteKind kind, const DerivTree& t) const {
    return kind == SiteKind::kAdjunction ? a(t) : inv(t);
  }

  const SiteInfo& lookup(const DerivTree& t) const {
    auto it = sites_.find(t.label);
    if (it == sites_.end()) fail(t, "unknown elementary tree");
    return it->second;
  }

  void check_arity(const DerivTree& t, std::size_t expected) const {
    if (t.children.size() != expected) {
      fail(t, "expected " + std::to_string(expected) + " children, found " +
                  std::to_string(t.children.size()));
    }
  }

  [[noreturn]] void fail(const DerivTree& t, const std::string& why) const {
    throw MalformedLcTree(format_tree(t) + ": " + why);
  }

  const SiteTable& sites_;
};

}  // namespace

FbRtg lc_rtg(const Tag& tag) { return transform(tag, false); }

FbRtg lc_fbrtg(const Tag& tag) { return transform(tag, true); }

DerivTree lc_inverse(const DerivTree& t, const SiteTable& sites) {
  return Inverter(sites).inv(t);
}

}  // namespace tagrtg
