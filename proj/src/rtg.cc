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

#include "tagrtg/rtg.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "tagrtg/errors.h"
#include "tagrtg/feature_syntax.h"

namespace tagrtg {

std::string to_string(const GornAddress& address) {
  if (address.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < address.size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(address[i]);
  }
  return out;
}

std::optional<int> FbRtg::rank_of(const std::string& terminal) const {
  for (const auto& t : terminals) {
    if (t.name == terminal) return t.rank;
  }
  return std::nullopt;
}

bool FbRtg::has_features() const {
  for (const auto& r : rules) {
    if (!r.lhs_feature.is_top()) return true;
    for (const auto& slot : r.rhs) {
      if (!slot.feature.is_top()) return true;
    }
  }
  return false;
}

namespace {

bool contains(const std::vector<std::string>& list, const std::string& s) {
  return std::find(list.begin(), list.end(), s) != list.end();
}

void add_unique(std::vector<std::string>& list, const std::string& s) {
  if (!contains(list, s)) list.push_back(s);
}

}  // namespace

void validate(const FbRtg& g) {
  if (g.axiom.empty()) throw ValidationError("grammar has no axiom");
  if (!contains(g.nonterminals, g.axiom)) {
    throw ValidationError("axiom '" + g.axiom + "' is not a declared nonterminal");
  }
  std::set<std::string> seen;
  for (const auto& t : g.terminals) {
    if (!seen.insert(t.name).second) {
      throw ValidationError("terminal '" + t.name + "' declared twice");
    }
  }
  for (std::size_t i = 0; i < g.rules.size(); ++i) {
    const FbRule& r = g.rules[i];
    std::string where = "rule " + std::to_string(i + 1) + " (" + r.lhs + " -> " +
                        r.terminal + "): ";
    if (!contains(g.nonterminals, r.lhs)) {
      throw ValidationError(where + "undeclared nonterminal '" + r.lhs + "'");
    }
    for (const auto& slot : r.rhs) {
      if (!contains(g.nonterminals, slot.nonterminal)) {
        throw ValidationError(where + "undeclared nonterminal '" +
                              slot.nonterminal + "'");
      }
    }
    auto rank = g.rank_of(r.terminal);
    if (!rank) throw ValidationError(where + "undeclared terminal");
    if (*rank != static_cast<int>(r.rhs.size())) {
      throw ValidationError(where + "terminal has rank " + std::to_string(*rank) +
                            " but " + std::to_string(r.rhs.size()) + " arguments");
    }
    std::set<std::string> vars;
    for (const auto& c : r.lhs_feature.conjuncts) collect_variables(c, vars);
    for (const auto& slot : r.rhs) collect_variables(slot.feature, vars);
    for (const auto& v : vars) {
      if (v.find('.') != std::string::npos) {
        throw ValidationError(where + "variable ?" + v +
                              " contains '.', which is reserved for renaming");
      }
    }
  }
}

void complete_alphabet(FbRtg& g) {
  add_unique(g.nonterminals, g.axiom);
  for (const auto& r : g.rules) {
    add_unique(g.nonterminals, r.lhs);
    for (const auto& slot : r.rhs) add_unique(g.nonterminals, slot.nonterminal);
    if (!g.rank_of(r.terminal)) {
      g.terminals.push_back({r.terminal, static_cast<int>(r.rhs.size())});
    }
  }
}

bool operator==(const DerivTree& a, const DerivTree& b) {
  return a.label == b.label && a.children == b.children;
}

bool operator<(const DerivTree& a, const DerivTree& b) {
  if (a.label != b.label) return a.label < b.label;
  return std::lexicographical_compare(a.children.begin(), a.children.end(),
                                      b.children.begin(), b.children.end());
}

int DerivTree::height() const {
  int h = 0;
  for (const auto& c : children) h = std::max(h, c.height());
  return h + 1;
}

std::size_t DerivTree::size() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.size();
  return n;
}

SententialTerm SententialTerm::start(const FbRtg& g) {
  SententialTerm s;
  s.root.open = true;
  s.root.symbol = g.axiom;
  return s;
}

namespace {

void collect_open(const SententialNode& node, GornAddress& at,
                  std::vector<GornAddress>& out) {
  if (node.open) {
    out.push_back(at);
    return;
  }
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    at.push_back(static_cast<int>(i) + 1);
    collect_open(node.children[i], at, out);
    at.pop_back();
  }
}

DerivTree to_tree(const SententialNode& node) {
  DerivTree t{node.symbol, {}};
  for (const auto& c : node.children) t.children.push_back(to_tree(c));
  return t;
}

}  // namespace

std::vector<GornAddress> SententialTerm::open_leaves() const {
  std::vector<GornAddress> out;
  GornAddress at;
  collect_open(root, at, out);
  return out;
}

std::optional<DerivTree> SententialTerm::tree() const {
  if (!is_complete()) return std::nullopt;
  return to_tree(root);
}

std::optional<Narrowing> narrow(const FbRule& rule, const GornAddress& at,
                                const FeatureTerm& leaf_feature,
                                const Substitution& env) {
  const std::string prefix = to_string(at);
  Constraint problem = freshen(rule.lhs_feature, prefix);
  problem.conjuncts.push_back(apply(env, leaf_feature));
  auto solved = unify_all(problem);
  if (!solved) return std::nullopt;
  Narrowing out;
  out.sigma = std::move(solved->mgu);
  out.child_features.reserve(rule.rhs.size());
  for (const auto& slot : rule.rhs) {
    out.child_features.push_back(apply(out.sigma, freshen(slot.feature, prefix)));
  }
  out.env = compose(out.sigma, env);
  return out;
}

std::optional<SententialTerm> derive_step(const SententialTerm& state,
                                          const GornAddress& position,
                                          const FbRule& rule) {
  SententialTerm next = state;
  SententialNode* node = &next.root;
  for (int index : position) {
    if (node->open || index < 1 ||
        index > static_cast<int>(node->children.size())) {
      throw PositionError("no node at address " + to_string(position));
    }
    node = &node->children[index - 1];
  }
  if (!node->open) {
    throw PositionError("address " + to_string(position) +
                        " is not a (nonterminal, feature) leaf");
  }
  if (node->symbol != rule.lhs) {
    throw NonterminalMismatch("leaf nonterminal " + node->symbol +
                              " does not match rule lhs " + rule.lhs);
  }
  auto step = narrow(rule, position, node->feature, state.env);
  if (!step) return std::nullopt;
  node->open = false;
  node->symbol = rule.terminal;
  node->feature = FeatureTerm::top();
  node->children.clear();
  for (std::size_t i = 0; i < rule.rhs.size(); ++i) {
    node->children.push_back(
        SententialNode{true, rule.rhs[i].nonterminal, step->child_features[i], {}});
  }
  next.env = std::move(step->env);
  return next;
}

namespace {

struct Pending {
  GornAddress address;
  std::string nonterminal;
  int depth;
};

struct Assigned {
  GornAddress address;
  std::string terminal;
  std::size_t rank;
};

DerivTree assemble(std::vector<Assigned> nodes) {
  std::sort(nodes.begin(), nodes.end(),
            [](const Assigned& a, const Assigned& b) { return a.address < b.address; });
  std::size_t next = 0;
  auto build = [&](auto&& self) -> DerivTree {
    const Assigned& here = nodes[next++];
    DerivTree t{here.terminal, {}};
    for (std::size_t i = 0; i < here.rank; ++i) t.children.push_back(self(self));
    return t;
  };
  return build(build);
}

// Features of the pending leaves with the environment already applied.
// Only these matter for the rest of a derivation.
using State = std::vector<FeatureTerm>;

void canonical_names(const FeatureTerm& t, std::map<std::string, FeatureTerm>& names) {
  if (t.is_var()) {
    if (!names.count(t.name())) {
      names.emplace(t.name(), FeatureTerm::var("~" + std::to_string(names.size())));
    }
  } else if (t.is_avm()) {
    for (const auto& v : t.values()) canonical_names(v, names);
  }
}

// Renames variables in order of first occurrence, so that states equal up
// to renaming get the same key.
std::pair<std::string, State> canonical(const State& state) {
  std::map<std::string, FeatureTerm> names;
  for (const auto& t : state) canonical_names(t, names);
  Substitution rename(std::move(names));
  State out;
  std::string key;
  for (const auto& t : state) {
    out.push_back(apply(rename, t));
    key += to_string(out.back());
    key += '\n';
  }
  return {std::move(key), std::move(out)};
}

// Depth-first over tree shapes: each choice of terminal at the selected
// leaf is tried against every alternative state reached so far, so trees
// reachable by several rule sequences are explored once.
class Enumerator {
 public:
  Enumerator(const FbRtg& g, int max_depth, Strategy strategy,
             EnumerationStats* stats)
      : g_(g), max_depth_(max_depth), strategy_(strategy), stats_(stats) {
    for (std::size_t i = 0; i < g.rules.size(); ++i) {
      const FbRule& r = g.rules[i];
      auto& groups = by_lhs_[r.lhs];
      std::vector<std::string> children;
      for (const auto& slot : r.rhs) children.push_back(slot.nonterminal);
      auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& grp) {
        return grp.terminal == r.terminal && grp.children == children;
      });
      if (it == groups.end()) {
        groups.push_back({r.terminal, r.rhs.size(), children, {}});
        it = std::prev(groups.end());
      }
      it->rules.push_back(i);
    }
  }

  std::vector<DerivTree> run() {
    std::vector<Pending> start{{{}, g_.axiom, 1}};
    search(start, {State{FeatureTerm::top()}});
    return {results_.begin(), results_.end()};
  }

 private:
  struct Group {
    std::string terminal;
    std::size_t rank;
    std::vector<std::string> children;
    std::vector<std::size_t> rules;
  };

  void search(const std::vector<Pending>& pending, const std::vector<State>& states) {
    if (pending.empty()) {
      results_.insert(assemble(assigned_));
      return;
    }
    std::size_t pick = strategy_ == Strategy::kLeftmost ? 0 : pending.size() - 1;
    const Pending& leaf = pending[pick];
    auto it = by_lhs_.find(leaf.nonterminal);
    if (it == by_lhs_.end()) return;
    for (const Group& group : it->second) {
      if (group.rank > 0 && leaf.depth + 1 > max_depth_) continue;
      std::map<std::string, State> next_states;
      for (const State& state : states) {
        for (std::size_t index : group.rules) {
          if (stats_ != nullptr) ++stats_->narrowings;
          auto step = narrow(g_.rules[index], leaf.address, state[pick],
                             Substitution::identity());
          if (!step) {
            if (stats_ != nullptr) ++stats_->failures;
            continue;
          }
          State next;
          next.reserve(state.size() + group.rank);
          for (std::size_t j = 0; j < pick; ++j) next.push_back(apply(step->sigma, state[j]));
          for (auto& c : step->child_features) next.push_back(std::move(c));
          for (std::size_t j = pick + 1; j < state.size(); ++j) {
            next.push_back(apply(step->sigma, state[j]));
          }
          next_states.insert(canonical(next));
        }
      }
      if (next_states.empty()) continue;
      std::vector<State> alternatives;
      alternatives.reserve(next_states.size());
      for (auto& [key, st] : next_states) alternatives.push_back(std::move(st));

      std::vector<Pending> next;
      next.reserve(pending.size() + group.rank);
      next.insert(next.end(), pending.begin(), pending.begin() + pick);
      for (std::size_t i = 0; i < group.rank; ++i) {
        GornAddress child = leaf.address;
        child.push_back(static_cast<int>(i) + 1);
        next.push_back({std::move(child), group.children[i], leaf.depth + 1});
      }
      next.insert(next.end(), pending.begin() + pick + 1, pending.end());
      assigned_.push_back({leaf.address, group.terminal, group.rank});
      search(next, alternatives);
      assigned_.pop_back();
    }
  }

  const FbRtg& g_;
  int max_depth_;
  Strategy strategy_;
  EnumerationStats* stats_;
  std::map<std::string, std::vector<Group>> by_lhs_;
  std::vector<Assigned> assigned_;
  std::set<DerivTree> results_;
};

struct Target {
  const DerivTree* node;
  GornAddress address;
  std::string nonterminal;
  FeatureTerm feature;
};

class Matcher {
 public:
  explicit Matcher(const FbRtg& g) : g_(g) {
    for (std::size_t i = 0; i < g.rules.size(); ++i) {
      by_key_[{g.rules[i].lhs, g.rules[i].terminal}].push_back(i);
    }
  }

  MembershipResult run(const DerivTree& t) {
    std::vector<Target> start{{&t, {}, g_.axiom, FeatureTerm::top()}};
    result_.accepted = search(start, Substitution::identity());
    if (result_.accepted) {
      result_.failure_address.reset();
      result_.failure_rule.reset();
    }
    return std::move(result_);
  }

 private:
  bool search(const std::vector<Target>& pending, const Substitution& env) {
    if (pending.empty()) {
      result_.env = env;
      result_.steps = steps_;
      return true;
    }
    const Target& leaf = pending.front();
    auto it = by_key_.find({leaf.nonterminal, leaf.node->label});
    if (it == by_key_.end()) {
      note_failure(leaf.address, std::nullopt);
      return false;
    }
    for (std::size_t index : it->second) {
      const FbRule& rule = g_.rules[index];
      ++result_.attempts;
      auto step = narrow(rule, leaf.address, leaf.feature, env);
      if (!step) {
        ++result_.failures;
        note_failure(leaf.address, index);
        continue;
      }
      std::vector<Target> next;
      next.reserve(pending.size() + rule.rhs.size());
      for (std::size_t i = 0; i < rule.rhs.size(); ++i) {
        GornAddress child = leaf.address;
        child.push_back(static_cast<int>(i) + 1);
        next.push_back({&leaf.node->children[i], std::move(child),
                        rule.rhs[i].nonterminal, step->child_features[i]});
      }
      next.insert(next.end(), pending.begin() + 1, pending.end());
      steps_.push_back({leaf.address, index, leaf.feature, step->sigma, step->env});
      if (search(next, step->env)) return true;
      steps_.pop_back();
    }
    return false;
  }

  void note_failure(const GornAddress& at, std::optional<std::size_t> rule) {
    if (!result_.failure_address || steps_.size() >= deepest_) {
      deepest_ = steps_.size();
      result_.failure_address = at;
      result_.failure_rule = rule;
    }
  }

  const FbRtg& g_;
  std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> by_key_;
  std::vector<DerivationStep> steps_;
  std::size_t deepest_ = 0;
  MembershipResult result_;
};

void check_alphabet(const FbRtg& g, const DerivTree& t) {
  auto rank = g.rank_of(t.label);
  if (!rank) throw AlphabetError("undeclared terminal '" + t.label + "'");
  if (*rank != static_cast<int>(t.children.size())) {
    throw AlphabetError("terminal '" + t.label + "' has rank " +
                        std::to_string(*rank) + " but " +
                        std::to_string(t.children.size()) + " children");
  }
  for (const auto& c : t.children) check_alphabet(g, c);
}

}  // namespace

std::vector<DerivTree> enumerate(const FbRtg& g, int max_depth, Strategy strategy,
                                 EnumerationStats* stats) {
  if (max_depth < 1) throw std::invalid_argument("max_depth must be at least 1");
  return Enumerator(g, max_depth, strategy, stats).run();
}

MembershipResult check_membership(const FbRtg& g, const DerivTree& t) {
  check_alphabet(g, t);
  return Matcher(g).run(t);
}

std::optional<Substitution> accepts(const FbRtg& g, const DerivTree& t) {
  MembershipResult r = check_membership(g, t);
  if (!r.accepted) return std::nullopt;
  return std::move(r.env);
}

FbRtg erase_features(const FbRtg& g) {
  FbRtg out = g;
  for (auto& r : out.rules) {
    r.lhs_feature = Constraint{};
    for (auto& slot : r.rhs) slot.feature = FeatureTerm::top();
  }
  return out;
}

}  // namespace tagrtg
