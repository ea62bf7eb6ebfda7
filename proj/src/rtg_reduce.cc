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

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tagrtg/feature_syntax.h"
#include "tagrtg/rtg.h"

namespace tagrtg {
namespace {

using NtSet = std::set<std::string>;

NtSet productive(const std::vector<FbRule>& rules) {
  NtSet out;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : rules) {
      if (out.count(r.lhs)) continue;
      bool ok = std::all_of(r.rhs.begin(), r.rhs.end(), [&](const RhsSlot& s) {
        return out.count(s.nonterminal) > 0;
      });
      if (ok) {
        out.insert(r.lhs);
        changed = true;
      }
    }
  }
  return out;
}

void trim(FbRtg& g) {
  NtSet live = productive(g.rules);
  std::vector<FbRule> kept;
  for (const auto& r : g.rules) {
    bool ok = live.count(r.lhs) > 0;
    for (const auto& s : r.rhs) ok = ok && live.count(s.nonterminal) > 0;
    if (ok) kept.push_back(r);
  }
  NtSet reached{g.axiom};
  std::vector<std::string> work{g.axiom};
  while (!work.empty()) {
    std::string a = work.back();
    work.pop_back();
    for (const auto& r : kept) {
      if (r.lhs != a) continue;
      for (const auto& s : r.rhs) {
        if (reached.insert(s.nonterminal).second) work.push_back(s.nonterminal);
      }
    }
  }
  g.rules.clear();
  for (auto& r : kept) {
    if (reached.count(r.lhs)) g.rules.push_back(std::move(r));
  }
}

// Nonterminals whose only rule is a satisfiable "-> e_A".
NtSet trivial(const FbRtg& g) {
  std::map<std::string, int> count;
  std::map<std::string, bool> empty_rule;
  for (const auto& r : g.rules) {
    ++count[r.lhs];
    empty_rule[r.lhs] = r.terminal == kNoAdjunction && r.rhs.empty() &&
                        unify_all(r.lhs_feature).has_value();
  }
  NtSet out;
  for (const auto& [nt, n] : count) {
    if (n == 1 && empty_rule[nt]) out.insert(nt);
  }
  return out;
}

std::size_t slot_offset(const FbRtg& g, const std::string& terminal) {
  auto it = g.sites.find(terminal);
  if (it == g.sites.end()) return 0;
  return g.left_corner && it->second.initial && it->second.root_slot ? 1 : 0;
}

bool collapse(FbRtg& g) {
  NtSet null = trivial(g);
  std::map<std::string, std::vector<bool>> removable;
  for (const auto& r : g.rules) {
    if (r.terminal == kNoAdjunction || r.terminal == kSubstitutionStart) continue;
    auto [it, fresh] = removable.try_emplace(r.terminal, r.rhs.size(), true);
    auto& mask = it->second;
    for (std::size_t i = 0; i < r.rhs.size() && i < mask.size(); ++i) {
      mask[i] = mask[i] && null.count(r.rhs[i].nonterminal) > 0 &&
                r.rhs[i].feature.is_top();
    }
  }
  bool changed = false;
  for (const auto& [terminal, mask] : removable) {
    if (std::none_of(mask.begin(), mask.end(), [](bool b) { return b; })) continue;
    changed = true;
    std::size_t offset = slot_offset(g, terminal);
    for (auto& r : g.rules) {
      if (r.terminal != terminal) continue;
      for (std::size_t i = mask.size(); i-- > 0;) {
        if (mask[i]) r.rhs.erase(r.rhs.begin() + i);
      }
    }
    auto site = g.sites.find(terminal);
    if (site == g.sites.end()) continue;
    auto& slots = site->second.slots;
    for (std::size_t i = mask.size(); i-- > 0;) {
      if (!mask[i] || i + offset >= slots.size()) continue;
      slots.erase(slots.begin() + (i + offset));
      if (i + offset == 0) site->second.root_slot = false;
    }
  }
  return changed;
}

// Mirrors, for a plain left-corner grammar, the collapse of a root slot
// X_A -> e_A in the untransformed grammar: with no auxiliary tree rooted
// in X, the site table drops the root slot so the inverse matches.
void drop_unused_root_slots(FbRtg& g) {
  if (!g.left_corner || g.has_features()) return;
  for (auto& [terminal, site] : g.sites) {
    if (!site.initial || !site.root_slot) continue;
    std::set<std::string> lhs;
    for (const auto& r : g.rules) {
      if (r.terminal == terminal) lhs.insert(r.lhs);
    }
    bool adjoined = false;
    for (const auto& r : g.rules) {
      if (!lhs.count(r.lhs)) continue;
      auto other = g.sites.find(r.terminal);
      if (other != g.sites.end() && !other->second.initial) adjoined = true;
    }
    if (!adjoined && !lhs.empty()) {
      site.root_slot = false;
      if (!site.slots.empty()) site.slots.erase(site.slots.begin());
    }
  }
}

void regroup(FbRtg& g) {
  std::vector<std::string> order;
  NtSet seen;
  auto visit = [&](auto&& self, const std::string& a) -> void {
    if (!seen.insert(a).second) return;
    order.push_back(a);
    for (const auto& r : g.rules) {
      if (r.lhs != a) continue;
      for (const auto& s : r.rhs) self(self, s.nonterminal);
    }
  };
  visit(visit, g.axiom);

  std::vector<FbRule> rules;
  for (const auto& a : order) {
    for (const auto& r : g.rules) {
      if (r.lhs == a) rules.push_back(r);
    }
  }
  g.rules = std::move(rules);
  g.nonterminals = order;

  std::vector<Terminal> terminals;
  std::set<std::string> used;
  for (const auto& r : g.rules) {
    if (used.insert(r.terminal).second) {
      terminals.push_back({r.terminal, static_cast<int>(r.rhs.size())});
    }
  }
  g.terminals = std::move(terminals);
  for (auto it = g.sites.begin(); it != g.sites.end();) {
    it = used.count(it->first) ? std::next(it) : g.sites.erase(it);
  }
}

void count_vars(const FeatureTerm& t, std::map<std::string, int>& out) {
  if (t.is_var()) {
    ++out[t.name()];
  } else if (t.is_avm()) {
    for (const auto& v : t.values()) count_vars(v, out);
  }
}

FeatureTerm drop_singletons(const FeatureTerm& t,
                            const std::map<std::string, int>& counts) {
  if (t.is_var()) {
    return counts.at(t.name()) == 1 ? FeatureTerm::top() : t;
  }
  if (!t.is_avm()) return t;
  std::vector<std::pair<std::string, FeatureTerm>> entries;
  for (std::size_t i = 0; i < t.size(); ++i) {
    FeatureTerm v = drop_singletons(t.values()[i], counts);
    if (!v.is_top()) entries.emplace_back(t.keys()[i], std::move(v));
  }
  return FeatureTerm::avm(std::move(entries));
}

}  // namespace

FbRtg reduce(const FbRtg& g) {
  FbRtg out = g;
  do {
    trim(out);
  } while (collapse(out));
  drop_unused_root_slots(out);
  regroup(out);
  return out;
}

FbRule tidy(const FbRule& rule) {
  std::map<std::string, int> counts;
  for (const auto& c : rule.lhs_feature.conjuncts) count_vars(c, counts);
  for (const auto& s : rule.rhs) count_vars(s.feature, counts);

  FbRule out = rule;
  for (auto& c : out.lhs_feature.conjuncts) c = drop_singletons(c, counts);
  out.lhs_feature = normalize(out.lhs_feature);
  for (auto& s : out.rhs) s.feature = drop_singletons(s.feature, counts);
  return out;
}

}  // namespace tagrtg
