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

#include "tagrtg/feature.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace tagrtg {

FeatureTerm FeatureTerm::atom(std::string name) {
  FeatureTerm t;
  t.kind_ = Kind::kAtom;
  t.name_ = std::move(name);
  return t;
}

FeatureTerm FeatureTerm::var(std::string name) {
  FeatureTerm t;
  t.kind_ = Kind::kVar;
  t.name_ = std::move(name);
  return t;
}

FeatureTerm FeatureTerm::avm(
    std::vector<std::pair<std::string, FeatureTerm>> entries) {
  FeatureTerm t;
  t.keys_.reserve(entries.size());
  t.values_.reserve(entries.size());
  for (auto& [key, value] : entries) {
    if (t.find(key) != nullptr) {
      throw std::invalid_argument("duplicate attribute '" + key + "'");
    }
    t.keys_.push_back(std::move(key));
    t.values_.push_back(std::move(value));
  }
  return t;
}

const FeatureTerm* FeatureTerm::find(std::string_view attr) const {
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (keys_[i] == attr) return &values_[i];
  }
  return nullptr;
}

bool operator==(const FeatureTerm& a, const FeatureTerm& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != FeatureTerm::Kind::kAvm) return a.name_ == b.name_;
  if (a.keys_.size() != b.keys_.size()) return false;
  for (std::size_t i = 0; i < a.keys_.size(); ++i) {
    const FeatureTerm* other = b.find(a.keys_[i]);
    if (other == nullptr || !(a.values_[i] == *other)) return false;
  }
  return true;
}

bool Constraint::is_top() const {
  return std::all_of(conjuncts.begin(), conjuncts.end(),
                     [](const FeatureTerm& t) { return t.is_top(); });
}

Substitution::Substitution(std::map<std::string, FeatureTerm> bindings)
    : bindings_(std::move(bindings)) {}

const FeatureTerm* Substitution::lookup(const std::string& var) const {
  auto it = bindings_.find(var);
  return it == bindings_.end() ? nullptr : &it->second;
}

bool Substitution::is_idempotent() const {
  for (const auto& [v, t] : bindings_) {
    for (const auto& w : variables(t)) {
      if (bindings_.count(w) != 0) return false;
    }
  }
  return true;
}

void collect_variables(const FeatureTerm& t, std::set<std::string>& out) {
  if (t.is_var()) {
    out.insert(t.name());
  } else if (t.is_avm()) {
    for (const auto& v : t.values()) collect_variables(v, out);
  }
}

std::set<std::string> variables(const FeatureTerm& t) {
  std::set<std::string> out;
  collect_variables(t, out);
  return out;
}

namespace {

FeatureTerm rebuild(const FeatureTerm& t, std::vector<FeatureTerm> values) {
  std::vector<std::pair<std::string, FeatureTerm>> entries;
  entries.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    entries.emplace_back(t.keys()[i], std::move(values[i]));
  }
  return FeatureTerm::avm(std::move(entries));
}

// Unification state over a triangular substitution. Bindings may mention
// other bound variables while unifying; resolve() flattens them. Matrices
// bound to a variable are re-bound to their merge when the variable meets
// more information, so re-entrant paths stay shared.
class Unifier {
 public:
  std::optional<FeatureTerm> unify(const FeatureTerm& a_in,
                                   const FeatureTerm& b_in) {
    const FeatureTerm a = walk(a_in);
    const FeatureTerm b = walk(b_in);
    if (a.is_top()) return b;
    if (b.is_top()) return a;
    if (a.is_var() && b.is_var() && a.name() == b.name()) return a;
    if (a.is_var()) return unify_var(a, b);
    if (b.is_var()) return unify_var(b, a);
    if (a.is_atom() || b.is_atom()) {
      if (a.is_atom() && b.is_atom() && a.name() == b.name()) return a;
      return std::nullopt;
    }
    std::vector<std::pair<std::string, FeatureTerm>> entries;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const FeatureTerm* other = b.find(a.keys()[i]);
      if (other == nullptr) {
        entries.emplace_back(a.keys()[i], a.values()[i]);
        continue;
      }
      auto merged = unify(a.values()[i], *other);
      if (!merged) return std::nullopt;
      entries.emplace_back(a.keys()[i], std::move(*merged));
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (a.find(b.keys()[i]) == nullptr) {
        entries.emplace_back(b.keys()[i], b.values()[i]);
      }
    }
    return FeatureTerm::avm(std::move(entries));
  }

  FeatureTerm resolve(const FeatureTerm& t) const {
    if (t.is_var()) {
      auto it = bindings_.find(t.name());
      return it == bindings_.end() ? t : resolve(it->second);
    }
    if (!t.is_avm() || t.is_top()) return t;
    std::vector<FeatureTerm> values;
    values.reserve(t.size());
    for (const auto& v : t.values()) values.push_back(resolve(v));
    return rebuild(t, std::move(values));
  }

  Substitution solved() const {
    std::map<std::string, FeatureTerm> out;
    for (const auto& [v, t] : bindings_) {
      FeatureTerm r = resolve(t);
      if (!(r.is_var() && r.name() == v)) out.emplace(v, std::move(r));
    }
    return Substitution(std::move(out));
  }

 private:
  std::optional<FeatureTerm> unify_var(const FeatureTerm& v,
                                       const FeatureTerm& other) {
    auto it = bindings_.find(v.name());
    if (it != bindings_.end()) {
      FeatureTerm current = it->second;
      auto merged = unify(current, other);
      if (!merged) return std::nullopt;
      if (merged->is_var() && merged->name() == v.name()) return v;
      if (occurs(v.name(), *merged)) return std::nullopt;
      bindings_[v.name()] = std::move(*merged);
      return v;
    }
    if (occurs(v.name(), other)) return std::nullopt;
    bindings_.emplace(v.name(), other);
    return v;
  }

  // Follows variable-to-variable bindings.
  const FeatureTerm& walk(const FeatureTerm& t) const {
    const FeatureTerm* cur = &t;
    while (cur->is_var()) {
      auto it = bindings_.find(cur->name());
      if (it == bindings_.end() || !it->second.is_var()) break;
      cur = &it->second;
    }
    return *cur;
  }

  // Walks through bindings of other variables; reaching `var` means the
  // binding would be cyclic.
  bool occurs(const std::string& var, const FeatureTerm& t) const {
    if (t.is_var()) {
      if (t.name() == var) return true;
      auto it = bindings_.find(t.name());
      return it != bindings_.end() && occurs(var, it->second);
    }
    if (t.is_avm()) {
      for (const auto& v : t.values()) {
        if (occurs(var, v)) return true;
      }
    }
    return false;
  }

  std::map<std::string, FeatureTerm> bindings_;
};

}  // namespace

std::optional<Unified> unify(const FeatureTerm& a, const FeatureTerm& b) {
  Unifier u;
  auto merged = u.unify(a, b);
  if (!merged) return std::nullopt;
  return Unified{u.resolve(*merged), u.solved()};
}

std::optional<Unified> unify_all(const Constraint& c) {
  Unifier u;
  FeatureTerm acc = FeatureTerm::top();
  for (const auto& conjunct : c.conjuncts) {
    auto merged = u.unify(acc, conjunct);
    if (!merged) return std::nullopt;
    acc = std::move(*merged);
  }
  return Unified{u.resolve(acc), u.solved()};
}

FeatureTerm apply(const Substitution& s, const FeatureTerm& t) {
  if (s.empty()) return t;
  if (t.is_var()) {
    const FeatureTerm* bound = s.lookup(t.name());
    return bound != nullptr ? *bound : t;
  }
  if (!t.is_avm() || t.is_top()) return t;
  std::vector<FeatureTerm> values;
  values.reserve(t.size());
  for (const auto& v : t.values()) values.push_back(apply(s, v));
  return rebuild(t, std::move(values));
}

Constraint apply(const Substitution& s, const Constraint& c) {
  Constraint out;
  out.conjuncts.reserve(c.conjuncts.size());
  for (const auto& t : c.conjuncts) out.conjuncts.push_back(apply(s, t));
  return out;
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  std::map<std::string, FeatureTerm> out;
  for (const auto& [v, t] : inner.bindings()) {
    FeatureTerm image = apply(outer, t);
    if (!(image.is_var() && image.name() == v)) out.emplace(v, std::move(image));
  }
  for (const auto& [v, t] : outer.bindings()) {
    if (inner.lookup(v) == nullptr) out.emplace(v, t);
  }
  return Substitution(std::move(out));
}

FeatureTerm freshen(const FeatureTerm& t, std::string_view prefix) {
  if (t.is_var()) {
    std::string name(prefix);
    name += '.';
    name += t.name();
    return FeatureTerm::var(std::move(name));
  }
  if (!t.is_avm() || t.is_top()) return t;
  std::vector<FeatureTerm> values;
  values.reserve(t.size());
  for (const auto& v : t.values()) values.push_back(freshen(v, prefix));
  return rebuild(t, std::move(values));
}

Constraint freshen(const Constraint& c, std::string_view prefix) {
  Constraint out;
  out.conjuncts.reserve(c.conjuncts.size());
  for (const auto& t : c.conjuncts) out.conjuncts.push_back(freshen(t, prefix));
  return out;
}

namespace {

bool match(const FeatureTerm& general, const FeatureTerm& specific,
           std::map<std::string, FeatureTerm>& theta) {
  if (general.is_top()) return true;
  if (general.is_var()) {
    auto [it, inserted] = theta.emplace(general.name(), specific);
    return inserted || it->second == specific;
  }
  if (general.is_atom()) {
    return specific.is_atom() && specific.name() == general.name();
  }
  if (!specific.is_avm()) return false;
  for (std::size_t i = 0; i < general.size(); ++i) {
    const FeatureTerm* other = specific.find(general.keys()[i]);
    if (other == nullptr) {
      if (general.values()[i].is_top()) continue;
      return false;
    }
    if (!match(general.values()[i], *other, theta)) return false;
  }
  return true;
}

}  // namespace

bool subsumes(const FeatureTerm& general, const FeatureTerm& specific) {
  std::map<std::string, FeatureTerm> theta;
  return match(general, specific, theta);
}

bool is_variant(const FeatureTerm& a, const FeatureTerm& b) {
  return subsumes(a, b) && subsumes(b, a);
}

bool extends(const FeatureTerm& general, const FeatureTerm& specific) {
  if (general.is_top()) return true;
  if (!general.is_avm()) {
    return specific.kind() == general.kind() && specific.name() == general.name();
  }
  if (!specific.is_avm()) return false;
  for (std::size_t i = 0; i < general.size(); ++i) {
    const FeatureTerm* other = specific.find(general.keys()[i]);
    if (other == nullptr) {
      if (general.values()[i].is_top()) continue;
      return false;
    }
    if (!extends(general.values()[i], *other)) return false;
  }
  return true;
}

}  // namespace tagrtg
