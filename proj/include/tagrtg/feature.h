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

#ifndef TAGRTG_FEATURE_H_
#define TAGRTG_FEATURE_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tagrtg {

// An untyped feature term: an atom, a variable, or an attribute-value
// matrix. The empty matrix is the most general structure (written []).
//
// Matrices are open records: an attribute missing at one level is
// unconstrained. Attribute order is kept as written, for printing only;
// equality ignores it.
class FeatureTerm {
 public:
  enum class Kind { kAtom, kVar, kAvm };

  FeatureTerm() = default;  // top

  static FeatureTerm top() { return FeatureTerm(); }
  static FeatureTerm atom(std::string name);
  static FeatureTerm var(std::string name);
  // Throws std::invalid_argument on a repeated attribute.
  static FeatureTerm avm(std::vector<std::pair<std::string, FeatureTerm>> entries);

  Kind kind() const { return kind_; }
  bool is_atom() const { return kind_ == Kind::kAtom; }
  bool is_var() const { return kind_ == Kind::kVar; }
  bool is_avm() const { return kind_ == Kind::kAvm; }
  bool is_top() const { return kind_ == Kind::kAvm && keys_.empty(); }

  // Atom or variable name; empty for matrices.
  const std::string& name() const { return name_; }

  const std::vector<std::string>& keys() const { return keys_; }
  const std::vector<FeatureTerm>& values() const { return values_; }
  std::size_t size() const { return keys_.size(); }
  const FeatureTerm* find(std::string_view attr) const;

  friend bool operator==(const FeatureTerm& a, const FeatureTerm& b);

 private:
  Kind kind_ = Kind::kAvm;
  std::string name_;
  std::vector<std::string> keys_;
  std::vector<FeatureTerm> values_;
};

// A conjunction of feature terms; the empty conjunction is top. Used where
// the same attribute is constrained twice at one level, e.g. an interface
// [top: ?t, top: [agr: ?x]].
struct Constraint {
  std::vector<FeatureTerm> conjuncts;

  bool is_top() const;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

// Finite map from variable names to feature terms. The unifier and
// compose() keep it idempotent: no bound variable occurs in any image.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<std::string, FeatureTerm> bindings);

  static Substitution identity() { return Substitution(); }

  const FeatureTerm* lookup(const std::string& var) const;
  const std::map<std::string, FeatureTerm>& bindings() const { return bindings_; }
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }

  bool is_idempotent() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<std::string, FeatureTerm> bindings_;
};

struct Unified {
  FeatureTerm term;
  Substitution mgu;
};

// Most general unifier of two terms, with an occurs check. Returns
// nullopt on an atom clash, an atom against a non-empty matrix, or a
// cyclic binding.
std::optional<Unified> unify(const FeatureTerm& a, const FeatureTerm& b);

// Left fold of unify over the conjuncts, starting from top.
std::optional<Unified> unify_all(const Constraint& c);

// Simultaneous replacement of bound variables.
FeatureTerm apply(const Substitution& s, const FeatureTerm& t);
Constraint apply(const Substitution& s, const Constraint& c);

// apply(compose(outer, inner), t) == apply(outer, apply(inner, t)).
// The result is idempotent whenever the variables of `outer` avoid the
// domain of `inner`.
Substitution compose(const Substitution& outer, const Substitution& inner);

// Renames every variable v to "<prefix>.v".
FeatureTerm freshen(const FeatureTerm& t, std::string_view prefix);
Constraint freshen(const Constraint& c, std::string_view prefix);

// True iff some theta makes apply(theta, general) an (open-record)
// restriction of `specific`. Variables of `specific` are constants.
bool subsumes(const FeatureTerm& general, const FeatureTerm& specific);

// Equal up to a bijective renaming of variables.
bool is_variant(const FeatureTerm& a, const FeatureTerm& b);

// True iff every attribute path of `general` appears in `specific` with
// identical atoms and variables (no bindings needed).
bool extends(const FeatureTerm& general, const FeatureTerm& specific);

void collect_variables(const FeatureTerm& t, std::set<std::string>& out);
std::set<std::string> variables(const FeatureTerm& t);

}  // namespace tagrtg

#endif  // TAGRTG_FEATURE_H_
