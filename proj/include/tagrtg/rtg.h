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

#ifndef TAGRTG_RTG_H_
#define TAGRTG_RTG_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tagrtg/feature.h"

namespace tagrtg {

inline constexpr char kNoAdjunction[] = "e_A";
inline constexpr char kSubstitutionStart[] = "e_S";

// Positional address of a tree node; child indices are 1-based and the
// root is the empty address, printed as "ε".
using GornAddress = std::vector<int>;
std::string to_string(const GornAddress& address);

// Which kind of elementary-tree node each argument slot of a derivation
// terminal stands for. Needed to undo the left-corner transform.
enum class SiteKind { kSubstitution, kAdjunction };

struct SiteInfo {
  bool initial = true;
  // slots[0] is the root adjunction site.
  bool root_slot = false;
  std::vector<SiteKind> slots;

  friend bool operator==(const SiteInfo&, const SiteInfo&) = default;
};

using SiteTable = std::map<std::string, SiteInfo>;

struct RhsSlot {
  std::string nonterminal;
  FeatureTerm feature;

  friend bool operator==(const RhsSlot&, const RhsSlot&) = default;
};

// (A, d) -> a((B1, d1), ..., (Bn, dn)).
struct FbRule {
  std::string lhs;
  Constraint lhs_feature;
  std::string terminal;
  std::vector<RhsSlot> rhs;

  friend bool operator==(const FbRule&, const FbRule&) = default;
};

struct Terminal {
  std::string name;
  int rank = 0;

  friend bool operator==(const Terminal&, const Terminal&) = default;
};

// Feature-based regular tree grammar. A plain RTG is the case where every
// feature is top.
struct FbRtg {
  std::string axiom;
  std::vector<std::string> nonterminals;
  std::vector<Terminal> terminals;
  std::vector<FbRule> rules;
  // Metadata carried for the left-corner inverse.
  bool left_corner = false;
  SiteTable sites;

  std::optional<int> rank_of(const std::string& terminal) const;
  bool has_features() const;

  friend bool operator==(const FbRtg&, const FbRtg&) = default;
};

// Throws ValidationError on an undeclared symbol or inconsistent rank.
void validate(const FbRtg& g);

// Appends nonterminals and terminals used by the rules to the declared
// alphabets, in order of first appearance.
void complete_alphabet(FbRtg& g);

struct DerivTree {
  std::string label;
  std::vector<DerivTree> children;

  int height() const;
  std::size_t size() const;

  friend bool operator==(const DerivTree& a, const DerivTree& b);
  friend bool operator<(const DerivTree& a, const DerivTree& b);
};

// A term over terminals and (nonterminal, feature) leaves, plus the
// environment threaded through the derivation.
struct SententialNode {
  bool open = true;
  std::string symbol;   // nonterminal when open, terminal otherwise
  FeatureTerm feature;  // meaningful when open
  std::vector<SententialNode> children;
};

struct SententialTerm {
  SententialNode root;
  Substitution env;

  static SententialTerm start(const FbRtg& g);
  std::vector<GornAddress> open_leaves() const;
  bool is_complete() const { return open_leaves().empty(); }
  std::optional<DerivTree> tree() const;
};

class PositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonterminalMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AlphabetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Result of one narrowing: leaf (A, d') rewritten with a rule whose
// variables are prefixed with the leaf address.
struct Narrowing {
  std::vector<FeatureTerm> child_features;  // sigma(d'_i)
  Substitution sigma;                       // mgu(d, e(d'))
  Substitution env;                         // sigma o e
};

std::optional<Narrowing> narrow(const FbRule& rule, const GornAddress& at,
                                const FeatureTerm& leaf_feature,
                                const Substitution& env);

std::optional<SententialTerm> derive_step(const SententialTerm& state,
                                          const GornAddress& position,
                                          const FbRule& rule);

enum class Strategy { kLeftmost, kRightmost };

struct EnumerationStats {
  long narrowings = 0;
  long failures = 0;
};

// Members of L(g) of height <= max_depth (a leaf has height 1), sorted.
// Throws std::invalid_argument when max_depth < 1.
std::vector<DerivTree> enumerate(const FbRtg& g, int max_depth,
                                 Strategy strategy = Strategy::kLeftmost,
                                 EnumerationStats* stats = nullptr);

struct DerivationStep {
  GornAddress address;
  std::size_t rule_index = 0;
  FeatureTerm leaf_feature;  // d' before the environment is applied
  Substitution sigma;
  Substitution env_after;
};

struct MembershipResult {
  bool accepted = false;
  Substitution env;
  std::vector<DerivationStep> steps;  // leftmost order
  // Deepest point reached when rejected.
  std::optional<GornAddress> failure_address;
  std::optional<std::size_t> failure_rule;
  long attempts = 0;
  long failures = 0;
};

// Decides t in L(g) by structure-directed narrowing with chronological
// backtracking. Throws AlphabetError for undeclared or mis-ranked labels.
MembershipResult check_membership(const FbRtg& g, const DerivTree& t);
std::optional<Substitution> accepts(const FbRtg& g, const DerivTree& t);

FbRtg erase_features(const FbRtg& g);

// Keeps nonterminals that are reachable and productive in the
// feature-erased skeleton, and collapses argument slots whose nonterminal
// can only rewrite to e_A under a top feature. Rules are regrouped by
// left-hand side in depth-first order from the axiom.
FbRtg reduce(const FbRtg& g);

// Drops top conjuncts, top-valued entries and entries holding a variable
// that occurs nowhere else in the rule; such entries never constrain a
// derivation.
FbRule tidy(const FbRule& rule);

}  // namespace tagrtg

#endif  // TAGRTG_RTG_H_
