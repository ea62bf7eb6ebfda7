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

#ifndef TAGRTG_TESTS_SUPPORT_ORACLES_H_
#define TAGRTG_TESTS_SUPPORT_ORACLES_H_

#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tagrtg/feature.h"
#include "tagrtg/rtg.h"
#include "tagrtg/tag.h"

namespace tagrtg::testing {

using Rng = std::mt19937;

std::filesystem::path source_dir();
std::filesystem::path fig2_path();
std::string read_file(const std::filesystem::path& path);

// Random terms over attributes {f, g}, atoms {a, b} and variables
// {x, y, z}, of depth at most `depth`.
FeatureTerm random_term(Rng& rng, int depth);

// Every ground substitution theta over the variables of a and b, drawn
// from all ground terms of depth <= 1 over {f, g} and {a, b}, such that
// apply(theta, a) == apply(theta, b).
std::vector<Substitution> ground_unifiers(const FeatureTerm& a, const FeatureTerm& b);

// Every attribute path and leaf of `t` occurs in `a` or in `b`.
bool within_union(const FeatureTerm& t, const FeatureTerm& a, const FeatureTerm& b);

// Random feature grammar: at most 4 nonterminals and 6 rules, flat
// matrices over attributes {p, q} with atoms {a, b} and variables.
FbRtg random_flat_grammar(Rng& rng);

// Language of a flat finite-domain grammar up to height `depth`, computed
// by grounding it into a plain RTG over (nonterminal, record) pairs and
// expanding bottom-up. Shares no code with the narrowing engine.
std::set<DerivTree> product_language(const FbRtg& g, int depth);

// Bottom-up language of a grammar whose features are all ignored.
std::set<DerivTree> skeleton_language(const FbRtg& g, int depth);

// Random validated TAG: labels from {S, A, B}, up to `max_trees` trees.
Tag random_tag(Rng& rng, int max_trees, bool with_features);

// Forward left-corner map of an untransformed derivation tree, written
// from the rule shapes rather than as the inverse's mirror image.
DerivTree lc_forward(const DerivTree& t, const SiteTable& sites);

// `copies` disjoint renamed copies of the given grammar's trees.
Tag replicate(const Tag& tag, int copies);

}  // namespace tagrtg::testing

#endif  // TAGRTG_TESTS_SUPPORT_ORACLES_H_
