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

#ifndef TAGRTG_LEFT_CORNER_H_
#define TAGRTG_LEFT_CORNER_H_

#include <stdexcept>

#include "tagrtg/rtg.h"
#include "tagrtg/tag.h"

namespace tagrtg {

class RootNotAdjoinable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MalformedLcTree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Left-corner transformed derivation grammars. Root adjunctions are
// generated bottom-up: X_S -> e_S(X), then X -> beta(X, ...) for each
// root adjunction, ending with X -> alpha(...) of rank rk(alpha) - 1.
// Initial trees whose root is not an adjunction site keep their
// untransformed rule. Throws RootNotAdjoinable for an auxiliary tree
// whose root is not an adjunction site.
FbRtg lc_rtg(const Tag& tag);
FbRtg lc_fbrtg(const Tag& tag);

// Maps a derivation tree of the transformed grammar back to the original
// one, using the site table of the transformed grammar. Throws MalformedLcTree on a
// tree outside the transformed language's shape.
DerivTree lc_inverse(const DerivTree& t, const SiteTable& sites);

}  // namespace tagrtg

#endif  // TAGRTG_LEFT_CORNER_H_
