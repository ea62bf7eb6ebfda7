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

#ifndef TAGRTG_RTG_SYNTAX_H_
#define TAGRTG_RTG_SYNTAX_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tagrtg/rtg.h"

namespace tagrtg {

// Rule notation. Plain grammars:
//   S_S -> caught(NP_S, VP_A, NP_S);
// Feature-based grammars pair every symbol with its feature:
//   (NP_S, [top: ?t]) -> cats((NP_A, [top: ?t, bot: [agr: 3pl]]));
std::string format_rule(const FbRule& rule, bool with_features);

// Whole-grammar file: a header of %-directives (format version,
// transform, axiom, alphabets, site table) followed by one rule per line.
std::string format_rtg(const FbRtg& g);
FbRtg parse_rtg(std::string_view text);
FbRtg load_rtg(const std::filesystem::path& path);

// Derivation trees: caught(cats(the(e_A)), e_A, fish(e_A)). Labels may
// contain spaces ("one of"); surrounding blanks are trimmed.
std::string format_tree(const DerivTree& t);
DerivTree parse_tree(std::string_view text);

// Graphviz rendering, one digraph per tree.
std::string to_dot(const std::vector<DerivTree>& trees);

}  // namespace tagrtg

#endif  // TAGRTG_RTG_SYNTAX_H_
