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

#ifndef TAGRTG_SRC_FEATURE_PARSE_H_
#define TAGRTG_SRC_FEATURE_PARSE_H_

#include "src/text_cursor.h"
#include "tagrtg/feature.h"

namespace tagrtg::internal {

FeatureTerm parse_term(TextCursor& in);
Constraint parse_constraint(TextCursor& in);

}  // namespace tagrtg::internal

#endif  // TAGRTG_SRC_FEATURE_PARSE_H_
