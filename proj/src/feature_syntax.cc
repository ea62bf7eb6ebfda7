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

#include "tagrtg/feature_syntax.h"

#include <string>
#include <utility>
#include <vector>

#include "src/feature_parse.h"
#include "src/text_cursor.h"

namespace tagrtg {

namespace {

using Entries = std::vector<std::pair<std::string, FeatureTerm>>;

void print(const FeatureTerm& t, std::string& out);

void print_entries(const FeatureTerm& t, std::vector<std::string>& pieces) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::string piece = t.keys()[i] + ": ";
    print(t.values()[i], piece);
    pieces.push_back(std::move(piece));
  }
}

std::string join(const std::vector<std::string>& pieces, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i > 0) out += sep;
    out += pieces[i];
  }
  return out;
}

void print(const FeatureTerm& t, std::string& out) {
  switch (t.kind()) {
    case FeatureTerm::Kind::kAtom:
      out += t.name();
      return;
    case FeatureTerm::Kind::kVar:
      out += '?';
      out += t.name();
      return;
    case FeatureTerm::Kind::kAvm: {
      std::vector<std::string> pieces;
      print_entries(t, pieces);
      out += '[';
      out += join(pieces, ", ");
      out += ']';
      return;
    }
  }
}

std::string read_symbol(internal::TextCursor& in, const char* what) {
  std::string out;
  while (!in.eof() && internal::is_symbol_char(in.peek())) out += in.get();
  if (out.empty()) in.fail(std::string("expected ") + what + in.found());
  return out;
}

// Entries of a bracketed matrix; repeated attributes are allowed here and
// resolved by the caller.
Entries parse_entries(internal::TextCursor& in) {
  Entries entries;
  in.expect('[');
  if (in.consume(']')) return entries;
  do {
    in.skip_space();
    std::string key = read_symbol(in, "an attribute");
    in.expect(':');
    entries.emplace_back(std::move(key), internal::parse_term(in));
  } while (in.consume(','));
  in.expect(']');
  return entries;
}

// Places each entry in the first conjunct that lacks its attribute.
std::vector<FeatureTerm> distribute(const Entries& entries) {
  std::vector<Entries> groups;
  for (const auto& entry : entries) {
    bool placed = false;
    for (auto& group : groups) {
      bool has = false;
      for (const auto& [k, v] : group) has = has || k == entry.first;
      if (!has) {
        group.push_back(entry);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back(Entries{entry});
  }
  std::vector<FeatureTerm> out;
  out.reserve(groups.size());
  for (auto& group : groups) out.push_back(FeatureTerm::avm(std::move(group)));
  return out;
}

FeatureTerm strip_top_entries(const FeatureTerm& t) {
  if (!t.is_avm()) return t;
  Entries kept;
  for (std::size_t i = 0; i < t.size(); ++i) {
    FeatureTerm v = strip_top_entries(t.values()[i]);
    if (!v.is_top()) kept.emplace_back(t.keys()[i], std::move(v));
  }
  return FeatureTerm::avm(std::move(kept));
}

}  // namespace

std::string to_string(const FeatureTerm& t) {
  std::string out;
  print(t, out);
  return out;
}

std::string to_string(const Constraint& c) {
  std::vector<std::string> pieces;
  std::vector<std::string> others;
  for (const auto& t : c.conjuncts) {
    if (t.is_avm()) {
      print_entries(t, pieces);
    } else {
      others.push_back(to_string(t));
    }
  }
  std::string out;
  if (!pieces.empty() || others.empty()) out = "[" + join(pieces, ", ") + "]";
  for (const auto& o : others) {
    if (!out.empty()) out += " & ";
    out += o;
  }
  return out;
}

namespace internal {

FeatureTerm parse_term(TextCursor& in) {
  in.skip_space();
  if (in.peek() == '[') {
    int line = in.line();
    int column = in.column();
    Entries entries = parse_entries(in);
    try {
      return FeatureTerm::avm(std::move(entries));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, column, e.what());
    }
  }
  if (in.peek() == '?') {
    in.get();
    std::string name;
    while (!in.eof() && is_symbol_char(in.peek())) name += in.get();
    if (name.empty()) in.fail("expected a variable name after '?'");
    return FeatureTerm::var(std::move(name));
  }
  return FeatureTerm::atom(read_symbol(in, "a feature term"));
}

Constraint parse_constraint(TextCursor& in) {
  Constraint c;
  do {
    in.skip_space();
    if (in.peek() == '[') {
      for (auto& t : distribute(parse_entries(in))) c.conjuncts.push_back(std::move(t));
    } else {
      c.conjuncts.push_back(parse_term(in));
    }
  } while (in.consume('&'));
  return c;
}

}  // namespace internal

FeatureTerm parse_feature_term(std::string_view text) {
  internal::TextCursor in(text);
  FeatureTerm t = internal::parse_term(in);
  in.skip_space();
  if (!in.eof()) in.fail("trailing input after feature term");
  return t;
}

Constraint parse_constraint(std::string_view text) {
  internal::TextCursor in(text);
  Constraint c = internal::parse_constraint(in);
  in.skip_space();
  if (!in.eof()) in.fail("trailing input after constraint");
  return c;
}

Constraint normalize(const Constraint& c) {
  Entries entries;
  std::vector<FeatureTerm> others;
  for (const auto& t : c.conjuncts) {
    FeatureTerm s = strip_top_entries(t);
    if (s.is_top()) continue;
    if (s.is_avm()) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        entries.emplace_back(s.keys()[i], s.values()[i]);
      }
    } else {
      others.push_back(std::move(s));
    }
  }
  Constraint out;
  out.conjuncts = distribute(entries);
  for (auto& o : others) out.conjuncts.push_back(std::move(o));
  return out;
}

}  // namespace tagrtg
