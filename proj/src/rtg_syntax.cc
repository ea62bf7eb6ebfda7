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

#include "tagrtg/rtg_syntax.h"

#include <fstream>
#include <sstream>
#include <string>

#include "src/feature_parse.h"
#include "src/text_cursor.h"
#include "tagrtg/errors.h"
#include "tagrtg/feature_syntax.h"

namespace tagrtg {
namespace {

using internal::TextCursor;

constexpr char kFormatLine[] = "tagrtg-rtg 1";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Reads a possibly multi-word label up to one of `stops`.
std::string read_label(TextCursor& in, std::string_view stops, const char* what) {
  in.skip_space();
  std::string out;
  while (!in.eof() && in.peek() != '\n' && stops.find(in.peek()) == std::string_view::npos) {
    out += in.get();
  }
  std::string label(trim(out));
  if (label.empty()) in.fail(std::string("expected ") + what + in.found());
  return label;
}

std::string read_line(TextCursor& in) {
  std::string out;
  while (!in.eof() && in.peek() != '\n') out += in.get();
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = s.find(sep, start);
    std::string_view piece = trim(s.substr(start, end - start));
    if (!piece.empty()) out.emplace_back(piece);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += items[i];
  }
  return out;
}

std::string format_site(const std::string& name, const SiteInfo& site) {
  std::string out = "%site " + name + ": ";
  out += site.initial ? "initial" : "auxiliary";
  out += site.root_slot ? " root=active" : " root=inactive";
  out += " slots=";
  if (site.slots.empty()) out += "-";
  for (std::size_t i = 0; i < site.slots.size(); ++i) {
    if (i > 0) out += ',';
    out += site.slots[i] == SiteKind::kSubstitution ? "subst" : "adj";
  }
  return out;
}

void parse_site(std::string_view line, TextCursor& in, FbRtg& g) {
  std::size_t colon = line.rfind(':');
  if (colon == std::string_view::npos) in.fail("%site needs 'NAME: ...'");
  std::string name(trim(line.substr(0, colon)));
  SiteInfo site;
  bool kind_seen = false;
  for (const auto& word : split(line.substr(colon + 1), ' ')) {
    if (word == "initial" || word == "auxiliary") {
      site.initial = word == "initial";
      kind_seen = true;
    } else if (word == "root=active" || word == "root=inactive") {
      site.root_slot = word == "root=active";
    } else if (word.rfind("slots=", 0) == 0) {
      std::string list = word.substr(6);
      if (list == "-") continue;
      for (const auto& s : split(list, ',')) {
        if (s == "subst") {
          site.slots.push_back(SiteKind::kSubstitution);
        } else if (s == "adj") {
          site.slots.push_back(SiteKind::kAdjunction);
        } else {
          in.fail("unknown slot kind '" + s + "'");
        }
      }
    } else {
      in.fail("unknown %site field '" + word + "'");
    }
  }
  if (name.empty() || !kind_seen) in.fail("%site needs a name and initial|auxiliary");
  g.sites[name] = std::move(site);
}

void parse_directive(TextCursor& in, FbRtg& g, bool& format_seen) {
  in.get();  // '%'
  std::string key;
  while (!in.eof() && internal::is_identifier_char(in.peek())) key += in.get();
  std::string value(trim(read_line(in)));
  if (key == "format") {
    if (value != kFormatLine) in.fail("unsupported format '" + value + "'");
    format_seen = true;
  } else if (key == "transform") {
    if (value != "none" && value != "left-corner") {
      in.fail("unknown transform '" + value + "'");
    }
    g.left_corner = value == "left-corner";
  } else if (key == "axiom") {
    g.axiom = value;
  } else if (key == "nonterminals") {
    g.nonterminals = split(value, ',');
  } else if (key == "terminals") {
    for (const auto& item : split(value, ',')) {
      std::size_t slash = item.rfind('/');
      int rank = -1;
      if (slash != std::string::npos) {
        try {
          rank = std::stoi(item.substr(slash + 1));
        } catch (const std::exception&) {
          rank = -1;
        }
      }
      if (rank < 0) in.fail("terminal '" + item + "' needs NAME/RANK");
      g.terminals.push_back({std::string(trim(item.substr(0, slash))), rank});
    }
  } else if (key == "site") {
    parse_site(value, in, g);
  } else {
    in.fail("unknown directive %" + key);
  }
}

// Either "NT" or "(NT, constraint)"; the rhs form takes a single term.
void parse_symbol(TextCursor& in, std::string& nt, Constraint* constraint,
                  FeatureTerm* term) {
  in.skip_space();
  if (in.consume('(')) {
    nt = internal::read_identifier(in);
    in.expect(',');
    if (constraint != nullptr) {
      *constraint = internal::parse_constraint(in);
    } else {
      *term = internal::parse_term(in);
    }
    in.expect(')');
  } else {
    nt = internal::read_identifier(in);
  }
}

FbRule parse_rule(TextCursor& in) {
  FbRule r;
  parse_symbol(in, r.lhs, &r.lhs_feature, nullptr);
  if (!in.consume_word("->")) in.fail("expected '->'" + in.found());
  r.terminal = read_label(in, "(;", "a terminal");
  if (in.consume('(')) {
    do {
      RhsSlot slot;
      parse_symbol(in, slot.nonterminal, nullptr, &slot.feature);
      r.rhs.push_back(std::move(slot));
    } while (in.consume(','));
    in.expect(')');
  }
  in.expect(';');
  return r;
}

void format_tree_to(const DerivTree& t, std::string& out) {
  out += t.label;
  if (t.children.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i > 0) out += ", ";
    format_tree_to(t.children[i], out);
  }
  out += ')';
}

DerivTree parse_tree_node(TextCursor& in) {
  DerivTree t{read_label(in, "(),", "a tree label"), {}};
  if (in.consume('(')) {
    do {
      t.children.push_back(parse_tree_node(in));
    } while (in.consume(','));
    in.expect(')');
  }
  return t;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void dot_nodes(const DerivTree& t, const std::string& id, std::ostringstream& out) {
  out << "  \"" << id << "\" [label=\"" << dot_escape(t.label) << "\"];\n";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    std::string child = id == "ε" ? std::to_string(i + 1) : id + "." + std::to_string(i + 1);
    out << "  \"" << id << "\" -> \"" << child << "\";\n";
    dot_nodes(t.children[i], child, out);
  }
}

}  // namespace

std::string format_rule(const FbRule& rule, bool with_features) {
  std::string out;
  if (with_features) {
    out += "(" + rule.lhs + ", " + to_string(rule.lhs_feature) + ")";
  } else {
    out += rule.lhs;
  }
  out += " -> " + rule.terminal;
  if (!rule.rhs.empty()) {
    out += '(';
    for (std::size_t i = 0; i < rule.rhs.size(); ++i) {
      if (i > 0) out += ", ";
      const RhsSlot& s = rule.rhs[i];
      if (with_features) {
        out += "(" + s.nonterminal + ", " + to_string(s.feature) + ")";
      } else {
        out += s.nonterminal;
      }
    }
    out += ')';
  }
  out += ';';
  return out;
}

std::string format_rtg(const FbRtg& g) {
  std::ostringstream out;
  out << "%format " << kFormatLine << "\n";
  out << "%transform " << (g.left_corner ? "left-corner" : "none") << "\n";
  out << "%axiom " << g.axiom << "\n";
  out << "%nonterminals " << join(g.nonterminals) << "\n";
  std::vector<std::string> terminals;
  for (const auto& t : g.terminals) terminals.push_back(t.name + "/" + std::to_string(t.rank));
  out << "%terminals " << join(terminals) << "\n";
  for (const auto& t : g.terminals) {
    auto it = g.sites.find(t.name);
    if (it != g.sites.end()) out << format_site(t.name, it->second) << "\n";
  }
  const bool features = g.has_features();
  for (const auto& r : g.rules) out << format_rule(r, features) << "\n";
  return out.str();
}

FbRtg parse_rtg(std::string_view text) {
  TextCursor in(text);
  FbRtg g;
  bool format_seen = false;
  while (true) {
    in.skip_space();
    if (in.eof()) break;
    if (in.peek() == '%') {
      parse_directive(in, g, format_seen);
    } else {
      g.rules.push_back(parse_rule(in));
    }
  }
  if (!format_seen) in.fail("missing '%format " + std::string(kFormatLine) + "' line");
  if (g.axiom.empty()) in.fail("missing %axiom line");
  complete_alphabet(g);
  validate(g);
  return g;
}

FbRtg load_rtg(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_rtg(buffer.str());
}

std::string format_tree(const DerivTree& t) {
  std::string out;
  format_tree_to(t, out);
  return out;
}

DerivTree parse_tree(std::string_view text) {
  TextCursor in(text);
  DerivTree t = parse_tree_node(in);
  in.skip_space();
  if (!in.eof()) in.fail("trailing input after tree");
  return t;
}

std::string to_dot(const std::vector<DerivTree>& trees) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    out << "digraph tree" << i + 1 << " {\n";
    dot_nodes(trees[i], "ε", out);
    out << "}\n";
  }
  return out.str();
}

}  // namespace tagrtg
