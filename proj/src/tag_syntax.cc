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
#include <fstream>
#include <sstream>
#include <string>

#include "src/feature_parse.h"
#include "src/text_cursor.h"
#include "tagrtg/feature_syntax.h"
#include "tagrtg/tag.h"

namespace tagrtg {

namespace {

using internal::TextCursor;

std::string read_quoted(TextCursor& in) {
  in.expect('"');
  std::string out;
  while (!in.eof() && in.peek() != '"') {
    char c = in.get();
    if (c == '\\' && !in.eof()) c = in.get();
    if (c == '\n') in.fail("unterminated string");
    out += c;
  }
  if (in.eof()) in.fail("unterminated string");
  in.get();
  return out;
}

std::string read_name(TextCursor& in) {
  in.skip_space();
  if (in.peek() == '"') return read_quoted(in);
  return internal::read_identifier(in);
}

NodeKind parse_kind(TextCursor& in) {
  std::string value = internal::read_identifier(in);
  if (value == "adj") return NodeKind::kAdjunction;
  if (value == "subst") return NodeKind::kSubstitution;
  if (value == "foot") return NodeKind::kFoot;
  if (value == "anchor") return NodeKind::kAnchor;
  if (value == "internal") return NodeKind::kInternal;
  in.fail("unknown node kind '" + value + "'");
}

struct Collected {
  std::vector<std::string> nonterminals;
  std::vector<std::string> terminals;
};

void remember(std::vector<std::string>& list, const std::string& s) {
  if (std::find(list.begin(), list.end(), s) == list.end()) list.push_back(s);
}

TreeNode parse_node(TextCursor& in, Collected& seen) {
  in.expect('(');
  in.skip_space();
  TreeNode node;
  bool anchor_form = false;
  if (in.rest().starts_with("word")) {
    std::size_t i = 4;
    while (in.peek_at(i) == ' ' || in.peek_at(i) == '\t') ++i;
    anchor_form = in.peek_at(i) == '"';
  }
  if (anchor_form) {
    in.consume_word("word");
    in.skip_space();
    node.label = read_quoted(in);
    node.kind = NodeKind::kAnchor;
    in.expect(')');
    remember(seen.terminals, node.label);
    return node;
  }
  node.label = read_name(in);
  bool explicit_anchor = false;
  for (;;) {
    in.skip_space();
    if (in.eof()) in.fail("unterminated node '" + node.label + "'");
    if (in.peek() == ')') {
      in.get();
      break;
    }
    if (in.peek() == '(') {
      node.children.push_back(parse_node(in, seen));
      continue;
    }
    int line = in.line();
    int column = in.column();
    std::string key = internal::read_identifier(in);
    in.expect('=');
    if (key == "kind") {
      node.kind = parse_kind(in);
      explicit_anchor = node.kind == NodeKind::kAnchor;
    } else if (key == "top") {
      node.top = internal::parse_term(in);
    } else if (key == "bot") {
      node.bot = internal::parse_term(in);
    } else {
      throw ParseError(line, column, "unknown node attribute '" + key + "'");
    }
  }
  if (explicit_anchor) {
    remember(seen.terminals, node.label);
  } else {
    remember(seen.nonterminals, node.label);
  }
  return node;
}

// Nonterminals in preorder of first appearance.
void preorder_labels(const TreeNode& node, std::vector<std::string>& out) {
  if (node.kind != NodeKind::kAnchor) remember(out, node.label);
  for (const auto& child : node.children) preorder_labels(child, out);
}

void preorder_anchors(const TreeNode& node, std::vector<std::string>& out) {
  if (node.kind == NodeKind::kAnchor) remember(out, node.label);
  for (const auto& child : node.children) preorder_anchors(child, out);
}

bool plain_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!internal::is_identifier_char(c)) return false;
  }
  return true;
}

std::string quote_if_needed(const std::string& s) {
  if (plain_identifier(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void format_node(const TreeNode& node, int indent, std::ostringstream& out) {
  out << std::string(indent, ' ') << '(';
  if (node.kind == NodeKind::kAnchor && node.top.is_top() && node.bot.is_top()) {
    out << "word " << '"' << node.label << '"' << ')';
    return;
  }
  out << quote_if_needed(node.label);
  if (node.kind != NodeKind::kInternal) out << " kind=" << to_string(node.kind);
  if (!node.top.is_top()) out << " top=" << to_string(node.top);
  if (!node.bot.is_top()) out << " bot=" << to_string(node.bot);
  for (const auto& child : node.children) {
    out << '\n';
    format_node(child, indent + 2, out);
  }
  out << ')';
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += items[i];
  }
  return out;
}

}  // namespace

Tag parse_tag(std::string_view text) {
  TextCursor in(text);
  Tag tag;
  Collected seen;
  bool declared_nonterminals = false;
  for (;;) {
    in.skip_space();
    if (in.eof()) break;
    int line = in.line();
    int column = in.column();
    std::string keyword = internal::read_identifier(in);
    if (keyword == "start") {
      in.expect(':');
      tag.start = internal::read_identifier(in);
      in.expect(';');
    } else if (keyword == "nonterminals") {
      in.expect(':');
      declared_nonterminals = true;
      do {
        remember(tag.nonterminals, internal::read_identifier(in));
      } while (in.consume(','));
      in.expect(';');
    } else if (keyword == "initial" || keyword == "auxiliary") {
      ElemTree tree;
      tree.kind = keyword == "initial" ? TreeKind::kInitial : TreeKind::kAuxiliary;
      tree.name = read_name(in);
      in.expect('{');
      tree.root = parse_node(in, seen);
      in.expect('}');
      (tree.is_auxiliary() ? tag.auxiliary : tag.initial).push_back(std::move(tree));
    } else {
      throw ParseError(line, column, "expected 'start', 'nonterminals', "
                                     "'initial' or 'auxiliary', found '" +
                                         keyword + "'");
    }
  }
  if (!declared_nonterminals) {
    if (!tag.start.empty()) tag.nonterminals.push_back(tag.start);
    for (const ElemTree* tree : tag.trees()) preorder_labels(tree->root, tag.nonterminals);
  }
  for (const ElemTree* tree : tag.trees()) preorder_anchors(tree->root, tag.terminals);
  validate(tag);
  return tag;
}

Tag load_tag(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_tag(buffer.str());
}

std::string format_tag(const Tag& tag) {
  std::ostringstream out;
  out << "start: " << tag.start << ";\n";
  out << "nonterminals: " << join(tag.nonterminals) << ";\n";
  for (const ElemTree* tree : tag.trees()) {
    out << '\n'
        << (tree->is_auxiliary() ? "auxiliary " : "initial ")
        << quote_if_needed(tree->name) << " {\n";
    format_node(tree->root, 2, out);
    out << "\n}\n";
  }
  return out.str();
}

}  // namespace tagrtg
