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

#include "tagrtg/cli.h"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tagrtg/errors.h"
#include "tagrtg/feature_syntax.h"
#include "tagrtg/left_corner.h"
#include "tagrtg/rtg.h"
#include "tagrtg/rtg_syntax.h"
#include "tagrtg/tag.h"
#include "tagrtg/translate.h"

namespace tagrtg {
namespace {

struct Options {
  std::string grammar;
  std::string tree;
  std::string output;
  bool lc = false;
  bool features = false;
  bool reduce = false;
  bool erase = false;
  int max_depth = 0;
  std::string format = "text";
  std::string strategy = "leftmost";
  bool trace = false;
};

bool is_tag_file(const std::string& path) {
  return std::filesystem::path(path).extension() == ".tag";
}

// A .tag file stands for its reduced feature-based derivation grammar.
FbRtg load_grammar(const std::string& path) {
  if (is_tag_file(path)) return reduce(to_fbrtg(load_tag(path)));
  return load_rtg(path);
}

int cmd_translate(const Options& o, std::ostream& out) {
  Tag tag = load_tag(o.grammar);
  FbRtg g = o.lc ? (o.features ? lc_fbrtg(tag) : lc_rtg(tag))
                 : (o.features ? to_fbrtg(tag) : to_rtg(tag));
  if (o.erase) g = erase_features(g);
  if (o.reduce) g = reduce(g);
  std::string text = format_rtg(g);
  if (o.output.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + o.output);
  file << text;
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  FbRtg g = load_grammar(o.grammar);
  Strategy s = o.strategy == "rightmost" ? Strategy::kRightmost : Strategy::kLeftmost;
  std::vector<DerivTree> trees = enumerate(g, o.max_depth, s);
  if (o.format == "dot") {
    out << to_dot(trees);
  } else {
    for (const auto& t : trees) out << format_tree(t) << "\n";
  }
  return kExitOk;
}

void print_env(const Substitution& env, std::ostream& out) {
  for (const auto& [name, value] : env.bindings()) {
    out << "  ?" << name << " = " << to_string(value) << "\n";
  }
}

int cmd_check(const Options& o, std::ostream& out) {
  FbRtg g = load_grammar(o.grammar);
  DerivTree t = parse_tree(o.tree);
  MembershipResult r = check_membership(g, t);
  const bool features = g.has_features();
  if (r.accepted) {
    out << "accepted\n";
    if (o.trace) {
      for (std::size_t i = 0; i < r.steps.size(); ++i) {
        const DerivationStep& step = r.steps[i];
        out << i + 1 << ". " << to_string(step.address) << "  "
            << format_rule(g.rules[step.rule_index], features) << "\n";
      }
    }
    out << "environment:\n";
    print_env(r.env, out);
    return kExitOk;
  }
  out << "rejected";
  if (r.failure_address) out << " at " << to_string(*r.failure_address);
  if (r.failure_rule) {
    out << ": unification failed in rule " << *r.failure_rule + 1 << "  "
        << format_rule(g.rules[*r.failure_rule], features);
  } else {
    out << ": no rule applies";
  }
  out << "\n";
  return kExitRejected;
}

int cmd_invert(const Options& o, std::ostream& out) {
  FbRtg g = load_rtg(o.grammar);
  if (!g.left_corner) throw ValidationError("grammar is not left-corner transformed");
  DerivTree t = parse_tree(o.tree);
  out << format_tree(lc_inverse(t, g.sites)) << "\n";
  return kExitOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
  Tag tag = load_tag(o.grammar);
  FbRtg plain = to_rtg(tag);
  FbRtg lc = lc_rtg(tag);
  FbRtg plain_reduced = reduce(plain);
  FbRtg lc_reduced = reduce(lc);
  auto ratio = [](std::size_t a, std::size_t b) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(3);
    s << (b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b));
    return s.str();
  };
  out << "initial trees: " << tag.initial.size() << "\n";
  out << "auxiliary trees: " << tag.auxiliary.size() << "\n";
  out << "tag nonterminals: " << tag.nonterminals.size() << "\n";
  out << "rtg rules: " << plain.rules.size() << " (reduced "
      << plain_reduced.rules.size() << ")\n";
  out << "rtg nonterminals: " << plain.nonterminals.size() << " (reduced "
      << plain_reduced.nonterminals.size() << ")\n";
  out << "lc rules: " << lc.rules.size() << " (reduced " << lc_reduced.rules.size()
      << ")\n";
  out << "lc nonterminals: " << lc.nonterminals.size() << " (reduced "
      << lc_reduced.nonterminals.size() << ")\n";
  out << "lc growth: " << ratio(lc.rules.size(), plain.rules.size()) << " (reduced "
      << ratio(lc_reduced.rules.size(), plain_reduced.rules.size()) << ")\n";
  auto inert = inert_feature_nodes(tag);
  out << "inert feature nodes: " << inert.size() << "\n";
  for (const auto& [tree, label] : inert) out << "  " << tree << ": " << label << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Derivation grammars for feature-based tree adjoining grammars", "tagrtg"};
  app.require_subcommand(1);
  Options o;

  auto* translate = app.add_subcommand("translate", "Translate a TAG into a derivation grammar");
  translate->add_option("grammar", o.grammar, "TAG grammar file")->required();
  translate->add_flag("--lc", o.lc, "Apply the left-corner transformation");
  translate->add_flag("--features", o.features, "Keep feature structures");
  translate->add_flag("--reduce", o.reduce, "Remove useless nonterminals and slots");
  translate->add_flag("--erase-features", o.erase, "Drop features before reducing");
  translate->add_option("-o,--output", o.output, "Write to this file");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List derivation trees up to a height");
  enumerate_cmd->add_option("grammar", o.grammar, "RTG file (or TAG file)")->required();
  enumerate_cmd->add_option("--max-depth", o.max_depth, "Maximum tree height")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--format", o.format, "text or dot")
      ->check(CLI::IsMember({"text", "dot"}));
  enumerate_cmd->add_option("--strategy", o.strategy, "leftmost or rightmost")
      ->check(CLI::IsMember({"leftmost", "rightmost"}));

  auto* check = app.add_subcommand("check", "Decide membership of a derivation tree");
  check->add_option("grammar", o.grammar, "RTG file (or TAG file)")->required();
  check->add_option("tree", o.tree, "Tree expression")->required();
  check->add_flag("--trace", o.trace, "Print the narrowing steps");

  auto* invert = app.add_subcommand("invert-lc", "Map a left-corner derivation tree back");
  invert->alias("invert");
  invert->add_option("grammar", o.grammar, "Left-corner RTG file")->required();
  invert->add_option("tree", o.tree, "Tree expression")->required();

  auto* stats = app.add_subcommand("stats", "Grammar size statistics");
  stats->add_option("grammar", o.grammar, "TAG grammar file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (translate->parsed()) return cmd_translate(o, out);
    if (enumerate_cmd->parsed()) return cmd_enumerate(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (invert->parsed()) return cmd_invert(o, out);
    if (stats->parsed()) return cmd_stats(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace tagrtg
