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

// Acceptance suite. Prints one PASS/FAIL line per criterion, with indented
// detail lines, and exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "properties.h"
#include "tagrtg/cli.h"
#include "tagrtg/feature_syntax.h"
#include "tagrtg/left_corner.h"
#include "tagrtg/rtg.h"
#include "tagrtg/rtg_syntax.h"
#include "tagrtg/tag.h"
#include "tagrtg/translate.h"

namespace tagrtg {
namespace {

using Clock = std::chrono::steady_clock;

// Pinned tolerances.
constexpr double kFastSeconds = 1.0;
constexpr double kRoundTripSeconds = 30.0;
constexpr double kOracleSeconds = 60.0;
constexpr double kMaxFitResidual = 0.20;
constexpr int kPropertyCases = 1000;
constexpr int kRandomGrammars = 50;
constexpr int kOracleDepth = 4;
constexpr int kRoundTripDepth = 6;
constexpr double kMaxLcGrowth = 2.0;

constexpr char kFigure3Tree[] = "caught(cats(one of(the(e_A))), has(e_A), fish(a(e_A)))";
constexpr char kFigure3Corrected[] = "caught(cats(the(one of(e_A))), has(e_A), fish(a(e_A)))";

struct Line {
  std::ostringstream text;
  bool ok = true;

  void require(bool cond, const std::string& what) {
    text << "    " << (cond ? "ok   " : "FAIL ") << what << "\n";
    ok = ok && cond;
  }
  void note(const std::string& what) { text << "    note " << what << "\n"; }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

struct CliOut {
  int code;
  std::string out;
};

CliOut cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str() + err.str()};
}

std::string golden(const std::string& name) {
  return testing::read_file(testing::source_dir() / "tests" / "golden" / name);
}

std::string fig2() { return testing::fig2_path().string(); }

std::vector<std::string> rule_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '%') out.push_back(line);
  }
  return out;
}

std::set<std::string> names(const std::vector<Terminal>& ts) {
  std::set<std::string> out;
  for (const auto& t : ts) out.insert(t.name);
  return out;
}

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : ", ") + x;
  return "{" + out + "}";
}

bool timed(Line& line, Clock::time_point start, double limit) {
  double t = seconds_since(start);
  line.require(t < limit, "runtime " + fmt(t) + " s < " + fmt(limit) + " s");
  return t < limit;
}

void criterion1(Line& line) {
  auto start = Clock::now();
  CliOut r = cli({"translate", fig2(), "--reduce"});
  line.require(r.code == kExitOk, "translate exits 0");
  line.require(r.out == golden("example1.rtg"), "byte-identical to stored transcript");
  FbRtg g = reduce(to_rtg(load_tag(testing::fig2_path())));
  line.require(g.rules.size() == 9, std::to_string(g.rules.size()) + " rules, expected 9");
  std::set<std::string> nts(g.nonterminals.begin(), g.nonterminals.end());
  std::set<std::string> want_nts = {"S_S", "VP_S", "VP_A", "NP_S", "NP_A"};
  line.require(nts == want_nts, "nonterminals " + join(nts) + " == " + join(want_nts));
  std::set<std::string> want_ts = {"one of", "the", "cats", "has", "caught", "a", "fish", "e_A"};
  line.require(names(g.terminals) == want_ts, "terminals " + join(names(g.terminals)));
  timed(line, start, kFastSeconds);
}

void criterion2(Line& line) {
  auto start = Clock::now();
  CliOut r = cli({"translate", fig2(), "--features", "--reduce"});
  line.require(r.code == kExitOk, "translate exits 0");
  line.require(r.out == golden("example2.rtg"), "byte-identical to stored transcript");
  FbRtg g = reduce(to_fbrtg(load_tag(testing::fig2_path())));
  FeatureTerm shared = FeatureTerm::avm({{"top", FeatureTerm::var("v")}, {"bot", FeatureTerm::var("v")}});
  int eps = 0;
  for (const auto& rule : g.rules) {
    if (rule.terminal == kNoAdjunction && rule.lhs_feature.conjuncts.size() == 1 &&
        rule.lhs_feature.conjuncts[0] == shared) {
      ++eps;
    }
  }
  line.require(eps == 2, std::to_string(eps) + " no-adjunction rules with shared [top: ?v, bot: ?v]");
  timed(line, start, kFastSeconds);
}

// Index of the first step after which the subject agreement variable of the
// root rule is bound to an atom.
std::optional<std::size_t> agreement_step(const MembershipResult& m, std::string* value) {
  FeatureTerm subject = FeatureTerm::var("ε.x");
  for (std::size_t i = 0; i < m.steps.size(); ++i) {
    FeatureTerm now = apply(m.steps[i].env_after, subject);
    if (now.is_atom()) {
      *value = now.name();
      return i + 1;
    }
  }
  return std::nullopt;
}

void check_figure3(Line& line, const FbRtg& g, const std::string& tree) {
  MembershipResult m = check_membership(g, parse_tree(tree));
  line.require(m.accepted, "accepts " + tree);
  if (!m.accepted) {
    line.note("rejected at " + (m.failure_address ? to_string(*m.failure_address) : "?") +
              (m.failure_rule ? " in rule " + std::to_string(*m.failure_rule + 1) : ""));
    return;
  }
  std::string value;
  auto step = agreement_step(m, &value);
  line.require(step == std::size_t{5} && value == "3sg",
               "replay binds subject agreement ?ε.x = 3sg at step 5 (got step " +
                   (step ? std::to_string(*step) : "none") + ", value " + value + ")");
}

void criterion3(Line& line) {
  auto start = Clock::now();
  FbRtg g = parse_rtg(golden("example2.rtg"));
  check_figure3(line, g, kFigure3Tree);
  timed(line, start, kFastSeconds);
  Line corrected;
  check_figure3(corrected, g, kFigure3Corrected);
  CliOut trace = cli({"check", (testing::source_dir() / "tests/golden/example2.rtg").string(),
                      kFigure3Corrected, "--trace"});
  corrected.require(trace.out.find("5. 1.1.1.1  (NP_A, [top: ?v, bot: ?v]) -> e_A;") != std::string::npos,
                    "CLI trace shows step 5 at 1.1.1.1");
  line.note("with determiners in derivable order (the over one of):");
  line.text << corrected.text.str();
}

bool rejected_at_vp_epsilon(const FbRtg& g, const MembershipResult& m) {
  if (m.accepted || !m.failure_address || !m.failure_rule) return false;
  const FbRule& rule = g.rules[*m.failure_rule];
  return *m.failure_address == GornAddress{2} && rule.lhs == "VP_A" && rule.terminal == kNoAdjunction;
}

void criterion4(Line& line) {
  FbRtg fb = parse_rtg(golden("example2.rtg"));
  FbRtg plain = parse_rtg(golden("example1.rtg"));
  const std::vector<std::string> trees = {
      "caught(cats(the(e_A)), has(e_A), fish(a(e_A)))",
      "caught(cats(a(e_A)), has(e_A), fish(a(e_A)))",
      "caught(cats(one of(the(e_A))), e_A, fish(a(e_A)))",
  };
  for (std::size_t i = 0; i < trees.size(); ++i) {
    auto start = Clock::now();
    DerivTree t = parse_tree(trees[i]);
    MembershipResult m = check_membership(fb, t);
    line.require(!m.accepted, "feature grammar rejects " + trees[i]);
    line.require(check_membership(plain, t).accepted, "plain grammar accepts the skeleton");
    if (i == 2) {
      line.require(rejected_at_vp_epsilon(fb, m),
                   "rejection is the mode clash at the VP no-adjunction rule (got " +
                       (m.failure_address ? to_string(*m.failure_address) : "?") + ")");
    }
    timed(line, start, kFastSeconds);
  }
  std::string corrected = "caught(cats(the(one of(e_A))), e_A, fish(a(e_A)))";
  MembershipResult m = check_membership(fb, parse_tree(corrected));
  Line c;
  c.require(rejected_at_vp_epsilon(fb, m), "bare caught with the over one of: rejected at 2 by the VP no-adjunction rule");
  c.require(check_membership(plain, parse_tree(corrected)).accepted, "plain grammar accepts the skeleton");
  line.note("with determiners in derivable order (the over one of):");
  line.text << c.text.str();
}

// Each lc auxiliary rule carries the original's right-hand feature on its
// left and vice versa.
bool swapped(const FbRtg& orig, const FbRtg& lc, const std::string& terminal) {
  auto find = [&](const FbRtg& g) -> const FbRule* {
    for (const auto& r : g.rules) {
      if (r.terminal == terminal) return &r;
    }
    return nullptr;
  };
  const FbRule* a = find(orig);
  const FbRule* b = find(lc);
  if (!a || !b || a->rhs.size() != 1 || b->rhs.size() != 1) return false;
  if (a->lhs_feature.conjuncts.size() != 1 || b->lhs_feature.conjuncts.size() != 1) return false;
  FeatureTerm before = FeatureTerm::avm({{"l", a->lhs_feature.conjuncts[0]}, {"r", a->rhs[0].feature}});
  FeatureTerm after = FeatureTerm::avm({{"l", b->rhs[0].feature}, {"r", b->lhs_feature.conjuncts[0]}});
  return is_variant(before, after);
}

void criterion5(Line& line) {
  auto start = Clock::now();
  CliOut plain = cli({"translate", fig2(), "--lc", "--reduce"});
  line.require(plain.code == kExitOk && plain.out == golden("lc-plain.rtg"),
               "plain lc byte-identical to stored transcript");
  auto got = rule_lines(plain.out);
  auto want = rule_lines(golden("lc-plain-8rule.txt"));
  line.require(got == want, "plain lc equals the 8-rule reference example (" + std::to_string(got.size()) +
                                " rules vs " + std::to_string(want.size()) + ")");
  for (const auto& r : got) {
    if (std::find(want.begin(), want.end(), r) == want.end()) line.note("extra rule: " + r);
  }
  CliOut fb = cli({"translate", fig2(), "--lc", "--features", "--reduce"});
  line.require(fb.code == kExitOk && fb.out == golden("lc-features.rtg"),
               "feature lc byte-identical to stored transcript");
  Tag tag = load_tag(testing::fig2_path());
  FbRtg orig = reduce(to_fbrtg(tag));
  FbRtg lc = reduce(lc_fbrtg(tag));
  for (const char* t : {"the", "a", "one of"}) {
    line.require(swapped(orig, lc, t), std::string("root and foot features swapped on ") + t);
  }
  timed(line, start, kFastSeconds);
}

void round_trip(Line& line, const FbRtg& lc, const FbRtg& target, const std::string& label) {
  auto trees = enumerate(lc, kRoundTripDepth);
  std::set<DerivTree> images;
  std::size_t accepted = 0;
  std::string first_bad;
  for (const auto& t : trees) {
    DerivTree back = lc_inverse(t, lc.sites);
    images.insert(back);
    if (accepts(target, back)) {
      ++accepted;
    } else if (first_bad.empty()) {
      first_bad = format_tree(t) + " -> " + format_tree(back);
    }
  }
  line.require(!trees.empty() && accepted == trees.size(),
               label + ": " + std::to_string(accepted) + "/" + std::to_string(trees.size()) +
                   " inverted trees accepted" + (first_bad.empty() ? "" : " (first bad " + first_bad + ")"));
  line.require(images.size() == trees.size(), label + ": inverse injective (" + std::to_string(images.size()) +
                                                  " distinct images)");
}

void criterion6(Line& line) {
  auto start = Clock::now();
  Tag tag = load_tag(testing::fig2_path());
  round_trip(line, lc_fbrtg(tag), to_fbrtg(tag), "unreduced");
  round_trip(line, reduce(lc_fbrtg(tag)), reduce(to_fbrtg(tag)), "reduced");
  timed(line, start, kRoundTripSeconds);
}

void criterion7(Line& line) {
  auto start = Clock::now();
  testing::Rng rng(7);
  int equal = 0;
  int nonempty = 0;
  for (int i = 0; i < kRandomGrammars; ++i) {
    FbRtg g = testing::random_flat_grammar(rng);
    auto got = enumerate(g, kOracleDepth);
    std::set<DerivTree> got_set(got.begin(), got.end());
    if (got_set == testing::product_language(g, kOracleDepth)) ++equal;
    if (!got.empty()) ++nonempty;
  }
  line.require(equal == kRandomGrammars, std::to_string(equal) + "/" + std::to_string(kRandomGrammars) +
                                             " grammars equal the product oracle at depth 4");
  line.note(std::to_string(nonempty) + " grammars with a nonempty language");
  timed(line, start, kOracleSeconds);
}

// Median seconds per call, repeating each call until a sample lasts 20 ms.
double time_per_call(const std::function<void()>& f) {
  int reps = 1;
  for (;;) {
    auto start = Clock::now();
    for (int i = 0; i < reps; ++i) f();
    if (seconds_since(start) > 0.02) break;
    reps *= 2;
  }
  std::vector<double> samples;
  for (int s = 0; s < 9; ++s) {
    auto start = Clock::now();
    for (int i = 0; i < reps; ++i) f();
    samples.push_back(seconds_since(start) / reps);
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

// Fit y = a + b n by least squares on relative error (weights 1 / y^2),
// since sizes span two orders of magnitude; returns the largest
// |residual| / y.
double linear_fit_residual(const std::vector<double>& n, const std::vector<double>& y) {
  double sw = 0, sn = 0, sy = 0, snn = 0, sny = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    double w = 1.0 / (y[i] * y[i]);
    sw += w;
    sn += w * n[i];
    sy += w * y[i];
    snn += w * n[i] * n[i];
    sny += w * n[i] * y[i];
  }
  double b = (sw * sny - sn * sy) / (sw * snn - sn * sn);
  double a = (sy - b * sn) / sw;
  double worst = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    worst = std::max(worst, std::abs(y[i] - (a + b * n[i])) / y[i]);
  }
  return worst;
}

void criterion8(Line& line) {
  testing::Rng rng(8);
  int within = 0;
  double worst = 0;
  for (int i = 0; i < kRandomGrammars; ++i) {
    Tag t = testing::random_tag(rng, 6, false);
    double ratio = static_cast<double>(lc_rtg(t).rules.size()) / to_rtg(t).rules.size();
    worst = std::max(worst, ratio);
    if (ratio <= kMaxLcGrowth) ++within;
  }
  line.require(within == kRandomGrammars, std::to_string(within) + "/" + std::to_string(kRandomGrammars) +
                                              " random grammars with lc rules <= 2x (worst " + fmt(worst) + ")");
  Tag fig = load_tag(testing::fig2_path());
  std::size_t lc = lc_rtg(fig).rules.size();
  std::size_t base = to_rtg(fig).rules.size();
  line.require(lc <= 2 * base, "fig2: " + std::to_string(lc) + " lc rules vs " + std::to_string(base));
  std::size_t lcr = reduce(lc_rtg(fig)).rules.size();
  std::size_t baser = reduce(to_rtg(fig)).rules.size();
  line.require(lcr <= 2 * baser, "fig2 reduced: " + std::to_string(lcr) + " lc rules vs " + std::to_string(baser));

  const std::vector<int> copies = {1, 10, 100};
  std::vector<Tag> tags;
  for (int c : copies) tags.push_back(testing::replicate(fig, c));
  struct Subject {
    const char* name;
    std::function<FbRtg(const Tag&)> f;
  };
  const std::vector<Subject> subjects = {{"to_fbrtg", to_fbrtg}, {"lc_fbrtg", lc_fbrtg}};
  for (const auto& s : subjects) {
    std::vector<double> n;
    std::vector<double> y;
    std::string detail;
    for (std::size_t i = 0; i < copies.size(); ++i) {
      n.push_back(copies[i]);
      y.push_back(time_per_call([&] { s.f(tags[i]); }));
      detail += " x" + std::to_string(copies[i]) + "=" + fmt(y.back() * 1e3) + "ms";
    }
    double r = linear_fit_residual(n, y);
    line.require(r <= kMaxFitResidual,
                 std::string(s.name) + " linear fit residual " + fmt(r) + " <= " + fmt(kMaxFitResidual) + ":" + detail);
  }
}

void criterion9(Line& line) {
  testing::Rng rng(9);
  using Check = std::string (*)(const FeatureTerm&, const FeatureTerm&);
  const std::vector<std::pair<const char*, Check>> checks = {
      {"mgu correctness", testing::check_mgu_correct},
      {"mgu generality vs exhaustive ground oracle", testing::check_mgu_general},
      {"symmetry up to renaming", testing::check_symmetry},
      {"substitution idempotence", testing::check_idempotent},
  };
  for (const auto& [name, check] : checks) {
    int failures = 0;
    std::string first;
    for (int i = 0; i < kPropertyCases; ++i) {
      auto [a, b] = testing::random_pair(rng);
      std::string msg = check(a, b);
      if (!msg.empty()) {
        if (first.empty()) first = msg;
        ++failures;
      }
    }
    line.require(failures == 0, std::string(name) + ": " + std::to_string(failures) + " failures in " +
                                    std::to_string(kPropertyCases) + (first.empty() ? "" : " (" + first + ")"));
  }
  int failures = 0;
  for (int i = 0; i < kPropertyCases; ++i) {
    if (!testing::check_composition(rng).empty()) ++failures;
  }
  line.require(failures == 0, "composition law: " + std::to_string(failures) + " failures in " +
                                  std::to_string(kPropertyCases));
}

// Backtracking comparison; informational only.
void backtracking_note() {
  Tag tag = load_tag(testing::fig2_path());
  EnumerationStats base;
  EnumerationStats lc;
  enumerate(reduce(to_fbrtg(tag)), kRoundTripDepth, Strategy::kLeftmost, &base);
  enumerate(reduce(lc_fbrtg(tag)), kRoundTripDepth, Strategy::kLeftmost, &lc);
  std::cout << "INFO  depth-6 enumeration of fig2: " << base.narrowings << " narrowings, " << base.failures
            << " failed (plain order); " << lc.narrowings << " narrowings, " << lc.failures
            << " failed (left-corner)\n";
}

}  // namespace
}  // namespace tagrtg

int main() {
  using namespace tagrtg;
  struct Criterion {
    int id;
    const char* title;
    void (*run)(Line&);
  };
  const std::vector<Criterion> criteria = {
      {1, "plain translation transcript", criterion1},
      {2, "feature translation transcript", criterion2},
      {3, "agreement derivation and replay", criterion3},
      {4, "agreement rejection suite", criterion4},
      {5, "left-corner transcripts", criterion5},
      {6, "left-corner inverse round trip", criterion6},
      {7, "enumeration vs product oracle", criterion7},
      {8, "size and linear-time claims", criterion8},
      {9, "unification properties", criterion9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Line line;
    try {
      c.run(line);
    } catch (const std::exception& e) {
      line.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (line.ok ? "PASS" : "FAIL") << "  " << c.id << "  " << c.title << "\n" << line.text.str();
    std::cout.flush();
    if (!line.ok) ++failed;
  }
  backtracking_note();
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
