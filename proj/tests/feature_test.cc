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

#include <gtest/gtest.h>

#include "tagrtg/errors.h"
#include "tagrtg/feature.h"
#include "tagrtg/feature_syntax.h"

namespace tagrtg {
namespace {

FeatureTerm T(const char* text) { return parse_feature_term(text); }

TEST(FeatureSyntaxTest, PrintsParsedTerms) {
  EXPECT_EQ(to_string(T("[agr: ?x, mode: ind]")), "[agr: ?x, mode: ind]");
  EXPECT_EQ(to_string(T("[]")), "[]");
  EXPECT_EQ(to_string(T("3sg")), "3sg");
  EXPECT_EQ(to_string(T("?ε.x")), "?ε.x");
  EXPECT_EQ(to_string(T("[top: [agr: 3pl], bot: [const: -]]")),
            "[top: [agr: 3pl], bot: [const: -]]");
}

TEST(FeatureSyntaxTest, EqualityIgnoresAttributeOrder) {
  EXPECT_EQ(T("[a: 1, b: 2]"), T("[b: 2, a: 1]"));
  EXPECT_NE(T("[a: 1]"), T("[a: 1, b: 2]"));
  EXPECT_NE(T("x"), T("?x"));
}

TEST(FeatureSyntaxTest, RepeatedAttributeFormsAConjunction) {
  Constraint c = parse_constraint("[top: ?t, top: [agr: 3sg]]");
  ASSERT_EQ(c.conjuncts.size(), 2u);
  EXPECT_EQ(c.conjuncts[0], T("[top: ?t]"));
  EXPECT_EQ(c.conjuncts[1], T("[top: [agr: 3sg]]"));
  EXPECT_EQ(to_string(c), "[top: ?t, top: [agr: 3sg]]");
  EXPECT_THROW(parse_feature_term("[a: 1, a: 2]"), ParseError);
}

TEST(FeatureSyntaxTest, NormalizeDropsTopAndDistributes) {
  Constraint c{{T("[top: ?t]"), T("[top: []]"), T("[]"), T("[bot: [agr: ?x, d: []]]")}};
  Constraint n = normalize(c);
  ASSERT_EQ(n.conjuncts.size(), 1u);
  EXPECT_EQ(n.conjuncts[0], T("[top: ?t, bot: [agr: ?x]]"));
  EXPECT_TRUE(normalize(Constraint{{T("[]")}}).is_top());
}

TEST(FeatureSyntaxTest, ReportsPosition) {
  try {
    parse_feature_term("[agr:\n  3sg,, x]");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 7);
  }
}

TEST(UnifyTest, MergesOpenRecords) {
  auto r = unify(T("[agr: ?x]"), T("[agr: 3sg, mode: ind]"));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->term, T("[agr: 3sg, mode: ind]"));
  EXPECT_EQ(apply(r->mgu, T("?x")), T("3sg"));
}

TEST(UnifyTest, TopUnifiesWithAnything) {
  for (const char* s : {"a", "?x", "[f: a]", "[]"}) {
    auto r = unify(T("[]"), T(s));
    ASSERT_TRUE(r) << s;
    EXPECT_EQ(r->term, T(s));
    EXPECT_TRUE(r->mgu.empty());
  }
}

TEST(UnifyTest, Clashes) {
  EXPECT_FALSE(unify(T("a"), T("b")));
  EXPECT_FALSE(unify(T("a"), T("[f: a]")));
  EXPECT_FALSE(unify(T("[agr: 3sg]"), T("[agr: 3pl]")));
  EXPECT_FALSE(unify(T("[const: +]"), T("[const: -]")));
}

TEST(UnifyTest, OccursCheck) {
  EXPECT_FALSE(unify(T("?x"), T("[f: ?x]")));
  EXPECT_FALSE(unify(T("[a: ?x, b: ?y]"), T("[a: [f: ?y], b: [g: ?x]]")));
  EXPECT_TRUE(unify(T("?x"), T("?x")));
}

TEST(UnifyTest, ReentrancyIsShared) {
  // [top: ?v, bot: ?v] against [top: [agr: ?x], bot: [mode: ind]]
  auto r = unify(T("[top: ?v, bot: ?v]"), T("[top: [agr: ?x], bot: [mode: ind]]"));
  ASSERT_TRUE(r);
  EXPECT_EQ(apply(r->mgu, T("?v")), T("[agr: ?x, mode: ind]"));
  EXPECT_EQ(r->term, T("[top: [agr: ?x, mode: ind], bot: [agr: ?x, mode: ind]]"));
  EXPECT_TRUE(r->mgu.is_idempotent());
}

TEST(UnifyTest, VariableChains) {
  auto r = unify(T("[a: ?v, b: ?w, c: ?w]"), T("[a: [f: 1], b: ?v, c: [g: 2]]"));
  ASSERT_TRUE(r);
  EXPECT_EQ(apply(r->mgu, T("?w")), T("[f: 1, g: 2]"));
  EXPECT_EQ(apply(r->mgu, T("?v")), T("[f: 1, g: 2]"));
}

TEST(UnifyTest, UnifyAllFoldsConjuncts) {
  auto r = unify_all(parse_constraint("[top: ?t, top: [agr: 3sg]] & [top: [mode: ind]]"));
  ASSERT_TRUE(r);
  EXPECT_EQ(apply(r->mgu, T("?t")), T("[agr: 3sg, mode: ind]"));
  EXPECT_FALSE(unify_all(parse_constraint("[a: 1, a: 2]")));
  auto top = unify_all(Constraint{});
  ASSERT_TRUE(top);
  EXPECT_TRUE(top->term.is_top());
}

TEST(SubstitutionTest, ComposeAppliesInnerFirst) {
  Substitution inner({{"x", T("[f: ?y]")}});
  Substitution outer({{"y", T("a")}, {"z", T("b")}});
  Substitution both = compose(outer, inner);
  EXPECT_EQ(apply(both, T("[p: ?x, q: ?y, r: ?z]")), T("[p: [f: a], q: a, r: b]"));
  EXPECT_TRUE(both.is_idempotent());
}

TEST(SubstitutionTest, FreshenPrefixesEveryVariable) {
  EXPECT_EQ(freshen(T("[top: ?t, bot: [agr: ?x]]"), "1.2"),
            T("[top: ?1.2.t, bot: [agr: ?1.2.x]]"));
  EXPECT_EQ(freshen(T("[a: b]"), "ε"), T("[a: b]"));
}

TEST(MatchingTest, SubsumptionAndVariants) {
  EXPECT_TRUE(subsumes(T("[agr: ?x]"), T("[agr: 3sg, mode: ind]")));
  EXPECT_FALSE(subsumes(T("[agr: 3sg, mode: ind]"), T("[agr: ?x]")));
  EXPECT_FALSE(subsumes(T("[a: ?x, b: ?x]"), T("[a: 1, b: 2]")));
  EXPECT_TRUE(is_variant(T("[a: ?x, b: ?y]"), T("[a: ?u, b: ?w]")));
  EXPECT_FALSE(is_variant(T("[a: ?x, b: ?x]"), T("[a: ?u, b: ?w]")));
  EXPECT_TRUE(extends(T("[a: ?x]"), T("[a: ?x, b: 1]")));
  EXPECT_FALSE(extends(T("[a: ?x]"), T("[a: 1]")));
}

}  // namespace
}  // namespace tagrtg
