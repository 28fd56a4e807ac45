// Copyright 2026 The ssd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "ssd/design.hpp"
#include "ssd/error.hpp"
#include "ssd/gf.hpp"
#include "ssd/poly_labels.hpp"
#include "support/suites.hpp"

namespace ssd {
namespace {

using Col = std::vector<Element>;

Col column(const Field& f, int n, const ColumnLabel& label) {
  Col out;
  for (const auto& p : f.points(n)) out.push_back(evaluate(f, label, p));
  return out;
}

std::multiset<Col> columns(const Field& f, int n,
                           const std::vector<ColumnLabel>& labels) {
  std::multiset<Col> out;
  for (const auto& l : labels) out.insert(column(f, n, l));
  return out;
}

LinearForm form(std::vector<Element> c) { return LinearForm{std::move(c)}; }

std::vector<std::string> strings(const Field& f,
                                 const std::vector<ColumnLabel>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(format_label(f, l));
  return out;
}

TEST(LinearFormTest, Basics) {
  EXPECT_TRUE(form({0, 0}).is_zero());
  EXPECT_EQ(form({2, 1, 0}).last_nonzero(), 1);
  EXPECT_TRUE(form({2, 1, 0}).is_canonical());
  EXPECT_FALSE(form({1, 2}).is_canonical());
  EXPECT_EQ(variable(3, 1), form({0, 1, 0}));
  const Field f(3);
  EXPECT_EQ(scale(f, 2, form({1, 2})), form({2, 1}));
  EXPECT_EQ(add(f, form({1, 2}), form({2, 2})), form({0, 1}));
  EXPECT_TRUE(dependent(f, form({1, 2}), form({2, 1})));
  EXPECT_FALSE(dependent(f, form({1, 2}), form({1, 1})));
}

TEST(HSetTest, Examples) {
  const Field f3(3);
  const auto h = h_set(f3, 2);
  std::vector<std::string> text;
  for (const auto& x : h) text.push_back(format_form(x));
  EXPECT_EQ(text, (std::vector<std::string>{"X1", "X2", "X1+X2", "2*X1+X2"}));
  EXPECT_EQ(h_set(f3, 3).size(), 13u);
  EXPECT_EQ(h_set(Field(4), 1), (std::vector<LinearForm>{form({1})}));
  for (std::uint32_t s : {2u, 3u, 4u, 5u}) {
    for (int n = 1; n <= 3; ++n) {
      const Field f(s);
      const auto all = h_set(f, n);
      std::uint64_t expected = 1;
      for (int i = 0; i < n; ++i) expected *= s;
      EXPECT_EQ(all.size(), (expected - 1) / (s - 1));
      for (const auto& x : all) EXPECT_TRUE(x.is_canonical());
      // Pairwise independent.
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
          EXPECT_FALSE(dependent(f, all[i], all[j]));
        }
      }
    }
  }
}

TEST(Q1Test, Examples) {
  const Field f3(3);
  EXPECT_EQ(strings(f3, q1_star(f3, 2)),
            (std::vector<std::string>{"X1^2+X2", "X1^2+X1+X2", "X1^2+2*X1+X2"}));
  EXPECT_EQ(q1_star(f3, 3).size(), 12u);
  EXPECT_EQ(q1_star(Field(5), 2).size(), 5u);
  const auto full = q1(f3, 2);
  ASSERT_EQ(full.size(), 4u);
  EXPECT_EQ(full[0], ColumnLabel(variable(2, 0)));
}

TEST(QhTest, Substitution) {
  const Field f3(3);
  EXPECT_EQ(qh_substitution(f3, form({1, 0})),
            (std::vector<LinearForm>{form({1, 0}), form({0, 1})}));
  EXPECT_EQ(qh_substitution(f3, form({1, 1})),
            (std::vector<LinearForm>{form({1, 1}), form({1, 0})}));
  EXPECT_EQ(qh_substitution(f3, form({0, 1, 0})),
            (std::vector<LinearForm>{form({0, 1, 0}), form({1, 0, 0}),
                                     form({0, 0, 1})}));
  EXPECT_THROW(qh_substitution(f3, form({2, 0})), Error);
}

TEST(QhTest, ExampleTwoListings) {
  const Field f(3);
  const int n = 2;
  const auto x1 = variable(n, 0);
  const auto x2 = variable(n, 1);
  std::vector<ColumnLabel> expected{x2};
  for (Element a = 0; a < 3; ++a) {
    expected.push_back(make_quadratic(f, x2, add(f, scale(f, a, x2), x1)));
  }
  EXPECT_EQ(columns(f, n, qh(f, x2)), columns(f, n, expected));

  const auto h = form({2, 1});
  expected = {h,
              make_quadratic(f, h, x1),
              make_quadratic(f, h, x2),
              make_quadratic(f, h, form({2, 2}))};
  EXPECT_EQ(columns(f, n, qh(f, h)), columns(f, n, expected));
}

TEST(QhTest, IdentityForX1) {
  for (std::uint32_t s : {3u, 4u}) {
    const Field f(s);
    for (int n = 2; n <= 3; ++n) {
      EXPECT_EQ(qh(f, variable(n, 0)), q1(f, n));
    }
  }
}

TEST(EvaluateTest, Examples) {
  const Field f3(3);
  const auto x1 = variable(2, 0);
  const auto x2 = variable(2, 1);
  const Element p11[] = {1, 1};
  const Element p20[] = {2, 0};
  EXPECT_EQ(evaluate(f3, make_quadratic(f3, x1, x2), p11), 2u);
  EXPECT_EQ(evaluate(f3, make_quadratic(f3, x1, form({2, 1})), p20), 2u);
  const Field f4(4);
  const Element p21[] = {2, 1};
  EXPECT_EQ(evaluate(f4, make_quadratic(f4, x1, x2), p21), 2u);
}

TEST(LabelPropertyTest, DependentFormsAliasIndependentOrthogonal) {
  for (std::uint32_t s : {3u, 4u}) {
    const Field f(s);
    const int n = 2;
    std::vector<LinearForm> forms;
    for (const auto& h : h_set(f, n)) {
      for (Element c = 1; c < s; ++c) forms.push_back(scale(f, c, h));
    }
    for (std::size_t i = 0; i < forms.size(); ++i) {
      for (std::size_t j = i + 1; j < forms.size(); ++j) {
        const ColumnLabel pair[] = {forms[i], forms[j]};
        const Design d = realize(f, n, pair);
        const auto kind = classify_pair(d, 0, 1).kind;
        if (dependent(f, forms[i], forms[j])) {
          EXPECT_EQ(kind, PairKind::kFullyAliased);
        } else {
          EXPECT_EQ(kind, PairKind::kOrthogonal);
        }
      }
    }
  }
}

TEST(LabelPropertyTest, SaturatedOrthogonalArrays) {
  for (std::uint32_t s : {3u, 4u, 5u}) {
    const Field f(s);
    for (int n = 2; n <= 3; ++n) {
      const auto forms = h_set(f, n);
      const std::vector<ColumnLabel> hs(forms.begin(), forms.end());
      const Design rao = realize(f, n, hs);
      EXPECT_EQ(strength(rao), 2) << "s=" << s << " n=" << n;
      const auto labels = q1(f, n);
      const Design lemma7 = realize(f, n, labels);
      EXPECT_EQ(lemma7.size(), hs.size());
      EXPECT_TRUE(is_oa(lemma7, 2)) << "s=" << s << " n=" << n;
    }
  }
}

TEST(LabelPropertyTest, Corollary1Bijection) {
  for (std::uint32_t s : {3u, 4u, 5u}) {
    const Field f(s);
    const auto points = f.points(2);
    std::set<std::pair<Element, Element>> image;
    const auto labels = q1(f, 2);
    for (const auto& p : points) {
      const Element y1 = p[0];
      const Element y2 = f.add(f.mul(p[0], p[0]), p[1]);
      image.insert({y1, y2});
      EXPECT_EQ(evaluate(f, labels[0], p), y1);
      for (Element a = 0; a < s; ++a) {
        // q1_star with n = 2 has g = X2 only, so label 1 + a is X1^2+aX1+X2.
        EXPECT_EQ(evaluate(f, labels[1 + a], p), f.add(f.mul(a, y1), y2));
      }
    }
    EXPECT_EQ(image.size(), points.size());
  }
}

TEST(LabelPropertyTest, Q1AndRegularDesignDifferBeyondTwoVariables) {
  for (std::uint32_t s : {2u, 3u, 4u, 5u}) {
    const Field f(s);
    for (int n = 2; n <= 3; ++n) {
      const auto forms = h_set(f, n);
      const std::vector<ColumnLabel> hs(forms.begin(), forms.end());
      const auto q = q1(f, n);
      const std::size_t regular = testing::dependent_triples(realize(f, n, hs));
      const std::size_t quadratic = testing::dependent_triples(realize(f, n, q));
      if (n > 2 && s > 2) {
        EXPECT_NE(regular, quadratic) << "s=" << s;
      } else {
        EXPECT_EQ(regular, quadratic) << "s=" << s << " n=" << n;
      }
    }
  }
}

TEST(ParseTest, RoundTrip) {
  for (std::uint32_t s : {3u, 4u, 5u}) {
    const Field f(s);
    for (int n = 2; n <= 3; ++n) {
      for (const auto& h : h_set(f, n)) {
        for (const auto& label : qh(f, h)) {
          const std::string text = format_label(f, label);
          const ColumnLabel back = parse_label(f, text, n);
          EXPECT_EQ(format_label(f, back), text);
          EXPECT_EQ(column(f, n, back), column(f, n, label)) << text;
        }
      }
    }
  }
}

TEST(ParseTest, Errors) {
  const Field f(3);
  for (const char* bad : {"", "X0", "X4", "X1^3", "X1+", "3*X1", "Y1"}) {
    try {
      parse_label(f, bad, 3);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParseError) << bad;
    }
  }
  EXPECT_NO_THROW(parse_label(f, " X1 ^ 2 + 2 * X1 + X3 ", 3));
}

}  // namespace
}  // namespace ssd
