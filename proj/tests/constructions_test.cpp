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

#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "ssd/bounds.hpp"
#include "ssd/constructions.hpp"
#include "ssd/criteria.hpp"
#include "ssd/design.hpp"
#include "ssd/error.hpp"
#include "ssd/gf.hpp"
#include "ssd/poly_labels.hpp"
#include "support/suites.hpp"

namespace ssd {
namespace {

using Histogram = std::map<Rational, std::size_t>;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no ssd::Error thrown";
  return ErrorCode::kInvalidArgument;
}

Histogram histogram_of(const Design& d) {
  return nonzero_histogram(aggregate_stats(d));
}

Rational r(std::int64_t a, std::int64_t b = 1) { return make_rational(a, b); }

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

TEST(Theorem4Test, Examples) {
  Design d = construct_thm4(Field(3), 2);
  EXPECT_EQ(d.size(), 7u);
  EXPECT_EQ(histogram_of(d), (Histogram{{r(2, 3), 9}}));
  d = construct_thm4(Field(3), 3);
  EXPECT_EQ(d.runs(), 27u);
  EXPECT_EQ(d.size(), 25u);
  EXPECT_EQ(histogram_of(d), (Histogram{{r(2, 3), 36}}));
  d = construct_thm4(Field(4), 2);
  EXPECT_EQ(d.size(), 9u);
  EXPECT_EQ(histogram_of(d), (Histogram{{r(1), 12}}));
}

TEST(Theorem4Test, SemiOrthogonalCountsAndX1) {
  for (std::int64_t s : {3, 4, 5}) {
    for (int n = 2; n <= 3; ++n) {
      const Design d = construct_thm4(Field(s), n);
      std::int64_t semi = 0;
      for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
          const auto c = classify_pair(d, i, j);
          if (c.kind == PairKind::kSemiOrthogonal) ++semi;
          EXPECT_NE(c.kind, PairKind::kFullyAliased);
          EXPECT_NE(c.kind, PairKind::kPartial);
          if (i == 0) EXPECT_EQ(c.kind, PairKind::kOrthogonal);
        }
      }
      const std::int64_t sn = ipow(s, n);
      const std::int64_t expected = s % 2 ? s * (sn - s) / (s - 1) : sn - s;
      EXPECT_EQ(semi, expected) << "s=" << s << " n=" << n;
      EXPECT_EQ(a2_overall(d), Rational(sn - s));
      EXPECT_TRUE(certify(d).achieved_theorem1);
    }
  }
}

TEST(Theorem6Test, Examples) {
  EXPECT_EQ(histogram_of(construct_thm6(Field(3), 2, 4)),
            (Histogram{{r(4, 9), 54}, {r(2, 3), 36}}));
  EXPECT_EQ(histogram_of(construct_thm6(Field(3), 3, 2)),
            (Histogram{{r(2, 9), 81}, {r(4, 9), 9}, {r(2, 3), 6}}));
  const Design even = construct_thm6(Field(4), 2, 5);
  std::size_t aliased = 0;
  for (std::size_t i = 0; i < even.size(); ++i) {
    for (std::size_t j = i + 1; j < even.size(); ++j) {
      if (classify_pair(even, i, j).kind == PairKind::kFullyAliased) {
        ++aliased;
        EXPECT_EQ(projected_a2(even, i, j), 3);
      }
    }
  }
  EXPECT_EQ(aliased, 10u);
}

TEST(Theorem6Test, ChoiceIndependence) {
  const Field f(3);
  const Design a = construct_thm5(f, 3, variable(3, 0), variable(3, 1));
  const Design b = construct_thm5(f, 3, variable(3, 0), variable(3, 2));
  const Design c = construct_thm5(f, 3, variable(3, 1), LinearForm{{1, 1, 1}});
  EXPECT_EQ(histogram_of(a), histogram_of(b));
  EXPECT_EQ(histogram_of(a), histogram_of(c));
}

TEST(Theorem7Test, Examples) {
  EXPECT_EQ(histogram_of(construct_thm7(Field(3), 2, 4)),
            (Histogram{{r(4, 9), 54}}));
  EXPECT_EQ(histogram_of(construct_thm7(Field(5), 2, 6)),
            (Histogram{{r(16, 25), 375}}));
  EXPECT_EQ(histogram_of(construct_thm7(Field(3), 3, 13)),
            (Histogram{{r(2, 9), 6318}, {r(4, 9), 702}}));
}

TEST(Theorem7Test, OverallA2ForEveryK) {
  for (std::int64_t s : {3, 5}) {
    const Field f(s);
    const int n = 2;
    const std::int64_t big_k = (s * s - 1) / (s - 1);
    for (std::int64_t k = 2; k <= big_k; ++k) {
      const Design d = construct_thm7(f, n, static_cast<int>(k));
      EXPECT_EQ(a2_overall(d), Rational(k * (k - 1) / 2 * (s * s - 2 * s + 1)));
      const bool optimal = thm7_is_optimal(f, n, static_cast<int>(k));
      EXPECT_EQ(optimal, k >= big_k - 1);
      if (optimal) EXPECT_TRUE(certify(d).achieved_theorem1);
    }
  }
}

TEST(Theorem8Test, Examples) {
  EXPECT_EQ(histogram_of(construct_thm8(Field(3), 2, 2)),
            (Histogram{{r(1, 2), 3}}));
  EXPECT_EQ(histogram_of(construct_thm8(Field(5), 2, 4)),
            (Histogram{{r(1, 4), 10}}));
  const Design d = construct_thm8(Field(4), 3, 3);
  EXPECT_EQ(d.runs(), 48u);
  EXPECT_EQ(d.size(), 20u);
  EXPECT_EQ(histogram_of(d), (Histogram{{r(1, 3), 30}}));
}

TEST(Theorem9Test, Examples) {
  EXPECT_EQ(histogram_of(construct_thm9(Field(3), 3, 2)),
            (Histogram{{r(1, 6), 27}, {r(1, 2), 3}}));
  EXPECT_EQ(histogram_of(construct_thm9(Field(4), 3, 3)),
            (Histogram{{r(1, 9), 72}, {r(1, 3), 6}}));
  EXPECT_EQ(histogram_of(construct_thm9(Field(5), 3, 3)),
            (Histogram{{r(2, 15), 250}, {r(2, 3), 10}}));
}

TEST(BranchSpreadTest, EveryFractionSubset) {
  for (std::uint32_t s : {3u, 4u, 5u}) {
    const Field f(s);
    for (const auto& g : testing::all_subsets(s)) {
      if (g.empty() || g.size() == s) continue;
      const int k = static_cast<int>(g.size());
      EXPECT_LE(coincidences(construct_thm8(f, 2, k, std::nullopt, g)).spread(),
                1);
      const Design d9 = construct_thm9(f, 3, k, g);
      EXPECT_LE(coincidences(d9).spread(), 1);
      EXPECT_TRUE(certify(d9).achieved_theorem1);
    }
  }
}

TEST(Example3Test, ThreeTypes) {
  const Field f(3);
  const int n = 3;
  const LinearForm x1 = variable(n, 0);
  const Histogram type1{{r(1, 2), 12}};
  const Histogram type2{{r(1, 6), 27}, {r(1, 2), 3}};
  const Histogram type3{{r(1, 6), 18}, {r(1, 2), 6}};
  EXPECT_EQ(histogram_of(construct_example3(f, x1)), type1);
  for (Element a = 0; a < 3; ++a) {
    const LinearForm lin{{a, 1, 0}};
    EXPECT_EQ(histogram_of(construct_example3(f, make_quadratic(f, x1, lin))),
              type2);
    for (Element b = 0; b < 3; ++b) {
      const LinearForm lin3{{a, b, 1}};
      EXPECT_EQ(
          histogram_of(construct_example3(f, make_quadratic(f, x1, lin3))),
          type3);
    }
  }
  const auto full = aggregate_stats(construct_example3(f, x1)).histogram;
  EXPECT_EQ(full.at(Rational(0)), 54u);
}

TEST(Corollary2Test, Values) {
  const auto three = corollary2_check(Field(3));
  EXPECT_EQ(three.design.size(), 12u);
  EXPECT_EQ(three.a2, 24);
  EXPECT_TRUE(three.degrees_match);
  const auto five = corollary2_check(Field(5));
  EXPECT_EQ(five.design.size(), 30u);
  EXPECT_EQ(five.a2, 240);
  EXPECT_TRUE(five.degrees_match);
  EXPECT_TRUE(five.matches_thm7_formula);
  EXPECT_TRUE(five.matches_corollary_formula);
}

TEST(DealiasTest, FourLevelDesigns) {
  const Design two = construct_dealiased(Field(4), 2);
  EXPECT_EQ(two.size(), 15u);
  EXPECT_EQ(a2_overall(two), 45);
  EXPECT_EQ(a2_overall(two), lb_theorem1(16, 15, 4));
  const Design three = construct_dealiased(Field(4), 3);
  EXPECT_EQ(three.size(), 231u);
  EXPECT_EQ(a2_overall(three), 3465);
}

TEST(ReplacedTest, MixedLevelDesigns) {
  const Field f(9);
  for (std::size_t i : {0u, 1u, 50u}) {
    const Design d = construct_replaced(f, 10, i);
    EXPECT_EQ(d.size(), 100 + 3 * i);
    const auto b = certify(d);
    EXPECT_EQ(b.a2, 3600);
    EXPECT_EQ(b.theorem10, 3600);
    EXPECT_TRUE(b.achieved_theorem10);
  }
}

TEST(ConstructionErrorsTest, Codes) {
  const Field f3(3);
  const Field f4(4);
  EXPECT_EQ(code_of([&] { construct_thm4(f3, 1); }),
            ErrorCode::kDimensionTooSmall);
  EXPECT_EQ(code_of([&] { construct_thm6(f3, 2, 1); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { construct_thm6(f3, 2, 5); }),
            ErrorCode::kInvalidArgument);
  const LinearForm twice[] = {variable(2, 0), variable(2, 0)};
  EXPECT_EQ(code_of([&] { construct_thm6(f3, 2, 2, twice); }),
            ErrorCode::kDuplicateH);
  const LinearForm bad[] = {variable(2, 0), LinearForm{{0, 2}}};
  EXPECT_EQ(code_of([&] { construct_thm6(f3, 2, 2, bad); }),
            ErrorCode::kNotCanonical);
  EXPECT_EQ(code_of([&] { construct_thm7(f4, 2, 2); }), ErrorCode::kEvenS);
  EXPECT_EQ(code_of([&] { construct_thm8(f3, 2, 3); }),
            ErrorCode::kBadFractionCount);
  EXPECT_EQ(code_of([&] {
              construct_thm8(f3, 2, 2, LinearForm{{2, 0}});
            }),
            ErrorCode::kNotAColumn);
  EXPECT_EQ(code_of([&] { construct_example3(f3, variable(2, 0)); }),
            ErrorCode::kNotAColumn);
  EXPECT_EQ(code_of([&] {
              construct_example3(
                  f3, make_quadratic(f3, variable(3, 1), variable(3, 2)));
            }),
            ErrorCode::kNotAColumn);
}

TEST(RecipeTest, ParseAndBuild) {
  EXPECT_EQ(parse_theorem("4"), Theorem::kThm4);
  EXPECT_EQ(parse_theorem("example3"), Theorem::kExample3);
  EXPECT_EQ(parse_theorem(to_string(Theorem::kDealias)), Theorem::kDealias);
  EXPECT_THROW(parse_theorem("11"), Error);
  Recipe recipe;
  recipe.theorem = Theorem::kThm7;
  recipe.s = 3;
  recipe.n = 2;
  recipe.k = 4;
  EXPECT_EQ(build(recipe), construct_thm7(Field(3), 2, 4));
  EXPECT_FALSE(describe(recipe).empty());
  recipe.modulus = Polynomial{1, 0, 1};
  recipe.s = 9;
  recipe.k = 3;
  EXPECT_EQ(a2_overall(build(recipe)), a2_overall(construct_thm7(Field(9), 2, 3)));
}

TEST(CatalogTest, AllRowsVerify) {
  const auto rows = catalog();
  EXPECT_EQ(rows.size(), 31u);
  const auto report = catalog_verify();
  ASSERT_EQ(report.rows.size(), rows.size());
  for (const auto& row : report.rows) {
    EXPECT_TRUE(row.ok) << row.id << ": "
                        << (row.failures.empty() ? "" : row.failures.front());
    EXPECT_EQ(row.coincidence_spread <= 1, row.achieved_theorem1) << row.id;
  }
  EXPECT_TRUE(report.ok());
}

TEST(CatalogTest, NamedRows) {
  int found = 0;
  for (const auto& row : catalog()) {
    if (row.id().find("Table 2 row 8/4 ") == 0) {
      ++found;
      EXPECT_EQ(row.expected, (Histogram{{r(1), 6}}));
    }
    if (row.id().find("Table 3 row 25/11 ") == 0) {
      ++found;
      EXPECT_EQ(row.expected, (Histogram{{r(4, 5), 25}}));
    }
  }
  EXPECT_EQ(found, 2);
  CatalogOptions options;
  options.table_filter = "Table 2";
  const auto report = catalog_verify(options);
  EXPECT_FALSE(report.rows.empty());
  EXPECT_TRUE(report.ok());
}

}  // namespace
}  // namespace ssd
