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
#include <vector>

#include <gtest/gtest.h>

#include "ssd/bounds.hpp"
#include "ssd/constructions.hpp"
#include "ssd/criteria.hpp"
#include "ssd/design.hpp"
#include "ssd/error.hpp"
#include "ssd/gf.hpp"
#include "ssd/oracle.hpp"
#include "ssd/poly_labels.hpp"

namespace ssd {
namespace {

using Table = std::vector<std::vector<std::int64_t>>;

Design rao_hamming(std::uint32_t s, int n) {
  const Field f(s);
  const auto forms = h_set(f, n);
  const std::vector<ColumnLabel> labels(forms.begin(), forms.end());
  return realize(f, n, labels);
}

std::vector<std::int64_t> sorted_cells(const Table& t) {
  std::vector<std::int64_t> out;
  for (const auto& row : t) out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(PairTableTest, Examples) {
  const Design oa = rao_hamming(3, 2);
  EXPECT_EQ(oracle::pair_table(oa, 0, 1), Table(3, {1, 1, 1}));
  const std::size_t twice[] = {1, 1};
  EXPECT_EQ(sorted_cells(oracle::pair_table(oa.select_columns(twice), 0, 1)),
            (std::vector<std::int64_t>{0, 0, 0, 0, 0, 0, 3, 3, 3}));
  const Design ex1 = construct_thm4(Field(3), 2);
  EXPECT_EQ(sorted_cells(oracle::pair_table(ex1, 4, 1)),
            (std::vector<std::int64_t>{0, 0, 0, 1, 1, 1, 2, 2, 2}));
}

TEST(PairTableTest, AgreesWithCountingRouteOnCatalog) {
  for (const auto& row : catalog()) {
    const Design d = build(row.recipe);
    // Sample every pair on small designs and a stride on the wide ones.
    const std::size_t stride = d.size() > 60 ? 13 : 1;
    for (std::size_t i = 0; i < d.size(); i += stride) {
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        ASSERT_EQ(oracle::projected_a2_from_table(d, i, j),
                  projected_a2(d, i, j))
            << row.id() << " pair " << i << "," << j;
      }
    }
  }
}

TEST(ExhaustiveTest, TheoremOneTightAtSixRuns) {
  auto r = oracle::exhaustive_min_a2(6, 3, 2);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.best_a2, make_rational(1, 2));
  EXPECT_EQ(r.best_a2, lb_theorem1(6, 2, 3));
  r = oracle::exhaustive_min_a2(6, 3, 3);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.best_a2, make_rational(3, 2));
  EXPECT_EQ(r.best_a2, lb_theorem1(6, 3, 3));
  EXPECT_EQ(a2_overall(r.certificate), r.best_a2);
  EXPECT_TRUE(r.certificate.is_balanced());
}

TEST(ExhaustiveTest, TwoLevelFourRuns) {
  auto r = oracle::exhaustive_min_a2(4, 2, 3);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.best_a2, 0);
  EXPECT_EQ(e_s2(r.certificate), 0);
  r = oracle::exhaustive_min_a2(4, 2, 4);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.best_a2, 1);
  EXPECT_GE(e_s2(r.certificate), lb_es2(4, 4).value);
}

TEST(ExhaustiveTest, BestNeverBeatsTheorem1) {
  for (auto [n, s, m] : {std::tuple{6u, 3u, 4u}, {6u, 2u, 6u}, {8u, 2u, 8u},
                         {9u, 3u, 3u}, {8u, 4u, 3u}, {4u, 2u, 5u}}) {
    const auto r = oracle::exhaustive_min_a2(n, s, m);
    ASSERT_TRUE(r.exhaustive) << n << " " << s << " " << m;
    EXPECT_GE(r.best_a2, lb_theorem1(n, m, s));
    const auto b = certify(r.certificate);
    EXPECT_EQ(b.a2, r.best_a2);
    EXPECT_EQ(b.achieved_theorem1, b.coincidence_spread <= 1);
  }
}

TEST(ExhaustiveTest, StopAtBoundAndBudget) {
  oracle::SearchOptions options;
  options.stop_at = lb_theorem1(9, 5, 3);
  const auto r = oracle::exhaustive_min_a2(9, 3, 5, options);
  EXPECT_TRUE(r.stopped_at_bound);
  EXPECT_EQ(r.best_a2, 2);
  options = {};
  options.budget = 10;
  const auto partial = oracle::exhaustive_min_a2(9, 3, 6, options);
  EXPECT_FALSE(partial.exhaustive);
}

TEST(GwlpBruteforceTest, MatchesCharacterRoute) {
  EXPECT_NEAR(oracle::gwlp_bruteforce(rao_hamming(3, 2), 2), 0, 1e-9);
  EXPECT_NEAR(oracle::gwlp_bruteforce(construct_thm4(Field(3), 2), 2), 6,
              1e-9);
  const std::vector<Design> designs = {
      construct_thm8(Field(3), 2, 2), construct_thm4(Field(3), 2),
      construct_thm4(Field(4), 2).select_columns(std::vector<std::size_t>{
          0, 2, 4, 6, 8}),
      construct_thm8(Field(2), 3, 1)};
  for (const auto& d : designs) {
    const auto a = gwlp(d, {.jmax = 3});
    for (int j = 1; j <= 3; ++j) {
      EXPECT_NEAR(oracle::gwlp_bruteforce(d, j), a[j - 1], 1e-9)
          << "j=" << j << " N=" << d.runs();
    }
  }
}

TEST(GwlpBruteforceTest, RejectsLargeDesigns) {
  try {
    oracle::gwlp_bruteforce(construct_thm4(Field(3), 3), 2);
    ADD_FAILURE() << "accepted a 27 x 25 design";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(PeriodicityTest, SpotChecks) {
  auto rows = oracle::periodicity_spot_check(9, 3, 4, 1, 2);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& row : rows) {
    EXPECT_TRUE(row.exact);
    EXPECT_TRUE(row.holds) << "m=" << row.m;
    EXPECT_EQ(row.a2_m_plus_t - row.a2_m, Rational(2 * row.m));
  }
  rows = oracle::periodicity_spot_check(4, 2, 3, 1, 1);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_TRUE(rows[0].holds);
  EXPECT_EQ(rows[0].a2_m_plus_t - rows[0].a2_m, 1);
  EXPECT_EQ(rows[0].a2_m, 0);
}

}  // namespace
}  // namespace ssd
