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

#ifndef SSD_CRITERIA_HPP_
#define SSD_CRITERIA_HPP_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ssd/design.hpp"
#include "ssd/gf.hpp"
#include "ssd/rational.hpp"

namespace ssd {

// t-th power moment of the run coincidences: mean over run pairs of delta^t.
Rational power_moment(const Design& d, int t);

// Overall A2. Equal-level designs use the closed form in K2; mixed-level
// designs sum the pairwise projected A2 values. Throws kUnbalancedDesign.
Rational a2_overall(const Design& d);

// Sum of projected A2 over all column pairs (valid for any level profile).
Rational a2_pairwise_sum(const Design& d);

// chi^2(c_i, c_j) / N from cell counts.
Rational projected_a2(const Design& d, std::size_t i, std::size_t j);

// Character-sum route: N^-2 sum_{u,v != 0} |sum_r chi(u x_r + v y_r)|^2.
// Both columns must share a prime-power level count. The one-argument form
// uses the default field of that order; throws kNoFieldRealization when the
// level count is not a prime power or the columns' levels differ.
double projected_a2_char(const Design& d, std::size_t i, std::size_t j);
double projected_a2_char(const Design& d, std::size_t i, std::size_t j,
                         const Field& field);

// Fields used to realize characters per level count; missing orders fall back
// to the default modulus.
class FieldSet {
 public:
  FieldSet() = default;
  explicit FieldSet(std::vector<Field> overrides)
      : overrides_(std::move(overrides)) {}

  // Override for `order` if one was given, else a cached default field.
  // Not thread-safe.
  const Field& get(std::uint32_t order) const;

 private:
  std::vector<Field> overrides_;
  mutable std::deque<Field> cache_;
};

struct GwlpOptions {
  int jmax = 3;
  // Cap on sum_{j <= jmax} C(m, j) (s - 1)^j character products.
  double budget = 2e7;
  const FieldSet* fields = nullptr;
};

// Character-route count of word terms for jmax, used by the budget guard.
double gwlp_cost(const Design& d, int jmax);

// [A_1, ..., A_jmax]. Throws kBudgetExceeded when gwlp_cost exceeds the
// budget and kNoFieldRealization for non-prime-power levels.
std::vector<double> gwlp(const Design& d, const GwlpOptions& options = {});

struct PairStats {
  Rational chi2;
  Rational f;
  Rational d2;
};

// d2 uses N / (s_i s_j) as the expected count, which is N / s^2 for
// equal-level pairs.
PairStats pair_dependency_stats(const Design& d, std::size_t i, std::size_t j);

struct CriteriaReport {
  std::size_t runs = 0;
  std::size_t columns = 0;
  std::vector<std::uint32_t> levels;
  Rational k1;
  Rational k2;
  Rational a2;
  // Every one of the C(m, 2) pairs, zero included.
  std::map<Rational, std::size_t> histogram;
  Rational ave_chi2;
  Rational max_chi2;
  Rational ave_f;
  Rational max_f;
  Rational e_d2;
  Rational max_d2;
  Rational max_projected_a2;
  std::optional<Rational> e_s2;  // two-level designs only
  std::vector<double> gwlp;      // empty unless requested

  std::size_t pair_count() const { return columns * (columns - 1) / 2; }
};

// All pairwise aggregates. Requires m >= 2. Balance is not checked; the
// expected counts N / (s_i s_j) are used as is.
// `gwlp_jmax` > 0 also fills gwlp, lowering jmax until the budget fits.
CriteriaReport aggregate_stats(const Design& d, int gwlp_jmax = 0,
                               const GwlpOptions& gwlp_options = {});

// N^2 A2 / C(m, 2) for balanced two-level designs; throws kNotTwoLevel.
Rational e_s2(const Design& d);

// Frequencies of the nonzero projected A2 values.
std::map<Rational, std::size_t> nonzero_histogram(const CriteriaReport& r);

}  // namespace ssd

#endif  // SSD_CRITERIA_HPP_
