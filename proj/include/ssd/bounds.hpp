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

#ifndef SSD_BOUNDS_HPP_
#define SSD_BOUNDS_HPP_

#include <cstdint>
#include <optional>
#include <span>

#include "ssd/design.hpp"
#include "ssd/rational.hpp"

namespace ssd {

// Fractional part of m (N - s) / ((N - 1) s), i.e. of K1. Lies in [0, 1).
Rational eta(std::int64_t runs, std::int64_t columns, std::int64_t levels);

// m (s-1)(ms - m - N + 1) / (2 (N-1)).
Rational lb_lemma2(std::int64_t runs, std::int64_t columns,
                   std::int64_t levels);

// lb_lemma2 + (N-1) s^2 eta (1 - eta) / (2N). Achieved exactly when run
// coincidences differ by at most one.
Rational lb_theorem1(std::int64_t runs, std::int64_t columns,
                     std::int64_t levels);

// (sum s_k - m)(sum s_k - m - N + 1) / (2 (N-1)) for any level profile.
Rational lb_theorem10(std::int64_t runs,
                      std::span<const std::uint32_t> levels);

struct Es2Bound {
  Rational value;
  bool supersaturated = false;  // false when m <= N - 1; value is then 0
};

// N^2 (m - N + 1) / ((m - 1)(N - 1)) for two-level designs.
Es2Bound lb_es2(std::int64_t runs, std::int64_t columns);

struct BoundReport {
  Rational a2;
  // Equal-level designs only.
  std::optional<Rational> theorem1_raw;
  std::optional<Rational> theorem1;  // max(raw, 0)
  std::optional<Rational> lemma2;
  Rational theorem10;
  // Two-level designs only.
  std::optional<Rational> eq1_es2;
  std::optional<Rational> e_s2;

  bool achieved_theorem1 = false;
  bool achieved_lemma2 = false;
  bool achieved_theorem10 = false;
  bool achieved_es2 = false;
  std::int64_t coincidence_spread = 0;
};

// Exact comparison of A2 against every applicable bound. Requires a balanced
// design (kUnbalancedDesign otherwise).
BoundReport certify(const Design& d);

}  // namespace ssd

#endif  // SSD_BOUNDS_HPP_
