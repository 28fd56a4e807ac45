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

#ifndef SSD_ORACLE_HPP_
#define SSD_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ssd/design.hpp"
#include "ssd/rational.hpp"

// Brute-force checks that share no code with the criteria module beyond the
// Design type. They are slow on purpose and only meant for small instances.
namespace ssd::oracle {

// n_ab: how often the pair (a, b) appears in columns (i, j). Row-major
// s_i x s_j, computed by direct enumeration of the level grid.
std::vector<std::vector<std::int64_t>> pair_table(const Design& d,
                                                  std::size_t i,
                                                  std::size_t j);

// chi^2 / N built literally from pair_table and the chi^2 definition.
Rational projected_a2_from_table(const Design& d, std::size_t i,
                                 std::size_t j);

struct SearchOptions {
  std::uint64_t budget = 100'000'000;  // candidate-column evaluations
  // Stop as soon as a design meets this value (a proven lower bound). The
  // result is still exact because nothing can beat a lower bound.
  std::optional<Rational> stop_at;
};

struct SearchResult {
  Rational best_a2;
  Design certificate;
  bool exhaustive = false;       // best_a2 is the proven minimum
  bool stopped_at_bound = false;  // proven via SearchOptions::stop_at
  std::uint64_t evaluations = 0;
};

// Minimum A2 over all balanced SSD(N, s^m), fully aliased columns allowed.
// Columns are enumerated up to level relabeling, the first column is fixed to
// 0..0 1..1 ..., and the rest are taken in nondecreasing order. Throws
// kBudgetExceeded when the budget runs out before any design is found;
// otherwise a partial result has exhaustive == false.
SearchResult exhaustive_min_a2(std::size_t runs, std::uint32_t levels,
                               std::size_t columns,
                               const SearchOptions& options = {});

// A_j from explicit orthonormal contrasts (Gram-Schmidt on level indicators).
// Limited to N <= 32 and m <= 8 (kTooLarge).
double gwlp_bruteforce(const Design& d, int j);

struct PeriodicityRow {
  std::size_t m = 0;
  Rational a2_m;
  Rational a2_m_plus_t;
  bool exact = false;  // both minima proven
  bool holds = false;  // a2(m + t) == a2(m) + m (s - 1)
};

// Reports a2(m + t) - a2(m) against m (s - 1) for each m in [m_lo, m_hi].
std::vector<PeriodicityRow> periodicity_spot_check(
    std::size_t runs, std::uint32_t levels, std::size_t t, std::size_t m_lo,
    std::size_t m_hi, const SearchOptions& options = {});

}  // namespace ssd::oracle

#endif  // SSD_ORACLE_HPP_
