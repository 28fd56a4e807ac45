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

#ifndef SSD_CONSTRUCTIONS_HPP_
#define SSD_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ssd/design.hpp"
#include "ssd/gf.hpp"
#include "ssd/poly_labels.hpp"
#include "ssd/rational.hpp"

namespace ssd {

// H(X1..Xn) juxtaposed with Q1*(X1..Xn): the half Addelman-Kempthorne SSD.
Design construct_thm4(const Field& field, int n);

// Juxtaposition of Q_h over k distinct members of H. An empty `hs` takes the
// first k members of H. Throws kDuplicateH and kInvalidArgument (k range).
Design construct_thm6(const Field& field, int n, int k,
                      std::span<const LinearForm> hs = {});
inline Design construct_thm5(const Field& field, int n, const LinearForm& h1,
                             const LinearForm& h2) {
  const LinearForm hs[] = {h1, h2};
  return construct_thm6(field, n, 2, hs);
}

// Juxtaposition of Q_h* over k distinct members of H; s must be odd (kEvenS).
Design construct_thm7(const Field& field, int n, int k,
                      std::span<const LinearForm> hs = {});

// True when Theorem 7's design is GMA-optimal for this k.
bool thm7_is_optimal(const Field& field, int n, int k);

// k fractions of H(X1..Xn) branched on `branch_h` (default X1) over `subset`
// (default {0..k-1}). Requires 1 <= k < s (kBadFractionCount).
Design construct_thm8(const Field& field, int n, int k,
                      const std::optional<LinearForm>& branch_h = std::nullopt,
                      std::span<const Element> subset = {});

// k fractions of Q1(X1..Xn) branched on X1^2 + X2.
Design construct_thm9(const Field& field, int n, int k,
                      std::span<const Element> subset = {});

// Q1(X1, X2, X3) branched on any of its columns over `subset` (default
// {0, 1}). Throws kNotAColumn when the label is not in Q1.
Design construct_example3(const Field& field, const ColumnLabel& branch_label,
                          std::span<const Element> subset = {});

// Theorem 6 with every member of H, then one column of each fully aliased
// pair removed (needed for s = 4).
Design construct_dealiased(const Field& field, int n);

// Theorem 6 with n = 2 over GF(q^2), then the first `replaced` columns each
// replaced by H(X1, X2) over GF(q), a saturated OA(q^2, q + 1, q, 2). Throws
// kInvalidArgument unless the field order is a perfect square.
Design construct_replaced(const Field& field, int k, std::size_t replaced);

struct Corollary2Check {
  Design design;
  Rational a2;
  // Per column: how many other columns it is orthogonal to and how many it is
  // partially aliased with at (s-1)^2/s^2.
  std::vector<std::size_t> orthogonal_degree;
  std::vector<std::size_t> partial_degree;
  bool degrees_match = false;  // s-1 and s^2 for every column
  bool matches_corollary_formula = false;  // a2 == (s+1)s(s-1)^2/2
  bool matches_thm7_formula = false;       // a2 == C(s+1,2)(s^2-2s+1)
};

// Q_h* over every h in H(X1, X2), s odd (kEvenS).
Corollary2Check corollary2_check(const Field& field);

enum class Theorem {
  kThm4,
  kThm5,
  kThm6,
  kThm7,
  kThm8,
  kThm9,
  kExample3,
  kDealias,
  kCorollary2,
  kReplace,
};

std::string to_string(Theorem t);
// Accepts "4".."9", "5", "example3", "s4-dealias", "cor2", "replace".
Theorem parse_theorem(const std::string& text);

struct Recipe {
  Theorem theorem = Theorem::kThm4;
  std::uint32_t s = 3;
  int n = 2;
  int k = 0;
  std::vector<LinearForm> hs;
  std::optional<ColumnLabel> branch;
  std::vector<Element> subset;
  std::size_t replaced = 0;
  std::optional<Polynomial> modulus;
};

Design build(const Recipe& recipe);
Design build(const Recipe& recipe, const Field& field);
std::string describe(const Recipe& recipe);

struct CatalogRow {
  std::string table;   // "Table 1"
  std::string source;  // as printed, e.g. "Theorem 9, n = 3, k = 2"
  Recipe recipe;
  std::size_t runs = 0;
  std::size_t columns = 0;
  // Printed frequencies of the nonzero projected A2 values.
  std::map<Rational, std::size_t> expected;

  std::string id() const;  // "Table 1 row 18/12 (Theorem 9, n = 3, k = 2)"
  Rational expected_a2() const;
};

// Every row of the three projected-A2 frequency tables (12 + 9 + 10).
std::vector<CatalogRow> catalog();

struct CatalogOptions {
  // Alternate moduli by field order; rows over other orders use defaults.
  std::map<std::uint32_t, Polynomial> moduli;
  // Also check character-route projected A2 and A_2 against the exact values.
  bool dual_route = false;
  // Restrict to rows whose table name matches, when non-empty.
  std::string table_filter;
};

struct CatalogRowResult {
  std::string id;
  bool ok = false;
  std::vector<std::string> failures;
  std::size_t runs = 0;
  std::size_t columns = 0;
  Rational a2;
  std::map<Rational, std::size_t> histogram;  // nonzero values
  bool achieved_theorem1 = false;
  std::int64_t coincidence_spread = 0;
  double seconds = 0;
};

struct CatalogReport {
  std::vector<CatalogRowResult> rows;
  bool ok() const;
};

// Builds every catalog row and checks m, N, the nonzero histogram, A2, the
// theorem-1 certificate and its coincidence iff, and the absence of fully
// aliased pairs.
CatalogReport catalog_verify(const CatalogOptions& options = {});

}  // namespace ssd

#endif  // SSD_CONSTRUCTIONS_HPP_
