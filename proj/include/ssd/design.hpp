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

#ifndef SSD_DESIGN_HPP_
#define SSD_DESIGN_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ssd/gf.hpp"
#include "ssd/poly_labels.hpp"
#include "ssd/rational.hpp"

namespace ssd {

using Symbol = std::uint32_t;

struct Column {
  std::uint32_t levels = 0;
  std::vector<Symbol> symbols;
  std::string provenance;  // label text or construction tag; may be empty
};

// An N x m symbol matrix stored column-major. Every symbol is below its
// column's level count and N is divisible by every level count. Balance is
// not enforced here (fractions and intermediate tables need not be
// balanced); the criteria check it where it matters.
class Design {
 public:
  static constexpr std::size_t kMaxRuns = 4096;
  static constexpr std::size_t kMaxColumns = 4096;

  Design() = default;
  Design(std::size_t runs, std::vector<Column> columns);

  std::size_t runs() const { return runs_; }
  std::size_t size() const { return columns_.size(); }
  const Column& column(std::size_t j) const { return columns_.at(j); }
  const std::vector<Column>& columns() const { return columns_; }
  std::uint32_t levels(std::size_t j) const { return columns_[j].levels; }
  std::vector<std::uint32_t> level_profile() const;
  Symbol at(std::size_t row, std::size_t col) const {
    return columns_[col].symbols[row];
  }

  bool column_balanced(std::size_t j) const;
  bool is_balanced() const;
  // Common level count, or 0 for mixed-level designs and empty designs.
  std::uint32_t uniform_levels() const;

  // Subdesign with the given columns, in the given order.
  Design select_columns(std::span<const std::size_t> keep) const;
  Design drop_columns(std::span<const std::size_t> drop) const;

  friend bool operator==(const Design& a, const Design& b);

 private:
  std::size_t runs_ = 0;
  std::vector<Column> columns_;
};

// Evaluates each label at every point of F_s^n (lexicographic point order).
Design realize(const Field& field, int n, std::span<const ColumnLabel> labels);

Design column_juxtapose(std::span<const Design> parts);
Design row_juxtapose(std::span<const Design> parts);

// Keeps the runs whose value in `branch` lies in `subset`, grouped by subset
// value in ascending order and in original order within a group, then drops
// the branch column. Throws kEmptyFraction / kBadFractionCount for an empty
// subset or one that covers every level.
Design branch_design(const Design& d, std::size_t branch,
                     std::span<const Symbol> subset);

// realize(labels) followed by branch_design on the column of `branch_label`.
Design branch_fraction(const Field& field, int n,
                       std::span<const ColumnLabel> labels,
                       const ColumnLabel& branch_label,
                       std::span<const Symbol> subset);

// Replaces column `col` (levels s_old) by the t columns of `table`, which must
// have s_old runs: a run holding symbol v receives row v of the table. The new
// columns take the place of the old one.
Design replace_column(const Design& d, std::size_t col, const Design& table);

// Largest t such that every t-column projection is equireplicated.
int strength(const Design& d);
bool is_oa(const Design& d, int t);

// Symmetric N x N matrix, row-major, zero diagonal.
struct CoincidenceMatrix {
  std::size_t runs = 0;
  std::vector<std::int64_t> values;

  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return values[i * runs + j];
  }
  // max - min over i < j; 0 when N < 2.
  std::int64_t spread() const;
};

// Number of columns in which runs i and j agree.
CoincidenceMatrix coincidences(const Design& d);
// Same, each agreement weighted by that column's level count.
CoincidenceMatrix weighted_coincidences(const Design& d);

// Cell counts n_ab for columns (i, j), row-major s_i x s_j.
std::vector<std::int64_t> cell_counts(const Design& d, std::size_t i,
                                      std::size_t j);

enum class PairKind { kOrthogonal, kFullyAliased, kSemiOrthogonal, kPartial };

struct PairClass {
  PairKind kind = PairKind::kPartial;
  Rational projected_a2;
};

// Mixed-level pairs are always reported as kPartial (or kOrthogonal when the
// projected A2 vanishes).
PairClass classify_pair(const Design& d, std::size_t i, std::size_t j);

// Two equal-level columns are fully aliased when one is a level permutation of
// the other.
bool fully_aliased(const Design& d, std::size_t i, std::size_t j);

// Drops every column that is fully aliased with an earlier kept column.
Design remove_fully_aliased(const Design& d);

// Text format:
//   # ssd v1
//   N m
//   s_1 ... s_m
//   N rows of m symbols
void write_design(std::ostream& out, const Design& d);
Design read_design(std::istream& in, bool allow_unbalanced = false);
Design load_design(const std::string& path, bool allow_unbalanced = false);
void save_design(const std::string& path, const Design& d);

}  // namespace ssd

#endif  // SSD_DESIGN_HPP_
