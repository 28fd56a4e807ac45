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

#include "ssd/design.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "ssd/error.hpp"

namespace ssd {

Design::Design(std::size_t runs, std::vector<Column> columns)
    : runs_(runs), columns_(std::move(columns)) {
  if (runs_ > kMaxRuns || columns_.size() > kMaxColumns) {
    throw Error(ErrorCode::kTooLarge,
                "design exceeds " + std::to_string(kMaxRuns) + " runs or " +
                    std::to_string(kMaxColumns) + " columns");
  }
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    const Column& c = columns_[j];
    if (c.levels == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "column " + std::to_string(j + 1) + " has no levels");
    }
    if (c.symbols.size() != runs_) {
      throw Error(ErrorCode::kShapeMismatch,
                  "column " + std::to_string(j + 1) + " has " +
                      std::to_string(c.symbols.size()) + " symbols, expected " +
                      std::to_string(runs_));
    }
    if (runs_ % c.levels != 0) {
      throw Error(ErrorCode::kShapeMismatch,
                  "run size " + std::to_string(runs_) +
                      " is not divisible by level count " +
                      std::to_string(c.levels));
    }
    for (Symbol v : c.symbols) {
      if (v >= c.levels) {
        throw Error(ErrorCode::kInvalidArgument,
                    "symbol " + std::to_string(v) + " out of range in column " +
                        std::to_string(j + 1));
      }
    }
  }
}

std::vector<std::uint32_t> Design::level_profile() const {
  std::vector<std::uint32_t> out;
  out.reserve(columns_.size());
  for (const Column& c : columns_) out.push_back(c.levels);
  return out;
}

bool Design::column_balanced(std::size_t j) const {
  const Column& c = columns_.at(j);
  std::vector<std::size_t> counts(c.levels, 0);
  for (Symbol v : c.symbols) ++counts[v];
  const std::size_t expected = runs_ / c.levels;
  return std::all_of(counts.begin(), counts.end(),
                     [&](std::size_t n) { return n == expected; });
}

bool Design::is_balanced() const {
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (!column_balanced(j)) return false;
  }
  return true;
}

std::uint32_t Design::uniform_levels() const {
  if (columns_.empty()) return 0;
  const std::uint32_t s = columns_.front().levels;
  for (const Column& c : columns_) {
    if (c.levels != s) return 0;
  }
  return s;
}

Design Design::select_columns(std::span<const std::size_t> keep) const {
  std::vector<Column> cols;
  cols.reserve(keep.size());
  for (std::size_t j : keep) {
    if (j >= columns_.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "column index " + std::to_string(j + 1) + " out of range");
    }
    cols.push_back(columns_[j]);
  }
  return Design(runs_, std::move(cols));
}

Design Design::drop_columns(std::span<const std::size_t> drop) const {
  std::set<std::size_t> dropped(drop.begin(), drop.end());
  for (std::size_t j : dropped) {
    if (j >= columns_.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "column index " + std::to_string(j + 1) + " out of range");
    }
  }
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (!dropped.contains(j)) keep.push_back(j);
  }
  return select_columns(keep);
}

bool operator==(const Design& a, const Design& b) {
  if (a.runs_ != b.runs_ || a.columns_.size() != b.columns_.size()) {
    return false;
  }
  for (std::size_t j = 0; j < a.columns_.size(); ++j) {
    if (a.columns_[j].levels != b.columns_[j].levels ||
        a.columns_[j].symbols != b.columns_[j].symbols) {
      return false;
    }
  }
  return true;
}

Design realize(const Field& field, int n, std::span<const ColumnLabel> labels) {
  if (labels.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no labels to realize");
  }
  const auto points = field.points(n);
  std::vector<Column> cols;
  cols.reserve(labels.size());
  for (const ColumnLabel& label : labels) {
    if (label.arity() != n) {
      throw Error(ErrorCode::kShapeMismatch,
                  "label arity differs from the point dimension");
    }
    Column c;
    c.levels = field.order();
    c.provenance = format_label(field, label);
    c.symbols.reserve(points.size());
    for (const auto& pt : points) c.symbols.push_back(evaluate(field, label, pt));
    cols.push_back(std::move(c));
  }
  return Design(points.size(), std::move(cols));
}

Design column_juxtapose(std::span<const Design> parts) {
  if (parts.empty()) return Design();
  std::vector<Column> cols;
  for (const Design& d : parts) {
    if (d.runs() != parts.front().runs()) {
      throw Error(ErrorCode::kShapeMismatch,
                  "column juxtaposition needs equal run sizes");
    }
    cols.insert(cols.end(), d.columns().begin(), d.columns().end());
  }
  return Design(parts.front().runs(), std::move(cols));
}

Design row_juxtapose(std::span<const Design> parts) {
  if (parts.empty()) return Design();
  const Design& first = parts.front();
  std::vector<Column> cols = first.columns();
  std::size_t runs = first.runs();
  for (std::size_t p = 1; p < parts.size(); ++p) {
    const Design& d = parts[p];
    if (d.level_profile() != first.level_profile()) {
      throw Error(ErrorCode::kShapeMismatch,
                  "row juxtaposition needs identical level profiles");
    }
    for (std::size_t j = 0; j < cols.size(); ++j) {
      cols[j].symbols.insert(cols[j].symbols.end(),
                             d.column(j).symbols.begin(),
                             d.column(j).symbols.end());
    }
    runs += d.runs();
  }
  return Design(runs, std::move(cols));
}

Design branch_design(const Design& d, std::size_t branch,
                     std::span<const Symbol> subset) {
  if (branch >= d.size()) {
    throw Error(ErrorCode::kInvalidArgument, "branch column out of range");
  }
  if (subset.empty()) {
    throw Error(ErrorCode::kEmptyFraction, "no fractions selected");
  }
  std::vector<Symbol> groups(subset.begin(), subset.end());
  std::sort(groups.begin(), groups.end());
  if (std::adjacent_find(groups.begin(), groups.end()) != groups.end()) {
    throw Error(ErrorCode::kInvalidArgument, "repeated fraction level");
  }
  const std::uint32_t s = d.levels(branch);
  if (groups.back() >= s) {
    throw Error(ErrorCode::kInvalidArgument, "fraction level out of range");
  }
  if (groups.size() >= s) {
    throw Error(ErrorCode::kBadFractionCount,
                "selecting all " + std::to_string(s) +
                    " fractions is not a proper fraction");
  }
  std::vector<std::size_t> rows;
  for (Symbol g : groups) {
    for (std::size_t r = 0; r < d.runs(); ++r) {
      if (d.at(r, branch) == g) rows.push_back(r);
    }
  }
  std::vector<Column> cols;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j == branch) continue;
    Column c;
    c.levels = d.levels(j);
    c.provenance = d.column(j).provenance;
    c.symbols.reserve(rows.size());
    for (std::size_t r : rows) c.symbols.push_back(d.at(r, j));
    cols.push_back(std::move(c));
  }
  return Design(rows.size(), std::move(cols));
}

Design branch_fraction(const Field& field, int n,
                       std::span<const ColumnLabel> labels,
                       const ColumnLabel& branch_label,
                       std::span<const Symbol> subset) {
  auto it = std::find(labels.begin(), labels.end(), branch_label);
  if (it == labels.end()) {
    throw Error(ErrorCode::kNotAColumn, format_label(field, branch_label) +
                                            " is not one of the labels");
  }
  const Design full = realize(field, n, labels);
  Design out = branch_design(full, static_cast<std::size_t>(it - labels.begin()),
                             subset);
  if (!out.is_balanced()) {
    throw Error(ErrorCode::kUnbalancedDesign,
                "branched fraction has an unbalanced column");
  }
  return out;
}

Design replace_column(const Design& d, std::size_t col, const Design& table) {
  if (col >= d.size()) {
    throw Error(ErrorCode::kInvalidArgument, "replaced column out of range");
  }
  if (table.runs() != d.levels(col)) {
    throw Error(ErrorCode::kShapeMismatch,
                "replacement table needs " + std::to_string(d.levels(col)) +
                    " rows, has " + std::to_string(table.runs()));
  }
  if (table.size() == 0) {
    throw Error(ErrorCode::kShapeMismatch, "replacement table has no columns");
  }
  if (!table.is_balanced()) {
    throw Error(ErrorCode::kUnbalancedTable,
                "replacement table columns must be balanced");
  }
  std::vector<Column> cols;
  cols.reserve(d.size() + table.size() - 1);
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j != col) {
      cols.push_back(d.column(j));
      continue;
    }
    for (std::size_t t = 0; t < table.size(); ++t) {
      Column c;
      c.levels = table.levels(t);
      c.provenance = d.column(j).provenance + "[" + std::to_string(t + 1) + "]";
      c.symbols.reserve(d.runs());
      for (std::size_t r = 0; r < d.runs(); ++r) {
        c.symbols.push_back(table.at(d.at(r, j), t));
      }
      cols.push_back(std::move(c));
    }
  }
  return Design(d.runs(), std::move(cols));
}

bool is_oa(const Design& d, int t) {
  if (t <= 0) return true;
  const std::size_t m = d.size();
  if (static_cast<std::size_t>(t) > m) return false;
  std::vector<std::size_t> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = static_cast<std::size_t>(i);
  std::vector<std::size_t> counts;
  while (true) {
    std::size_t cells = 1;
    for (std::size_t j : idx) {
      cells *= d.levels(j);
      if (cells > d.runs()) return false;
    }
    if (d.runs() % cells != 0) return false;
    counts.assign(cells, 0);
    for (std::size_t r = 0; r < d.runs(); ++r) {
      std::size_t cell = 0;
      for (std::size_t j : idx) cell = cell * d.levels(j) + d.at(r, j);
      ++counts[cell];
    }
    const std::size_t expected = d.runs() / cells;
    for (std::size_t c : counts) {
      if (c != expected) return false;
    }
    // Next t-subset in lexicographic order.
    int i = t - 1;
    while (i >= 0 && idx[i] == m - static_cast<std::size_t>(t - i)) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int k = i + 1; k < t; ++k) idx[k] = idx[k - 1] + 1;
  }
}

int strength(const Design& d) {
  int t = 0;
  while (static_cast<std::size_t>(t) < d.size() && is_oa(d, t + 1)) ++t;
  return t;
}

std::int64_t CoincidenceMatrix::spread() const {
  if (runs < 2) return 0;
  std::int64_t lo = values[1];
  std::int64_t hi = values[1];
  for (std::size_t i = 0; i < runs; ++i) {
    for (std::size_t j = i + 1; j < runs; ++j) {
      lo = std::min(lo, values[i * runs + j]);
      hi = std::max(hi, values[i * runs + j]);
    }
  }
  return hi - lo;
}

namespace {

CoincidenceMatrix count_coincidences(const Design& d, bool weighted) {
  const std::size_t n = d.runs();
  CoincidenceMatrix out;
  out.runs = n;
  out.values.assign(n * n, 0);
  for (const Column& c : d.columns()) {
    const std::int64_t w = weighted ? c.levels : 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (c.symbols[i] == c.symbols[j]) out.values[i * n + j] += w;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.values[j * n + i] = out.values[i * n + j];
    }
  }
  return out;
}

}  // namespace

CoincidenceMatrix coincidences(const Design& d) {
  return count_coincidences(d, false);
}

CoincidenceMatrix weighted_coincidences(const Design& d) {
  return count_coincidences(d, true);
}

std::vector<std::int64_t> cell_counts(const Design& d, std::size_t i,
                                      std::size_t j) {
  const Column& a = d.column(i);
  const Column& b = d.column(j);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(a.levels) * b.levels,
                                   0);
  for (std::size_t r = 0; r < d.runs(); ++r) {
    ++counts[a.symbols[r] * b.levels + b.symbols[r]];
  }
  return counts;
}

PairClass classify_pair(const Design& d, std::size_t i, std::size_t j) {
  const auto counts = cell_counts(d, i, j);
  const std::int64_t n = static_cast<std::int64_t>(d.runs());
  const std::int64_t si = d.levels(i);
  const std::int64_t sj = d.levels(j);
  std::int64_t sum_sq = 0;
  for (std::int64_t c : counts) sum_sq += c * c;
  PairClass out;
  out.projected_a2 = make_rational(si * sj * sum_sq - n * n, n * n);

  if (si != sj) {
    out.kind = out.projected_a2 == 0 ? PairKind::kOrthogonal : PairKind::kPartial;
    return out;
  }
  const std::int64_t s = si;
  std::map<std::int64_t, std::int64_t> multiplicity;  // count -> cells
  for (std::int64_t c : counts) {
    if (c != 0) ++multiplicity[c];
  }
  auto has = [&](std::initializer_list<std::pair<std::int64_t, std::int64_t>>
                     expected) {
    if (multiplicity.size() != expected.size()) return false;
    for (auto [count, cells] : expected) {
      auto it = multiplicity.find(count);
      if (it == multiplicity.end() || it->second != cells) return false;
    }
    return true;
  };
  if (has({{n / s, s}}) && n % s == 0) {
    out.kind = PairKind::kFullyAliased;
  } else if (n % (s * s) == 0 && has({{n / (s * s), s * s}})) {
    out.kind = PairKind::kOrthogonal;
  } else if (n % (s * s) == 0 && s % 2 == 1 && s > 1 &&
             has({{n / (s * s), s}, {2 * n / (s * s), s * (s - 1) / 2}})) {
    out.kind = PairKind::kSemiOrthogonal;
  } else if ((2 * n) % (s * s) == 0 && s % 2 == 0 &&
             has({{2 * n / (s * s), s * s / 2}})) {
    out.kind = PairKind::kSemiOrthogonal;
  } else {
    out.kind = out.projected_a2 == 0 ? PairKind::kOrthogonal : PairKind::kPartial;
  }
  return out;
}

bool fully_aliased(const Design& d, std::size_t i, std::size_t j) {
  if (d.levels(i) != d.levels(j)) return false;
  const std::uint32_t s = d.levels(i);
  std::vector<std::int64_t> forward(s, -1);
  std::vector<std::int64_t> backward(s, -1);
  for (std::size_t r = 0; r < d.runs(); ++r) {
    const Symbol a = d.at(r, i);
    const Symbol b = d.at(r, j);
    if (forward[a] == -1 && backward[b] == -1) {
      forward[a] = b;
      backward[b] = a;
    } else if (forward[a] != static_cast<std::int64_t>(b) ||
               backward[b] != static_cast<std::int64_t>(a)) {
      return false;
    }
  }
  return true;
}

Design remove_fully_aliased(const Design& d) {
  // Relabel each column by first occurrence; aliased columns then coincide.
  std::set<std::pair<std::uint32_t, std::vector<Symbol>>> seen;
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < d.size(); ++j) {
    const Column& c = d.column(j);
    std::vector<std::int64_t> relabel(c.levels, -1);
    std::vector<Symbol> canon;
    canon.reserve(c.symbols.size());
    Symbol next = 0;
    for (Symbol v : c.symbols) {
      if (relabel[v] < 0) relabel[v] = next++;
      canon.push_back(static_cast<Symbol>(relabel[v]));
    }
    if (seen.emplace(c.levels, std::move(canon)).second) keep.push_back(j);
  }
  return d.select_columns(keep);
}

void write_design(std::ostream& out, const Design& d) {
  out << "# ssd v1\n" << d.runs() << ' ' << d.size() << '\n';
  for (std::size_t j = 0; j < d.size(); ++j) {
    out << (j ? " " : "") << d.levels(j);
  }
  out << '\n';
  for (std::size_t r = 0; r < d.runs(); ++r) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      out << (j ? " " : "") << d.at(r, j);
    }
    out << '\n';
  }
}

Design read_design(std::istream& in, bool allow_unbalanced) {
  std::string header;
  if (!std::getline(in, header)) {
    throw Error(ErrorCode::kParseError, "empty design file");
  }
  if (!header.empty() && header.back() == '\r') header.pop_back();
  if (header != "# ssd v1") {
    throw Error(ErrorCode::kParseError, "missing '# ssd v1' header");
  }
  auto read_number = [&](const char* what) {
    long long value = 0;
    if (!(in >> value) || value < 0) {
      throw Error(ErrorCode::kParseError, std::string("could not read ") + what);
    }
    return static_cast<std::uint64_t>(value);
  };
  const std::uint64_t runs = read_number("run count");
  const std::uint64_t m = read_number("column count");
  if (runs > Design::kMaxRuns || m > Design::kMaxColumns) {
    throw Error(ErrorCode::kTooLarge, "design dimensions exceed limits");
  }
  std::vector<Column> cols(m);
  for (auto& c : cols) {
    c.levels = static_cast<std::uint32_t>(read_number("level count"));
    c.symbols.resize(runs);
  }
  for (std::uint64_t r = 0; r < runs; ++r) {
    for (auto& c : cols) {
      c.symbols[r] = static_cast<Symbol>(read_number("symbol"));
    }
  }
  std::string rest;
  if (in >> rest) {
    throw Error(ErrorCode::kParseError, "unexpected trailing data: " + rest);
  }
  Design d(runs, std::move(cols));
  if (!allow_unbalanced) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (!d.column_balanced(j)) {
        throw Error(ErrorCode::kUnbalancedDesign,
                    "column " + std::to_string(j + 1) + " is unbalanced");
      }
    }
  }
  return d;
}

Design load_design(const std::string& path, bool allow_unbalanced) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  return read_design(in, allow_unbalanced);
}

void save_design(const std::string& path, const Design& d) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  write_design(out, d);
}

}  // namespace ssd
