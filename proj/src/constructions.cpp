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

#include "ssd/constructions.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "ssd/bounds.hpp"
#include "ssd/criteria.hpp"
#include "ssd/error.hpp"

namespace ssd {
namespace {

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// (s^n - 1) / (s - 1), the size of H.
std::int64_t h_count(const Field& field, int n) {
  const std::int64_t s = field.order();
  return (ipow(s, n) - 1) / (s - 1);
}

void require_dimension(int n) {
  if (n < 2) {
    throw Error(ErrorCode::kDimensionTooSmall, "construction needs n >= 2");
  }
}

std::vector<ColumnLabel> as_labels(const std::vector<LinearForm>& forms) {
  return {forms.begin(), forms.end()};
}

// Validates or defaults the h-list of Theorems 6 and 7.
std::vector<LinearForm> choose_hs(const Field& field, int n, int k,
                                  std::span<const LinearForm> hs) {
  const std::int64_t total = h_count(field, n);
  if (k < 2 || k > total) {
    throw Error(ErrorCode::kInvalidArgument,
                "k must satisfy 1 < k <= " + std::to_string(total) +
                    ", got " + std::to_string(k));
  }
  if (hs.empty()) {
    auto all = h_set(field, n);
    all.resize(static_cast<std::size_t>(k));
    return all;
  }
  if (hs.size() != static_cast<std::size_t>(k)) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(k) + " members of H, got " +
                    std::to_string(hs.size()));
  }
  std::set<LinearForm> seen;
  for (const LinearForm& h : hs) {
    if (h.arity() != n) {
      throw Error(ErrorCode::kShapeMismatch, "h has the wrong number of variables");
    }
    if (!h.is_canonical()) {
      throw Error(ErrorCode::kNotCanonical, format_form(h) + " is not in H");
    }
    if (!seen.insert(h).second) {
      throw Error(ErrorCode::kDuplicateH, format_form(h) + " appears twice");
    }
  }
  return {hs.begin(), hs.end()};
}

std::vector<Element> choose_subset(const Field& field, int k,
                                   std::span<const Element> subset) {
  if (k < 1 || static_cast<std::uint32_t>(k) >= field.order()) {
    throw Error(ErrorCode::kBadFractionCount,
                "k must satisfy 1 <= k < " + std::to_string(field.order()));
  }
  if (subset.empty()) {
    std::vector<Element> out(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) out[i] = static_cast<Element>(i);
    return out;
  }
  if (subset.size() != static_cast<std::size_t>(k)) {
    throw Error(ErrorCode::kBadFractionCount,
                "level subset has " + std::to_string(subset.size()) +
                    " members, expected " + std::to_string(k));
  }
  return {subset.begin(), subset.end()};
}

bool is_square(std::uint32_t order, std::uint32_t& root) {
  root = static_cast<std::uint32_t>(std::lround(std::sqrt(double(order))));
  return root * root == order;
}

}  // namespace

Design construct_thm4(const Field& field, int n) {
  require_dimension(n);
  auto labels = as_labels(h_set(field, n));
  auto quad = q1_star(field, n);
  labels.insert(labels.end(), quad.begin(), quad.end());
  return realize(field, n, labels);
}

Design construct_thm6(const Field& field, int n, int k,
                      std::span<const LinearForm> hs) {
  require_dimension(n);
  std::vector<ColumnLabel> labels;
  for (const LinearForm& h : choose_hs(field, n, k, hs)) {
    auto part = qh(field, h);
    labels.insert(labels.end(), part.begin(), part.end());
  }
  return realize(field, n, labels);
}

Design construct_thm7(const Field& field, int n, int k,
                      std::span<const LinearForm> hs) {
  require_dimension(n);
  if (field.characteristic() == 2) {
    throw Error(ErrorCode::kEvenS, "this construction needs odd s");
  }
  std::vector<ColumnLabel> labels;
  for (const LinearForm& h : choose_hs(field, n, k, hs)) {
    auto part = qh_star(field, h);
    labels.insert(labels.end(), part.begin(), part.end());
  }
  return realize(field, n, labels);
}

bool thm7_is_optimal(const Field& field, int n, int k) {
  const std::int64_t total = h_count(field, n);
  return k == total || k == total - 1;
}

Design construct_thm8(const Field& field, int n, int k,
                      const std::optional<LinearForm>& branch_h,
                      std::span<const Element> subset) {
  require_dimension(n);
  const auto groups = choose_subset(field, k, subset);
  const LinearForm branch = branch_h.value_or(variable(n, 0));
  if (branch.arity() != n || !branch.is_canonical()) {
    throw Error(ErrorCode::kNotAColumn,
                format_form(branch) + " is not a column of H");
  }
  return branch_fraction(field, n, as_labels(h_set(field, n)), branch, groups);
}

Design construct_thm9(const Field& field, int n, int k,
                      std::span<const Element> subset) {
  require_dimension(n);
  const auto groups = choose_subset(field, k, subset);
  const ColumnLabel branch =
      make_quadratic(field, variable(n, 0), variable(n, 1));
  return branch_fraction(field, n, q1(field, n), branch, groups);
}

Design construct_example3(const Field& field, const ColumnLabel& branch_label,
                          std::span<const Element> subset) {
  const Element fallback[] = {0, 1};
  std::span<const Element> groups = subset.empty() ? fallback : subset;
  if (branch_label.arity() != 3) {
    throw Error(ErrorCode::kNotAColumn, "branch label must use X1, X2, X3");
  }
  return branch_fraction(field, 3, q1(field, 3), branch_label, groups);
}

Design construct_dealiased(const Field& field, int n) {
  return remove_fully_aliased(
      construct_thm6(field, n, static_cast<int>(h_count(field, n))));
}

Design construct_replaced(const Field& field, int k, std::size_t replaced) {
  std::uint32_t q = 0;
  if (!is_square(field.order(), q)) {
    throw Error(ErrorCode::kInvalidArgument,
                "column replacement needs a square field order");
  }
  const Field small(q);
  const Design table = realize(small, 2, as_labels(h_set(small, 2)));
  Design d = construct_thm6(field, 2, k);
  if (replaced > d.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot replace " + std::to_string(replaced) + " of " +
                    std::to_string(d.size()) + " columns");
  }
  // Replacing column i shifts later columns by table.size() - 1.
  for (std::size_t i = 0; i < replaced; ++i) {
    d = replace_column(d, i * table.size(), table);
  }
  return d;
}

Corollary2Check corollary2_check(const Field& field) {
  if (field.characteristic() == 2) {
    throw Error(ErrorCode::kEvenS, "this construction needs odd s");
  }
  const std::int64_t s = field.order();
  Corollary2Check out;
  out.design = construct_thm7(field, 2, static_cast<int>(s + 1));
  const std::size_t m = out.design.size();
  out.orthogonal_degree.assign(m, 0);
  out.partial_degree.assign(m, 0);
  const Rational partial = make_rational((s - 1) * (s - 1), s * s);
  Rational total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Rational v = projected_a2(out.design, i, j);
      total += v;
      if (v == 0) {
        ++out.orthogonal_degree[i];
        ++out.orthogonal_degree[j];
      } else if (v == partial) {
        ++out.partial_degree[i];
        ++out.partial_degree[j];
      }
    }
  }
  out.a2 = total;
  out.degrees_match = true;
  for (std::size_t c = 0; c < m; ++c) {
    if (out.orthogonal_degree[c] != static_cast<std::size_t>(s - 1) ||
        out.partial_degree[c] != static_cast<std::size_t>(s * s)) {
      out.degrees_match = false;
    }
  }
  out.matches_corollary_formula =
      out.a2 == make_rational((s + 1) * s * (s - 1) * (s - 1), 2);
  out.matches_thm7_formula =
      out.a2 == make_rational((s + 1) * s / 2 * (s * s - 2 * s + 1));
  return out;
}

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::kThm4: return "4";
    case Theorem::kThm5: return "5";
    case Theorem::kThm6: return "6";
    case Theorem::kThm7: return "7";
    case Theorem::kThm8: return "8";
    case Theorem::kThm9: return "9";
    case Theorem::kExample3: return "example3";
    case Theorem::kDealias: return "s4-dealias";
    case Theorem::kCorollary2: return "cor2";
    case Theorem::kReplace: return "replace";
  }
  return "?";
}

Theorem parse_theorem(const std::string& text) {
  static const std::pair<const char*, Theorem> kNames[] = {
      {"4", Theorem::kThm4},         {"5", Theorem::kThm5},
      {"6", Theorem::kThm6},         {"7", Theorem::kThm7},
      {"8", Theorem::kThm8},         {"9", Theorem::kThm9},
      {"example3", Theorem::kExample3}, {"s4-dealias", Theorem::kDealias},
      {"dealias", Theorem::kDealias}, {"cor2", Theorem::kCorollary2},
      {"replace", Theorem::kReplace},
  };
  for (const auto& [name, t] : kNames) {
    if (text == name) return t;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown construction '" + text + "'");
}

Design build(const Recipe& recipe) {
  return build(recipe, Field(recipe.s, recipe.modulus));
}

Design build(const Recipe& r, const Field& field) {
  switch (r.theorem) {
    case Theorem::kThm4:
      return construct_thm4(field, r.n);
    case Theorem::kThm5:
      return construct_thm6(field, r.n, 2, r.hs);
    case Theorem::kThm6:
      return construct_thm6(field, r.n, r.k, r.hs);
    case Theorem::kThm7:
      return construct_thm7(field, r.n, r.k, r.hs);
    case Theorem::kThm8: {
      std::optional<LinearForm> branch;
      if (r.branch) {
        if (!r.branch->is_linear()) {
          throw Error(ErrorCode::kNotAColumn,
                      "the branching column must be a member of H");
        }
        branch = r.branch->linear();
      }
      return construct_thm8(field, r.n, r.k, branch, r.subset);
    }
    case Theorem::kThm9:
      return construct_thm9(field, r.n, r.k, r.subset);
    case Theorem::kExample3:
      return construct_example3(field, r.branch.value_or(variable(3, 0)),
                                r.subset);
    case Theorem::kDealias:
      return construct_dealiased(field, r.n);
    case Theorem::kCorollary2:
      return corollary2_check(field).design;
    case Theorem::kReplace:
      return construct_replaced(field, r.k, r.replaced);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown construction");
}

std::string describe(const Recipe& r) {
  std::ostringstream out;
  switch (r.theorem) {
    case Theorem::kExample3: out << "Example 3"; break;
    case Theorem::kDealias: out << "Theorem 6 de-aliased"; break;
    case Theorem::kCorollary2: out << "Corollary 2"; break;
    case Theorem::kReplace: out << "Theorem 6 with column replacement"; break;
    default: out << "Theorem " << to_string(r.theorem); break;
  }
  out << ", s = " << r.s;
  if (r.theorem != Theorem::kExample3 && r.theorem != Theorem::kCorollary2) {
    out << ", n = " << r.n;
  }
  switch (r.theorem) {
    case Theorem::kThm6:
    case Theorem::kThm7:
    case Theorem::kThm8:
    case Theorem::kThm9:
    case Theorem::kReplace:
      out << ", k = " << r.k;
      break;
    default:
      break;
  }
  if (r.theorem == Theorem::kReplace) out << ", replaced = " << r.replaced;
  return out.str();
}

std::string CatalogRow::id() const {
  return table + " row " + std::to_string(runs) + "/" +
         std::to_string(columns) + " (" + source + ")";
}

Rational CatalogRow::expected_a2() const {
  Rational total = 0;
  for (const auto& [value, count] : expected) {
    total += value * Rational(BigInt(count));
  }
  return total;
}

std::vector<CatalogRow> catalog() {
  struct Spec {
    const char* table;
    Theorem theorem;
    std::uint32_t s;
    int n;
    int k;
    std::size_t runs;
    std::size_t columns;
    std::vector<std::pair<std::pair<int, int>, std::size_t>> expected;
  };
  const std::vector<Spec> specs = {
      {"Table 1", Theorem::kThm8, 3, 2, 2, 6, 3, {{{1, 2}, 3}}},
      {"Table 1", Theorem::kThm4, 3, 2, 0, 9, 7, {{{2, 3}, 9}}},
      {"Table 1", Theorem::kThm7, 3, 2, 4, 9, 12, {{{4, 9}, 54}}},
      {"Table 1", Theorem::kThm6, 3, 2, 4, 9, 16, {{{4, 9}, 54}, {{2, 3}, 36}}},
      {"Table 1", Theorem::kThm8, 3, 3, 2, 18, 12, {{{1, 2}, 12}}},
      {"Table 1", Theorem::kThm9, 3, 3, 2, 18, 12, {{{1, 6}, 27}, {{1, 2}, 3}}},
      {"Table 1", Theorem::kThm4, 3, 3, 0, 27, 25, {{{2, 3}, 36}}},
      {"Table 1", Theorem::kThm6, 3, 3, 2, 27, 26,
       {{{2, 9}, 81}, {{4, 9}, 9}, {{2, 3}, 6}}},
      {"Table 1", Theorem::kThm7, 3, 3, 13, 27, 156,
       {{{2, 9}, 6318}, {{4, 9}, 702}}},
      {"Table 1", Theorem::kThm6, 3, 3, 13, 27, 169,
       {{{2, 9}, 6318}, {{4, 9}, 702}, {{2, 3}, 468}}},
      {"Table 1", Theorem::kThm8, 3, 4, 2, 54, 39, {{{1, 2}, 39}}},
      {"Table 1", Theorem::kThm9, 3, 4, 2, 54, 39, {{{1, 6}, 108}, {{1, 2}, 3}}},

      {"Table 2", Theorem::kThm8, 4, 2, 2, 8, 4, {{{1, 1}, 6}}},
      {"Table 2", Theorem::kThm8, 4, 2, 3, 12, 4, {{{1, 3}, 6}}},
      {"Table 2", Theorem::kThm4, 4, 2, 0, 16, 9, {{{1, 1}, 12}}},
      {"Table 2", Theorem::kDealias, 4, 2, 5, 16, 15, {{{1, 1}, 45}}},
      {"Table 2", Theorem::kThm8, 4, 3, 2, 32, 20, {{{1, 1}, 30}}},
      {"Table 2", Theorem::kThm8, 4, 3, 3, 48, 20, {{{1, 3}, 30}}},
      {"Table 2", Theorem::kThm9, 4, 3, 3, 48, 20, {{{1, 9}, 72}, {{1, 3}, 6}}},
      {"Table 2", Theorem::kThm4, 4, 3, 0, 64, 41, {{{1, 1}, 60}}},
      {"Table 2", Theorem::kDealias, 4, 3, 21, 64, 231, {{{1, 1}, 3465}}},

      {"Table 3", Theorem::kThm8, 5, 2, 2, 10, 5, {{{3, 2}, 10}}},
      {"Table 3", Theorem::kThm8, 5, 2, 3, 15, 5, {{{2, 3}, 10}}},
      {"Table 3", Theorem::kThm8, 5, 2, 4, 20, 5, {{{1, 4}, 10}}},
      {"Table 3", Theorem::kThm4, 5, 2, 0, 25, 11, {{{4, 5}, 25}}},
      {"Table 3", Theorem::kThm7, 5, 2, 6, 25, 30, {{{16, 25}, 375}}},
      {"Table 3", Theorem::kThm6, 5, 2, 6, 25, 36,
       {{{16, 25}, 375}, {{4, 5}, 150}}},
      {"Table 3", Theorem::kThm8, 5, 3, 2, 50, 30, {{{3, 2}, 60}}},
      {"Table 3", Theorem::kThm9, 5, 3, 2, 50, 30,
       {{{3, 10}, 250}, {{3, 2}, 10}}},
      {"Table 3", Theorem::kThm8, 5, 3, 3, 75, 30, {{{2, 3}, 60}}},
      {"Table 3", Theorem::kThm9, 5, 3, 3, 75, 30,
       {{{2, 15}, 250}, {{2, 3}, 10}}},
  };
  std::vector<CatalogRow> rows;
  rows.reserve(specs.size());
  for (const Spec& spec : specs) {
    CatalogRow row;
    row.table = spec.table;
    row.recipe.theorem = spec.theorem;
    row.recipe.s = spec.s;
    row.recipe.n = spec.n;
    row.recipe.k = spec.k;
    row.runs = spec.runs;
    row.columns = spec.columns;
    for (const auto& [value, count] : spec.expected) {
      row.expected[make_rational(value.first, value.second)] = count;
    }
    std::ostringstream source;
    source << "Theorem " << (spec.theorem == Theorem::kDealias
                                 ? std::string("6 de-aliased")
                                 : to_string(spec.theorem))
           << ", n = " << spec.n;
    if (spec.theorem != Theorem::kThm4) source << ", k = " << spec.k;
    row.source = source.str();
    rows.push_back(std::move(row));
  }
  return rows;
}

bool CatalogReport::ok() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const CatalogRowResult& r) { return r.ok; });
}

namespace {

CatalogRowResult verify_row(const CatalogRow& row,
                            const CatalogOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CatalogRowResult res;
  res.id = row.id();
  auto fail = [&](std::string message) {
    res.failures.push_back(std::move(message));
  };

  std::optional<Polynomial> modulus;
  if (auto it = options.moduli.find(row.recipe.s); it != options.moduli.end()) {
    modulus = it->second;
  }
  const Field field(row.recipe.s, modulus);
  const Design d = build(row.recipe, field);
  res.runs = d.runs();
  res.columns = d.size();
  if (d.runs() != row.runs || d.size() != row.columns) {
    fail("size " + std::to_string(d.runs()) + "x" + std::to_string(d.size()) +
         ", expected " + std::to_string(row.runs) + "x" +
         std::to_string(row.columns));
  }
  if (!d.is_balanced()) {
    fail("design is unbalanced");
    res.seconds = 0;
    return res;
  }

  const CriteriaReport report = aggregate_stats(d);
  res.a2 = report.a2;
  res.histogram = nonzero_histogram(report);
  if (res.histogram != row.expected) {
    std::ostringstream msg;
    msg << "histogram {";
    bool first = true;
    for (const auto& [v, c] : res.histogram) {
      msg << (first ? "" : ", ") << to_string(v) << ": " << c;
      first = false;
    }
    msg << "} differs from the printed one";
    fail(msg.str());
  }
  if (report.a2 != row.expected_a2()) {
    fail("A2 " + to_string(report.a2) + ", expected " +
         to_string(row.expected_a2()));
  }
  const Rational closed = a2_overall(d);
  if (closed != report.a2) {
    fail("closed-form A2 " + to_string(closed) + " differs from the pair sum " +
         to_string(report.a2));
  }

  const BoundReport bounds = certify(d);
  res.achieved_theorem1 = bounds.achieved_theorem1;
  res.coincidence_spread = bounds.coincidence_spread;
  const bool optional_optimum =
      row.recipe.theorem == Theorem::kThm7 &&
      !thm7_is_optimal(field, row.recipe.n, row.recipe.k);
  if (!bounds.achieved_theorem1 && !optional_optimum) {
    fail("A2 does not reach the Theorem 1 bound " +
         (bounds.theorem1 ? to_string(*bounds.theorem1) : std::string("-")));
  }
  if (bounds.theorem1_raw && *bounds.theorem1_raw >= 0 &&
      bounds.achieved_theorem1 != (bounds.coincidence_spread <= 1)) {
    fail("bound achievement disagrees with coincidence spread " +
         std::to_string(bounds.coincidence_spread));
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (fully_aliased(d, i, j)) {
        fail("columns " + std::to_string(i + 1) + " and " +
             std::to_string(j + 1) + " are fully aliased");
        i = d.size();
        break;
      }
    }
  }

  if (options.dual_route) {
    double worst = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        const double diff = std::abs(projected_a2_char(d, i, j, field) -
                                     to_double(projected_a2(d, i, j)));
        worst = std::max(worst, diff);
      }
    }
    if (worst > 1e-9) {
      fail("character-route projected A2 off by " + std::to_string(worst));
    }
    FieldSet fields({field});
    GwlpOptions gopts;
    gopts.jmax = 2;
    gopts.fields = &fields;
    const auto a = gwlp(d, gopts);
    if (std::abs(a[1] - to_double(report.a2)) > 1e-6) {
      fail("GWLP A_2 " + std::to_string(a[1]) + " differs from A2 " +
           to_string(report.a2));
    }
    if (std::abs(a[0]) > 1e-6) fail("GWLP A_1 is not zero");
  }

  res.ok = res.failures.empty();
  res.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return res;
}

}  // namespace

CatalogReport catalog_verify(const CatalogOptions& options) {
  CatalogReport report;
  for (const CatalogRow& row : catalog()) {
    if (!options.table_filter.empty() && row.table != options.table_filter) {
      continue;
    }
    try {
      report.rows.push_back(verify_row(row, options));
    } catch (const Error& e) {
      CatalogRowResult res;
      res.id = row.id();
      res.failures.push_back(e.what());
      report.rows.push_back(std::move(res));
    }
  }
  return report;
}

}  // namespace ssd
