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

#include "ssd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ssd/bounds.hpp"
#include "ssd/error.hpp"

namespace ssd::oracle {
namespace {

constexpr std::size_t kMaxCanonicalColumns = 20000;

// Balanced columns in restricted-growth form: the first appearance of each
// symbol follows 0, 1, 2, ... Every balanced column is a relabeling of
// exactly one of these. Generated in lexicographic order.
std::vector<std::vector<Symbol>> canonical_columns(std::size_t runs,
                                                   std::uint32_t levels) {
  std::vector<std::vector<Symbol>> out;
  const std::size_t per_level = runs / levels;
  std::vector<Symbol> current(runs);
  std::vector<std::size_t> used(levels, 0);
  auto extend = [&](auto&& self, std::size_t pos, std::uint32_t opened) {
    if (pos == runs) {
      out.push_back(current);
      if (out.size() > kMaxCanonicalColumns) {
        throw Error(ErrorCode::kTooLarge,
                    "too many candidate columns for exhaustive search");
      }
      return;
    }
    const std::uint32_t limit = std::min(opened + 1, levels);
    for (std::uint32_t v = 0; v < limit; ++v) {
      if (used[v] == per_level) continue;
      current[pos] = v;
      ++used[v];
      self(self, pos + 1, std::max(opened, v + 1));
      --used[v];
    }
  };
  extend(extend, 0, 0);
  return out;
}

std::vector<std::vector<double>> contrasts(std::uint32_t levels) {
  // Gram-Schmidt on (1, e_0, ..., e_{s-1}) under the uniform level measure,
  // keeping the s - 1 nonconstant directions scaled to mean square one.
  std::vector<std::vector<double>> basis;
  basis.push_back(std::vector<double>(levels, 1.0));
  std::vector<std::vector<double>> out;
  auto dot = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0;
    for (std::uint32_t i = 0; i < levels; ++i) sum += a[i] * b[i];
    return sum / levels;
  };
  for (std::uint32_t a = 0; a < levels && out.size() + 1 < levels; ++a) {
    std::vector<double> v(levels, 0.0);
    v[a] = 1.0;
    for (const auto& b : basis) {
      const double c = dot(v, b) / dot(b, b);
      for (std::uint32_t i = 0; i < levels; ++i) v[i] -= c * b[i];
    }
    const double norm = std::sqrt(dot(v, v));
    if (norm < 1e-12) continue;
    for (double& x : v) x /= norm;
    basis.push_back(v);
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::int64_t>> pair_table(const Design& d,
                                                  std::size_t i,
                                                  std::size_t j) {
  std::vector<std::vector<std::int64_t>> table(
      d.levels(i), std::vector<std::int64_t>(d.levels(j), 0));
  for (Symbol a = 0; a < d.levels(i); ++a) {
    for (Symbol b = 0; b < d.levels(j); ++b) {
      for (std::size_t r = 0; r < d.runs(); ++r) {
        if (d.at(r, i) == a && d.at(r, j) == b) ++table[a][b];
      }
    }
  }
  return table;
}

Rational projected_a2_from_table(const Design& d, std::size_t i,
                                 std::size_t j) {
  const auto table = pair_table(d, i, j);
  const Rational n(BigInt(d.runs()));
  const Rational expected =
      n / Rational(BigInt(std::uint64_t{d.levels(i)} * d.levels(j)));
  Rational chi2 = 0;
  for (const auto& row : table) {
    for (std::int64_t count : row) {
      const Rational dev = Rational(BigInt(count)) - expected;
      chi2 += dev * dev / expected;
    }
  }
  return chi2 / n;
}

SearchResult exhaustive_min_a2(std::size_t runs, std::uint32_t levels,
                               std::size_t columns,
                               const SearchOptions& options) {
  if (levels < 2 || runs == 0 || runs % levels != 0 || columns == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "search needs s >= 2, s | N and m >= 1");
  }
  const auto cands = canonical_columns(runs, levels);
  const std::size_t c = cands.size();
  const std::int64_t n = static_cast<std::int64_t>(runs);
  const std::int64_t e = static_cast<std::int64_t>(levels) * levels;

  // cost[a][b] = N^2 * projected A2 of candidate pair (a, b).
  std::vector<std::int64_t> cost(c * c);
  std::vector<std::int64_t> cells(static_cast<std::size_t>(e));
  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t b = a; b < c; ++b) {
      std::fill(cells.begin(), cells.end(), 0);
      for (std::size_t r = 0; r < runs; ++r) {
        ++cells[cands[a][r] * levels + cands[b][r]];
      }
      std::int64_t sum_sq = 0;
      for (std::int64_t x : cells) sum_sq += x * x;
      cost[a * c + b] = cost[b * c + a] = e * sum_sq - n * n;
    }
  }

  std::int64_t stop = -1;
  if (options.stop_at) {
    const Rational scaled = *options.stop_at * Rational(BigInt(n * n));
    if (scaled >= 0) stop = static_cast<std::int64_t>(floor(scaled));
  }

  SearchResult result;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<std::size_t> chosen(columns, 0);
  std::vector<std::size_t> best_choice;
  bool out_of_budget = false;
  bool done = false;

  auto dfs = [&](auto&& self, std::size_t depth, std::int64_t partial) -> void {
    if (depth == columns) {
      if (partial < best) {
        best = partial;
        best_choice = chosen;
        if (best <= stop) done = true;
      }
      return;
    }
    for (std::size_t cand = chosen[depth - 1]; cand < c; ++cand) {
      if (done || out_of_budget) return;
      if (++result.evaluations > options.budget) {
        out_of_budget = true;
        return;
      }
      std::int64_t next = partial;
      for (std::size_t k = 0; k < depth; ++k) next += cost[chosen[k] * c + cand];
      if (next >= best) continue;
      chosen[depth] = cand;
      self(self, depth + 1, next);
    }
  };
  chosen[0] = 0;
  if (columns == 1) {
    best = 0;
    best_choice = chosen;
  } else {
    dfs(dfs, 1, 0);
  }

  if (best_choice.empty()) {
    throw Error(ErrorCode::kBudgetExceeded,
                "search budget exhausted before any design was found");
  }
  std::vector<Column> cols;
  for (std::size_t idx : best_choice) {
    cols.push_back(Column{levels, cands[idx], "candidate " + std::to_string(idx)});
  }
  result.certificate = Design(runs, std::move(cols));
  result.best_a2 = make_rational(best, n * n);
  result.stopped_at_bound = done;
  result.exhaustive = !out_of_budget;
  return result;
}

double gwlp_bruteforce(const Design& d, int j) {
  if (d.runs() > 32 || d.size() > 8) {
    throw Error(ErrorCode::kTooLarge,
                "contrast route is limited to N <= 32 and m <= 8");
  }
  if (j < 1) throw Error(ErrorCode::kInvalidArgument, "j must be >= 1");
  const std::size_t m = d.size();
  const std::size_t n = d.runs();
  if (static_cast<std::size_t>(j) > m) return 0.0;

  // x[c][k][r]: k-th contrast of column c at run r.
  std::vector<std::vector<std::vector<double>>> x(m);
  for (std::size_t c = 0; c < m; ++c) {
    for (const auto& f : contrasts(d.levels(c))) {
      std::vector<double> v(n);
      for (std::size_t r = 0; r < n; ++r) v[r] = f[d.at(r, c)];
      x[c].push_back(std::move(v));
    }
  }

  double total = 0;
  std::vector<std::size_t> subset;
  std::vector<double> product(n);
  auto over_contrasts = [&](auto&& self, std::size_t pos) -> void {
    if (pos == subset.size()) {
      double sum = 0;
      for (double v : product) sum += v;
      total += sum * sum;
      return;
    }
    const std::vector<double> saved = product;
    for (const auto& v : x[subset[pos]]) {
      for (std::size_t r = 0; r < n; ++r) product[r] = saved[r] * v[r];
      self(self, pos + 1);
    }
    product = saved;
  };
  auto over_subsets = [&](auto&& self, std::size_t first) -> void {
    if (subset.size() == static_cast<std::size_t>(j)) {
      std::fill(product.begin(), product.end(), 1.0);
      over_contrasts(over_contrasts, 0);
      return;
    }
    for (std::size_t c = first; c < m; ++c) {
      subset.push_back(c);
      self(self, c + 1);
      subset.pop_back();
    }
  };
  over_subsets(over_subsets, 0);
  return total / (static_cast<double>(n) * static_cast<double>(n));
}

std::vector<PeriodicityRow> periodicity_spot_check(
    std::size_t runs, std::uint32_t levels, std::size_t t, std::size_t m_lo,
    std::size_t m_hi, const SearchOptions& options) {
  if (m_lo == 0 || m_lo > m_hi) {
    throw Error(ErrorCode::kInvalidArgument, "need 1 <= m_lo <= m_hi");
  }
  // Each minimum may stop early at the Theorem 1 bound, which is a proven
  // lower bound, so an early stop is still an exact minimum.
  auto minimum = [&](std::size_t m) {
    SearchOptions opts = options;
    Rational lb = lb_theorem1(static_cast<std::int64_t>(runs),
                              static_cast<std::int64_t>(m), levels);
    if (lb < 0) lb = 0;
    if (!opts.stop_at || *opts.stop_at < lb) opts.stop_at = lb;
    return exhaustive_min_a2(runs, levels, m, opts);
  };
  std::vector<PeriodicityRow> rows;
  for (std::size_t m = m_lo; m <= m_hi; ++m) {
    const SearchResult lo = minimum(m);
    const SearchResult hi = minimum(m + t);
    PeriodicityRow row;
    row.m = m;
    row.a2_m = lo.best_a2;
    row.a2_m_plus_t = hi.best_a2;
    row.exact = lo.exhaustive && hi.exhaustive;
    row.holds = hi.best_a2 ==
                lo.best_a2 + Rational(BigInt(m * (levels - 1)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ssd::oracle
