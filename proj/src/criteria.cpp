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

#include "ssd/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>
#include <utility>

#include "ssd/error.hpp"

namespace ssd {
namespace {

using Wide = __int128;

BigInt to_big(Wide v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v)
                                 : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return negative ? BigInt(-out) : out;
}

Rational ratio(Wide n, Wide d) { return Rational(to_big(n), to_big(d)); }

void require_balanced(const Design& d) {
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (!d.column_balanced(j)) {
      throw Error(ErrorCode::kUnbalancedDesign,
                  "column " + std::to_string(j + 1) + " is unbalanced");
    }
  }
}

// Histogram of delta_ij over run pairs i < j.
std::vector<std::int64_t> coincidence_histogram(const Design& d) {
  const CoincidenceMatrix c = coincidences(d);
  std::vector<std::int64_t> hist(d.size() + 1, 0);
  for (std::size_t i = 0; i < c.runs; ++i) {
    for (std::size_t j = i + 1; j < c.runs; ++j) ++hist[c(i, j)];
  }
  return hist;
}

// Sum of squared cell counts for a column pair.
std::int64_t sum_sq_cells(const Design& d, std::size_t i, std::size_t j,
                          std::vector<std::int64_t>& scratch) {
  const Column& a = d.column(i);
  const Column& b = d.column(j);
  scratch.assign(static_cast<std::size_t>(a.levels) * b.levels, 0);
  for (std::size_t r = 0; r < d.runs(); ++r) {
    ++scratch[a.symbols[r] * b.levels + b.symbols[r]];
  }
  std::int64_t out = 0;
  for (std::int64_t c : scratch) out += c * c;
  return out;
}

Field field_for(std::uint32_t order) {
  try {
    return Field(order);
  } catch (const Error& e) {
    throw Error(ErrorCode::kNoFieldRealization,
                "no field of order " + std::to_string(order));
  }
}

}  // namespace

Rational power_moment(const Design& d, int t) {
  if (t < 1) throw Error(ErrorCode::kInvalidArgument, "moment order must be >= 1");
  const std::int64_t n = static_cast<std::int64_t>(d.runs());
  if (n < 2) return Rational(0);
  const auto hist = coincidence_histogram(d);
  BigInt total = 0;
  for (std::size_t delta = 1; delta < hist.size(); ++delta) {
    if (hist[delta] == 0) continue;
    total += BigInt(hist[delta]) * boost::multiprecision::pow(BigInt(delta), t);
  }
  return Rational(total, BigInt(n * (n - 1) / 2));
}

Rational a2_overall(const Design& d) {
  require_balanced(d);
  const std::uint32_t s = d.uniform_levels();
  if (s == 0 || d.runs() < 2) return a2_pairwise_sum(d);
  const std::int64_t n = static_cast<std::int64_t>(d.runs());
  const std::int64_t m = static_cast<std::int64_t>(d.size());
  const Rational k2 = power_moment(d, 2);
  const Rational s2(BigInt(s) * s);
  return (Rational(n - 1) * s2 * k2 + Rational(m * m) * s2 -
          Rational(n * m * (m + s - 1))) /
         Rational(2 * n);
}

Rational a2_pairwise_sum(const Design& d) {
  const Wide n = static_cast<Wide>(d.runs());
  if (n == 0) return Rational(0);
  // Group numerators by s_i s_j; each pair contributes (e sum n^2 - N^2) / N^2.
  std::map<std::int64_t, Wide> numerators;
  std::vector<std::int64_t> scratch;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const std::int64_t e =
          static_cast<std::int64_t>(d.levels(i)) * d.levels(j);
      numerators[e] += static_cast<Wide>(e) * sum_sq_cells(d, i, j, scratch) -
                       n * n;
    }
  }
  Wide total = 0;
  for (const auto& [e, v] : numerators) total += v;
  return ratio(total, n * n);
}

Rational projected_a2(const Design& d, std::size_t i, std::size_t j) {
  std::vector<std::int64_t> scratch;
  const std::int64_t n = static_cast<std::int64_t>(d.runs());
  const std::int64_t e = static_cast<std::int64_t>(d.levels(i)) * d.levels(j);
  return make_rational(e * sum_sq_cells(d, i, j, scratch) - n * n, n * n);
}

double projected_a2_char(const Design& d, std::size_t i, std::size_t j) {
  if (d.levels(i) != d.levels(j)) {
    throw Error(ErrorCode::kNoFieldRealization,
                "character route needs equal level counts");
  }
  return projected_a2_char(d, i, j, field_for(d.levels(i)));
}

double projected_a2_char(const Design& d, std::size_t i, std::size_t j,
                         const Field& field) {
  const std::uint32_t s = field.order();
  if (d.levels(i) != s || d.levels(j) != s) {
    throw Error(ErrorCode::kNoFieldRealization,
                "columns do not match the field order");
  }
  // Sum over runs depends only on cell counts.
  const auto counts = cell_counts(d, i, j);
  double total = 0.0;
  for (Element u = 1; u < s; ++u) {
    for (Element v = 1; v < s; ++v) {
      std::complex<double> sum = 0.0;
      for (Element x = 0; x < s; ++x) {
        for (Element y = 0; y < s; ++y) {
          const std::int64_t c = counts[x * s + y];
          if (c == 0) continue;
          sum += static_cast<double>(c) *
                 field.character(field.add(field.mul(u, x), field.mul(v, y)));
        }
      }
      total += std::norm(sum);
    }
  }
  const double n = static_cast<double>(d.runs());
  return total / (n * n);
}

const Field& FieldSet::get(std::uint32_t order) const {
  for (const Field& f : overrides_) {
    if (f.order() == order) return f;
  }
  for (const Field& f : cache_) {
    if (f.order() == order) return f;
  }
  cache_.push_back(field_for(order));
  return cache_.back();
}

double gwlp_cost(const Design& d, int jmax) {
  // Elementary symmetric sums of (s_i - 1) up to degree jmax.
  std::vector<double> e(static_cast<std::size_t>(std::max(jmax, 0)) + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t c = 0; c < d.size(); ++c) {
    const double w = static_cast<double>(d.levels(c)) - 1.0;
    for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += e[k - 1] * w;
  }
  double total = 0.0;
  for (std::size_t k = 1; k < e.size(); ++k) total += e[k];
  return total;
}

std::vector<double> gwlp(const Design& d, const GwlpOptions& options) {
  if (options.jmax < 1) {
    throw Error(ErrorCode::kInvalidArgument, "jmax must be >= 1");
  }
  const double cost = gwlp_cost(d, options.jmax);
  if (cost > options.budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "GWLP up to j=" + std::to_string(options.jmax) + " needs " +
                    std::to_string(static_cast<long long>(cost)) +
                    " character sums, budget is " +
                    std::to_string(static_cast<long long>(options.budget)));
  }
  FieldSet defaults;
  const FieldSet& fields = options.fields ? *options.fields : defaults;
  const std::size_t n = d.runs();
  const std::size_t m = d.size();

  // chars[c][u - 1][x]: character of u * x in column c's field.
  std::vector<std::vector<std::vector<std::complex<double>>>> chars(m);
  for (std::size_t c = 0; c < m; ++c) {
    const Field& f = fields.get(d.levels(c));
    chars[c].resize(f.order() - 1);
    for (Element u = 1; u < f.order(); ++u) {
      auto& row = chars[c][u - 1];
      row.resize(f.order());
      for (Element x = 0; x < f.order(); ++x) row[x] = f.character(f.mul(u, x));
    }
  }

  const int jmax = options.jmax;
  std::vector<double> out(static_cast<std::size_t>(jmax), 0.0);
  // products[k] holds the run-wise product after choosing k + 1 columns.
  std::vector<std::vector<std::complex<double>>> products(
      static_cast<std::size_t>(jmax), std::vector<std::complex<double>>(n));

  auto extend = [&](auto&& self, int depth, std::size_t first) -> void {
    for (std::size_t c = first; c < m; ++c) {
      const Column& col = d.column(c);
      for (const auto& row : chars[c]) {
        auto& prod = products[depth];
        std::complex<double> sum = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          prod[r] = depth == 0 ? row[col.symbols[r]]
                               : products[depth - 1][r] * row[col.symbols[r]];
          sum += prod[r];
        }
        out[depth] += std::norm(sum);
        if (depth + 1 < jmax) self(self, depth + 1, c + 1);
      }
    }
  };
  if (n > 0) extend(extend, 0, 0);
  const double scale = static_cast<double>(n) * static_cast<double>(n);
  for (double& a : out) a = scale > 0 ? a / scale : 0.0;
  return out;
}

PairStats pair_dependency_stats(const Design& d, std::size_t i,
                                std::size_t j) {
  const auto counts = cell_counts(d, i, j);
  const std::int64_t n = static_cast<std::int64_t>(d.runs());
  const std::int64_t e = static_cast<std::int64_t>(d.levels(i)) * d.levels(j);
  std::int64_t sum_sq = 0;
  std::int64_t abs_dev = 0;  // sum |e n_ab - N|
  Wide sq_dev = 0;           // sum (e n_ab - N)^2
  for (std::int64_t c : counts) {
    sum_sq += c * c;
    abs_dev += std::llabs(e * c - n);
    sq_dev += static_cast<Wide>(e * c - n) * (e * c - n);
  }
  PairStats out;
  out.chi2 = make_rational(e * sum_sq - n * n, n);
  out.f = make_rational(abs_dev, e);
  out.d2 = ratio(sq_dev, static_cast<Wide>(e) * e);
  return out;
}

CriteriaReport aggregate_stats(const Design& d, int gwlp_jmax,
                               const GwlpOptions& gwlp_options) {
  if (d.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "pairwise statistics need at least two columns");
  }
  CriteriaReport r;
  r.runs = d.runs();
  r.columns = d.size();
  r.levels = d.level_profile();
  r.k1 = power_moment(d, 1);
  r.k2 = power_moment(d, 2);

  const Wide n = static_cast<Wide>(d.runs());
  // Per level product e = s_i s_j, exact integer numerators:
  //   chi2 = (e S - N^2) / N, f = F / e, d2 = D / e^2, projected A2 = chi2 / N.
  struct Bucket {
    Wide chi_num = 0;
    Wide f_num = 0;
    Wide d_num = 0;
    std::int64_t max_chi = -1;
    std::int64_t max_f = -1;
    Wide max_d = -1;
  };
  std::map<std::int64_t, Bucket> buckets;
  std::map<std::int64_t, std::size_t> hist;  // keyed by chi numerator
  std::vector<std::int64_t> counts;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const std::int64_t e =
          static_cast<std::int64_t>(d.levels(i)) * d.levels(j);
      const Column& a = d.column(i);
      const Column& b = d.column(j);
      counts.assign(static_cast<std::size_t>(e), 0);
      for (std::size_t row = 0; row < d.runs(); ++row) {
        ++counts[a.symbols[row] * b.levels + b.symbols[row]];
      }
      std::int64_t sum_sq = 0;
      std::int64_t abs_dev = 0;
      Wide sq_dev = 0;
      const std::int64_t nn = static_cast<std::int64_t>(n);
      for (std::int64_t c : counts) {
        sum_sq += c * c;
        const std::int64_t dev = e * c - nn;
        abs_dev += std::llabs(dev);
        sq_dev += static_cast<Wide>(dev) * dev;
      }
      const std::int64_t chi = e * sum_sq - nn * nn;
      Bucket& bucket = buckets[e];
      bucket.chi_num += chi;
      bucket.f_num += abs_dev;
      bucket.d_num += sq_dev;
      bucket.max_chi = std::max(bucket.max_chi, chi);
      bucket.max_f = std::max(bucket.max_f, abs_dev);
      bucket.max_d = std::max(bucket.max_d, sq_dev);
      ++hist[chi];
    }
  }

  Rational chi_total = 0;
  Rational f_total = 0;
  Rational d_total = 0;
  bool first = true;
  for (const auto& [e, b] : buckets) {
    chi_total += ratio(b.chi_num, n);
    f_total += ratio(b.f_num, e);
    d_total += ratio(b.d_num, static_cast<Wide>(e) * e);
    const Rational mc = ratio(b.max_chi, n);
    const Rational mf = ratio(b.max_f, e);
    const Rational md = ratio(b.max_d, static_cast<Wide>(e) * e);
    if (first || mc > r.max_chi2) r.max_chi2 = mc;
    if (first || mf > r.max_f) r.max_f = mf;
    if (first || md > r.max_d2) r.max_d2 = md;
    first = false;
  }
  const Rational pairs(BigInt(r.pair_count()));
  r.ave_chi2 = chi_total / pairs;
  r.ave_f = f_total / pairs;
  r.e_d2 = d_total / pairs;
  r.a2 = chi_total / Rational(to_big(n));
  r.max_projected_a2 = r.max_chi2 / Rational(to_big(n));
  for (const auto& [chi, count] : hist) {
    r.histogram[ratio(chi, n * n)] += count;
  }

  if (r.levels == std::vector<std::uint32_t>(r.columns, 2)) {
    r.e_s2 = Rational(to_big(n * n)) * r.a2 / pairs;
  }
  if (gwlp_jmax > 0) {
    int jmax = std::min<int>(gwlp_jmax, static_cast<int>(d.size()));
    while (jmax > 0 && gwlp_cost(d, jmax) > gwlp_options.budget) --jmax;
    if (jmax > 0) {
      GwlpOptions opts = gwlp_options;
      opts.jmax = jmax;
      r.gwlp = gwlp(d, opts);
    }
  }
  return r;
}

Rational e_s2(const Design& d) {
  if (d.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "E(s^2) needs at least two columns");
  }
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d.levels(j) != 2) {
      throw Error(ErrorCode::kNotTwoLevel,
                  "column " + std::to_string(j + 1) + " is not two-level");
    }
  }
  require_balanced(d);
  const std::int64_t n = static_cast<std::int64_t>(d.runs());
  const std::int64_t m = static_cast<std::int64_t>(d.size());
  return Rational(n * n) * a2_pairwise_sum(d) / Rational(m * (m - 1) / 2);
}

std::map<Rational, std::size_t> nonzero_histogram(const CriteriaReport& r) {
  std::map<Rational, std::size_t> out;
  for (const auto& [value, count] : r.histogram) {
    if (value != 0) out.emplace(value, count);
  }
  return out;
}

}  // namespace ssd
