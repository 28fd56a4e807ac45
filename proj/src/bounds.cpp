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

#include "ssd/bounds.hpp"

#include <string>

#include "ssd/criteria.hpp"
#include "ssd/error.hpp"

namespace ssd {
namespace {

void require_runs(std::int64_t runs) {
  if (runs < 2) {
    throw Error(ErrorCode::kInvalidArgument, "bounds need N >= 2");
  }
}

void require_positive(std::int64_t columns, std::int64_t levels) {
  if (columns < 0 || levels < 2) {
    throw Error(ErrorCode::kInvalidArgument, "bounds need m >= 0 and s >= 2");
  }
}

Rational clamp(const Rational& r) { return r < 0 ? Rational(0) : r; }

}  // namespace

Rational eta(std::int64_t runs, std::int64_t columns, std::int64_t levels) {
  require_runs(runs);
  require_positive(columns, levels);
  const Rational k1 = make_rational(columns * (runs - levels),
                                    (runs - 1) * levels);
  return k1 - Rational(floor(k1));
}

Rational lb_lemma2(std::int64_t runs, std::int64_t columns,
                   std::int64_t levels) {
  require_runs(runs);
  require_positive(columns, levels);
  return make_rational(
      columns * (levels - 1) * (columns * levels - columns - runs + 1),
      2 * (runs - 1));
}

Rational lb_theorem1(std::int64_t runs, std::int64_t columns,
                     std::int64_t levels) {
  const Rational e = eta(runs, columns, levels);
  return lb_lemma2(runs, columns, levels) +
         Rational((runs - 1) * levels * levels) * e * (1 - e) /
             Rational(2 * runs);
}

Rational lb_theorem10(std::int64_t runs,
                      std::span<const std::uint32_t> levels) {
  require_runs(runs);
  std::int64_t excess = 0;  // sum (s_k - 1)
  for (std::uint32_t s : levels) {
    if (s < 2) {
      throw Error(ErrorCode::kInvalidArgument, "level counts must be >= 2");
    }
    excess += static_cast<std::int64_t>(s) - 1;
  }
  return make_rational(excess * (excess - runs + 1), 2 * (runs - 1));
}

Es2Bound lb_es2(std::int64_t runs, std::int64_t columns) {
  require_runs(runs);
  Es2Bound out;
  if (columns <= runs - 1) return out;
  out.supersaturated = true;
  out.value = make_rational(runs * runs * (columns - runs + 1),
                            (columns - 1) * (runs - 1));
  return out;
}

BoundReport certify(const Design& d) {
  BoundReport r;
  r.a2 = a2_overall(d);
  const auto runs = static_cast<std::int64_t>(d.runs());
  const auto m = static_cast<std::int64_t>(d.size());
  const std::uint32_t s = d.uniform_levels();
  if (s >= 2) {
    r.theorem1_raw = lb_theorem1(runs, m, s);
    r.theorem1 = clamp(*r.theorem1_raw);
    r.lemma2 = lb_lemma2(runs, m, s);
    r.achieved_theorem1 = r.a2 == *r.theorem1;
    r.achieved_lemma2 = r.a2 == clamp(*r.lemma2);
  }
  const auto profile = d.level_profile();
  r.theorem10 = lb_theorem10(runs, profile);
  r.achieved_theorem10 = r.a2 == clamp(r.theorem10);
  if (s == 2 && m >= 2) {
    r.eq1_es2 = lb_es2(runs, m).value;
    r.e_s2 = e_s2(d);
    r.achieved_es2 = *r.e_s2 == *r.eq1_es2;
  }
  r.coincidence_spread = coincidences(d).spread();
  return r;
}

}  // namespace ssd
