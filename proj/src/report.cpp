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

#include "ssd/report.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "ssd/error.hpp"

namespace ssd {
namespace {

using nlohmann::ordered_json;

ordered_json integer_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

BigInt integer_from_json(const ordered_json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw Error(ErrorCode::kParseError, "expected an integer");
}

ordered_json optional_json(const std::optional<Rational>& r) {
  return r ? rational_json(*r) : ordered_json(nullptr);
}

std::string profile_text(const std::vector<std::uint32_t>& levels) {
  std::string out;
  std::size_t i = 0;
  while (i < levels.size()) {
    std::size_t j = i;
    while (j < levels.size() && levels[j] == levels[i]) ++j;
    if (!out.empty()) out += " ";
    out += std::to_string(levels[i]) + "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

ordered_json rational_json(const Rational& r) {
  ordered_json j;
  j["num"] = integer_json(num(r));
  j["den"] = integer_json(den(r));
  return j;
}

Rational rational_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw Error(ErrorCode::kParseError, "expected {num, den}");
  }
  const BigInt d = integer_from_json(j["den"]);
  if (d == 0) throw Error(ErrorCode::kDivisionByZero, "zero denominator");
  return Rational(integer_from_json(j["num"]), d);
}

ordered_json bounds_json(const BoundReport& b) {
  ordered_json j;
  j["A2"] = rational_json(b.a2);
  j["theorem1"] = optional_json(b.theorem1);
  j["theorem1_raw"] = optional_json(b.theorem1_raw);
  j["lemma2"] = optional_json(b.lemma2);
  j["theorem10"] = rational_json(b.theorem10);
  j["eq1_es2"] = optional_json(b.eq1_es2);
  j["E_s2"] = optional_json(b.e_s2);
  j["achieved_theorem1"] = b.achieved_theorem1;
  j["achieved_lemma2"] = b.achieved_lemma2;
  j["achieved_theorem10"] = b.achieved_theorem10;
  j["achieved_es2"] = b.achieved_es2;
  j["coincidence_spread"] = b.coincidence_spread;
  return j;
}

ordered_json report_json(const CriteriaReport& c, const BoundReport& b) {
  ordered_json j = report_json(c);
  j["bounds"] = bounds_json(b);
  j["achieves_theorem1"] = b.achieved_theorem1;
  return j;
}

ordered_json report_json(const CriteriaReport& c) {
  ordered_json j;
  j["N"] = c.runs;
  j["m"] = c.columns;
  j["levels"] = c.levels;
  j["K1"] = rational_json(c.k1);
  j["K2"] = rational_json(c.k2);
  j["A2"] = rational_json(c.a2);
  ordered_json hist = ordered_json::array();
  for (const auto& [value, count] : c.histogram) {
    hist.push_back({{"value", rational_json(value)}, {"count", count}});
  }
  j["projected_A2_histogram"] = std::move(hist);
  j["max_projected_A2"] = rational_json(c.max_projected_a2);
  j["ave_chi2"] = rational_json(c.ave_chi2);
  j["ave_chi2_rounded"] = round_decimal(c.ave_chi2, 2);
  j["max_chi2"] = rational_json(c.max_chi2);
  j["ave_f"] = rational_json(c.ave_f);
  j["ave_f_rounded"] = round_decimal(c.ave_f, 2);
  j["max_f"] = rational_json(c.max_f);
  j["E_d2"] = rational_json(c.e_d2);
  j["max_d2"] = rational_json(c.max_d2);
  if (c.e_s2) j["E_s2"] = rational_json(*c.e_s2);
  j["gwlp"] = c.gwlp;
  j["bounds"] = nullptr;
  j["achieves_theorem1"] = nullptr;
  return j;
}

void print_report(std::ostream& out, const CriteriaReport& c,
                  const BoundReport* b) {
  out << "N = " << c.runs << ", m = " << c.columns << ", levels "
      << profile_text(c.levels) << "\n";
  out << "A2 = " << to_string(c.a2);
  if (b && b->theorem1) {
    out << "  (Theorem 1 bound " << to_string(*b->theorem1)
        << (b->achieved_theorem1 ? ", achieved" : ", not achieved") << ")";
  }
  out << "\n";
  out << "K1 = " << to_string(c.k1) << ", K2 = " << to_string(c.k2) << "\n";
  out << "projected A2 values (value: frequency)\n";
  for (const auto& [value, count] : c.histogram) {
    out << "  " << to_string(value) << ": " << count << "\n";
  }
  out << "ave(chi2) = " << to_string(c.ave_chi2) << " ("
      << round_decimal(c.ave_chi2, 2) << "), max(chi2) = "
      << to_string(c.max_chi2) << "\n";
  out << "ave(f) = " << to_string(c.ave_f) << " (" << round_decimal(c.ave_f, 2)
      << "), max(f) = " << to_string(c.max_f) << "\n";
  out << "E(d2) = " << to_string(c.e_d2) << ", max(d2) = "
      << to_string(c.max_d2) << "\n";
  if (c.e_s2) out << "E(s2) = " << to_string(*c.e_s2) << "\n";
  if (!c.gwlp.empty()) {
    out << "GWLP";
    for (std::size_t j = 0; j < c.gwlp.size(); ++j) {
      // Character sums leave round-off around exact zeros.
      const double a = std::abs(c.gwlp[j]) < 1e-9 ? 0.0 : c.gwlp[j];
      out << " A" << j + 1 << "=" << a;
    }
    out << "\n";
  }
  if (b) {
    out << "bounds: theorem10 = " << to_string(b->theorem10)
        << (b->achieved_theorem10 ? " (achieved)" : "");
    if (b->lemma2) out << ", lemma2 = " << to_string(*b->lemma2);
    if (b->eq1_es2) out << ", E(s2) >= " << to_string(*b->eq1_es2);
    out << ", coincidence spread = " << b->coincidence_spread << "\n";
  }
}

}  // namespace ssd
