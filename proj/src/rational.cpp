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

#include "ssd/rational.hpp"

#include <cctype>

#include "ssd/error.hpp"

namespace ssd {

std::string to_string(const Rational& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt floor(const Rational& r) {
  BigInt n = num(r);
  BigInt d = den(r);
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) --q;
  return q;
}

std::string round_decimal(const Rational& r, int places) {
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  Rational scaled = abs(r) * scale;
  // Half away from zero on the magnitude, sign restored afterwards.
  BigInt rounded = floor(scaled + Rational(1, 2));
  std::string digits = rounded.str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, places + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - places, ".");
  }
  if (r < 0 && rounded != 0) digits.insert(0, "-");
  return digits;
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw Error(ErrorCode::kParseError, "bad rational: " + text);
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) {
      throw Error(ErrorCode::kParseError, "bad rational: " + text);
    }
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
        throw Error(ErrorCode::kParseError, "bad rational: " + text);
      }
    }
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt d = parse_int(text.substr(slash + 1));
  if (d == 0) throw Error(ErrorCode::kParseError, "zero denominator: " + text);
  return Rational(parse_int(text.substr(0, slash)), d);
}

}  // namespace ssd
