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

#ifndef SSD_RATIONAL_HPP_
#define SSD_RATIONAL_HPP_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ssd {

// Exact rational with arbitrary-precision numerator and denominator. Values
// are always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt num(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline BigInt den(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

// "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

// Largest integer not exceeding r.
BigInt floor(const Rational& r);

// Fixed-point rendering rounded half away from zero, e.g. 3.5999 -> "3.60".
std::string round_decimal(const Rational& r, int places);

// Accepts "p", "p/q" and "-p/q".
Rational parse_rational(const std::string& text);

}  // namespace ssd

#endif  // SSD_RATIONAL_HPP_
