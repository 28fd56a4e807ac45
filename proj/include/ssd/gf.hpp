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

#ifndef SSD_GF_HPP_
#define SSD_GF_HPP_

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace ssd {

// A field element is the integer whose base-p digits (constant term first)
// are the coefficients of its polynomial representative.
using Element = std::uint32_t;

// Polynomial over GF(p), coefficients listed constant term first.
using Polynomial = std::vector<std::uint32_t>;

// Default modulus for GF(p^r): the Conway polynomials for the orders used in
// practice, otherwise the lexicographically first monic irreducible.
Polynomial default_modulus(std::uint32_t p, std::uint32_t r);

// True if `poly` (monic, degree >= 1) has no factor of smaller positive degree
// over GF(p).
bool is_irreducible(const Polynomial& poly, std::uint32_t p);

// Finite field GF(p^r). Immutable after construction; all member functions are
// const and safe to call concurrently.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;
  static constexpr std::uint32_t kTableLimit = 256;

  // Throws kNotPrimePower for orders with two distinct prime factors and
  // kReducibleModulus when the supplied modulus factors over GF(p).
  explicit Field(std::uint32_t order,
                 std::optional<Polynomial> modulus = std::nullopt);

  std::uint32_t order() const { return order_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return r_; }
  // Empty for prime fields.
  const Polynomial& modulus() const { return modulus_; }

  Element add(Element x, Element y) const;
  Element sub(Element x, Element y) const;
  Element neg(Element x) const;
  Element mul(Element x, Element y) const;
  Element inv(Element x) const;  // throws kDivisionByZero for x == 0
  Element div(Element x, Element y) const { return mul(x, inv(y)); }
  Element pow(Element x, std::uint64_t e) const;

  // Absolute trace onto GF(p), returned as 0..p-1.
  std::uint32_t trace(Element x) const;

  // Canonical additive character exp(2*pi*i*Tr(x)/p).
  std::complex<double> character(Element x) const;

  // All s^n points in lexicographic order; coordinate 0 varies slowest.
  std::vector<std::vector<Element>> points(int n) const;

  bool operator==(const Field& other) const {
    return order_ == other.order_ && modulus_ == other.modulus_;
  }

 private:
  std::vector<std::uint32_t> digits(Element x) const;
  Element from_digits(const std::vector<std::uint32_t>& d) const;
  Element add_slow(Element x, Element y) const;
  Element neg_slow(Element x) const;
  Element mul_slow(Element x, Element y) const;

  std::uint32_t order_ = 0;
  std::uint32_t p_ = 0;
  std::uint32_t r_ = 0;
  Polynomial modulus_;
  bool tabled_ = false;
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> mul_table_;
  std::vector<std::uint16_t> neg_table_;
  std::vector<std::uint16_t> inv_table_;
  std::vector<std::uint16_t> trace_table_;
  std::vector<std::complex<double>> roots_of_unity_;  // e^{2 pi i k / p}
};

}  // namespace ssd

#endif  // SSD_GF_HPP_
