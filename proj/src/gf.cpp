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

#include "ssd/gf.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ssd/error.hpp"

namespace ssd {
namespace {

void trim(Polynomial& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod_prime(std::uint32_t x, std::uint32_t p) {
  // p is small; Fermat via repeated squaring.
  std::uint64_t result = 1;
  std::uint64_t base = x % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over GF(p); b must be nonzero after trimming.
Polynomial poly_mod(Polynomial a, Polynomial b, std::uint32_t p) {
  trim(a);
  trim(b);
  const std::uint32_t lead_inv = inverse_mod_prime(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor =
        static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t s) {
  if (s < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "field order must be at least 2, got " + std::to_string(s));
  }
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d * d <= s; ++d) {
    if (s % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {s, 1};
  std::uint32_t r = 0;
  std::uint32_t rest = s;
  while (rest % p == 0) {
    rest /= p;
    ++r;
  }
  if (rest != 1) {
    throw Error(ErrorCode::kNotPrimePower,
                std::to_string(s) + " is not a prime power");
  }
  return {p, r};
}

}  // namespace

bool is_irreducible(const Polynomial& poly, std::uint32_t p) {
  Polynomial f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t degree = f.size() - 1;
  // Every monic candidate divisor of degree d is enumerated by counting its
  // lower coefficients in base p.
  for (std::size_t d = 1; 2 * d <= degree; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Polynomial g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Polynomial default_modulus(std::uint32_t p, std::uint32_t r) {
  if (r == 1) return {};
  if (p == 2 && r == 2) return {1, 1, 1};
  if (p == 2 && r == 3) return {1, 1, 0, 1};
  if (p == 2 && r == 4) return {1, 1, 0, 0, 1};
  if (p == 3 && r == 2) return {2, 2, 1};
  if (p == 5 && r == 2) return {2, 4, 1};
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < r; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Polynomial g(r + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < r; ++i) {
      g[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    g[r] = 1;
    if (is_irreducible(g, p)) return g;
  }
  throw Error(ErrorCode::kInvalidArgument, "no irreducible polynomial found");
}

Field::Field(std::uint32_t order, std::optional<Polynomial> modulus) {
  if (order > kMaxOrder) {
    throw Error(ErrorCode::kInvalidArgument,
                "field order " + std::to_string(order) + " exceeds 2^16");
  }
  auto [p, r] = prime_power(order);
  order_ = order;
  p_ = p;
  r_ = r;

  if (modulus && r_ > 1) {
    Polynomial m = *modulus;
    for (auto& c : m) c %= p_;
    trim(m);
    if (m.size() != r_ + 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "modulus must have degree " + std::to_string(r_));
    }
    const std::uint32_t lead_inv = inverse_mod_prime(m.back(), p_);
    for (auto& c : m) {
      c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * lead_inv %
                                     p_);
    }
    if (!is_irreducible(m, p_)) {
      throw Error(ErrorCode::kReducibleModulus,
                  "modulus is reducible over GF(" + std::to_string(p_) + ")");
    }
    modulus_ = std::move(m);
  } else if (modulus && r_ == 1 && modulus->size() > 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "prime fields take no modulus of degree > 1");
  } else {
    modulus_ = default_modulus(p_, r_);
  }

  roots_of_unity_.resize(p_);
  for (std::uint32_t k = 0; k < p_; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / p_;
    roots_of_unity_[k] = {std::cos(angle), std::sin(angle)};
  }
  // Exact values where they exist keep the small-field sums tidy.
  roots_of_unity_[0] = {1.0, 0.0};
  if (p_ == 2) roots_of_unity_[1] = {-1.0, 0.0};

  if (order_ <= kTableLimit) {
    const std::size_t s = order_;
    add_table_.resize(s * s);
    mul_table_.resize(s * s);
    neg_table_.resize(s);
    inv_table_.resize(s);
    for (Element x = 0; x < s; ++x) {
      neg_table_[x] = static_cast<std::uint16_t>(neg_slow(x));
      for (Element y = 0; y < s; ++y) {
        add_table_[x * s + y] = static_cast<std::uint16_t>(add_slow(x, y));
        mul_table_[x * s + y] = static_cast<std::uint16_t>(mul_slow(x, y));
      }
    }
    for (Element x = 1; x < s; ++x) {
      for (Element y = 1; y < s; ++y) {
        if (mul_table_[x * s + y] == 1) {
          inv_table_[x] = static_cast<std::uint16_t>(y);
          break;
        }
      }
    }
    tabled_ = true;
    trace_table_.resize(s);
    for (Element x = 0; x < s; ++x) {
      Element acc = 0;
      Element power = x;
      for (std::uint32_t i = 0; i < r_; ++i) {
        acc = add(acc, power);
        power = this->pow(power, p_);
      }
      // The trace lies in the prime subfield, i.e. the constant digit.
      trace_table_[x] = static_cast<std::uint16_t>(acc);
    }
  }
}

std::vector<std::uint32_t> Field::digits(Element x) const {
  std::vector<std::uint32_t> d(r_, 0);
  for (std::uint32_t i = 0; i < r_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

Element Field::from_digits(const std::vector<std::uint32_t>& d) const {
  Element x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p_ + d[i];
  return x;
}

Element Field::add_slow(Element x, Element y) const {
  auto a = digits(x);
  auto b = digits(y);
  for (std::uint32_t i = 0; i < r_; ++i) a[i] = (a[i] + b[i]) % p_;
  return from_digits(a);
}

Element Field::neg_slow(Element x) const {
  auto a = digits(x);
  for (auto& c : a) c = (p_ - c) % p_;
  return from_digits(a);
}

Element Field::mul_slow(Element x, Element y) const {
  if (r_ == 1) {
    return static_cast<Element>(static_cast<std::uint64_t>(x) * y % p_);
  }
  auto a = digits(x);
  auto b = digits(y);
  std::vector<std::uint64_t> prod(2 * r_ - 1, 0);
  for (std::uint32_t i = 0; i < r_; ++i) {
    for (std::uint32_t j = 0; j < r_; ++j) {
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_;
    }
  }
  // Reduce with the monic modulus from the top degree down.
  for (std::size_t deg = prod.size(); deg-- > r_;) {
    const std::uint64_t c = prod[deg];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= r_; ++i) {
      const std::size_t at = deg - r_ + i;
      prod[at] = (prod[at] + p_ * p_ - c * modulus_[i] % p_) % p_;
    }
  }
  std::vector<std::uint32_t> out(r_);
  for (std::uint32_t i = 0; i < r_; ++i) {
    out[i] = static_cast<std::uint32_t>(prod[i]);
  }
  return from_digits(out);
}

Element Field::add(Element x, Element y) const {
  return tabled_ ? add_table_[x * order_ + y] : add_slow(x, y);
}

Element Field::neg(Element x) const {
  return tabled_ ? neg_table_[x] : neg_slow(x);
}

Element Field::sub(Element x, Element y) const { return add(x, neg(y)); }

Element Field::mul(Element x, Element y) const {
  return tabled_ ? mul_table_[x * order_ + y] : mul_slow(x, y);
}

Element Field::pow(Element x, std::uint64_t e) const {
  Element result = 1;
  Element base = x;
  for (; e > 0; e >>= 1) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

Element Field::inv(Element x) const {
  if (x == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  return tabled_ ? inv_table_[x] : pow(x, order_ - 2);
}

std::uint32_t Field::trace(Element x) const {
  if (tabled_) return trace_table_[x];
  Element acc = 0;
  Element power = x;
  for (std::uint32_t i = 0; i < r_; ++i) {
    acc = add(acc, power);
    power = pow(power, p_);
  }
  return acc;
}

std::complex<double> Field::character(Element x) const {
  return roots_of_unity_[trace(x)];
}

std::vector<std::vector<Element>> Field::points(int n) const {
  if (n < 1) {
    throw Error(ErrorCode::kDimensionTooSmall, "points need n >= 1");
  }
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= order_;
    if (total > (1u << 24)) {
      throw Error(ErrorCode::kTooLarge, "too many points");
    }
  }
  std::vector<std::vector<Element>> out(total, std::vector<Element>(n, 0));
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (int c = n; c-- > 0;) {
      out[idx][c] = static_cast<Element>(rest % order_);
      rest /= order_;
    }
  }
  return out;
}

}  // namespace ssd
