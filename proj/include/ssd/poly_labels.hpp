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

#ifndef SSD_POLY_LABELS_HPP_
#define SSD_POLY_LABELS_HPP_

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ssd/gf.hpp"

namespace ssd {

// c_1 X_1 + ... + c_n X_n. The number of variables is coeffs.size().
struct LinearForm {
  std::vector<Element> coeffs;

  int arity() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const;
  // Zero-based index of the last nonzero coefficient, or -1 for the zero form.
  int last_nonzero() const;
  // Member of H: nonzero with last nonzero coefficient equal to 1.
  bool is_canonical() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend auto operator<=>(const LinearForm&, const LinearForm&) = default;
};

// The single-variable form X_{index+1} in `n` variables.
LinearForm variable(int n, int index);

LinearForm scale(const Field& field, Element c, const LinearForm& f);
LinearForm add(const Field& field, const LinearForm& f, const LinearForm& g);
Element evaluate(const Field& field, const LinearForm& f,
                 std::span<const Element> point);

// f1 = c * f2 for some nonzero c. Zero forms are never dependent.
bool dependent(const Field& field, const LinearForm& f1, const LinearForm& f2);

// base^2 + a * base + tail. `tail` lives in the span of the variables other
// than the last nonzero one of `base`, which makes (a, tail) unique for a
// given expanded linear part.
struct QuadraticForm {
  LinearForm base;
  Element a = 0;
  LinearForm tail;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

class ColumnLabel {
 public:
  ColumnLabel(LinearForm f) : form_(std::move(f)) {}  // NOLINT: implicit
  ColumnLabel(QuadraticForm q) : form_(std::move(q)) {}  // NOLINT: implicit

  bool is_linear() const { return std::holds_alternative<LinearForm>(form_); }
  const LinearForm& linear() const { return std::get<LinearForm>(form_); }
  const QuadraticForm& quadratic() const {
    return std::get<QuadraticForm>(form_);
  }
  int arity() const;

  friend bool operator==(const ColumnLabel&, const ColumnLabel&) = default;

 private:
  std::variant<LinearForm, QuadraticForm> form_;
};

// Builds base^2 + linear_part, splitting linear_part into a * base + tail.
QuadraticForm make_quadratic(const Field& field, const LinearForm& base,
                             const LinearForm& linear_part);

// a * base + tail, in X-coordinates.
LinearForm linear_part(const Field& field, const QuadraticForm& q);

Element evaluate(const Field& field, const ColumnLabel& label,
                 std::span<const Element> point);

// Every nonzero linear form whose last nonzero coefficient is 1, ordered
// lexicographically on (c_n, ..., c_1). There are (s^n - 1)/(s - 1).
std::vector<LinearForm> h_set(const Field& field, int n);

// { X1^2 + a X1 + g : g in H(X2..Xn), a in F_s }, g outer and a inner.
std::vector<ColumnLabel> q1_star(const Field& field, int n);
// {X1} followed by q1_star.
std::vector<ColumnLabel> q1(const Field& field, int n);

// Change of basis Y_1..Y_n (each written in X-coordinates) with Y_1 = h,
// Y_i = X_{i-1} for 2 <= i <= k and Y_i = X_i beyond, where k is the position
// of h's last nonzero coefficient. Throws kNotCanonical unless h is in H.
std::vector<LinearForm> qh_substitution(const Field& field,
                                        const LinearForm& h);

// q1_star / q1 with X_i replaced by Y_i from qh_substitution.
std::vector<ColumnLabel> qh_star(const Field& field, const LinearForm& h);
std::vector<ColumnLabel> qh(const Field& field, const LinearForm& h);

// Text form such as "X1^2+2*X1+X2" or "(X1+X2)^2+X1".
std::string format_label(const Field& field, const ColumnLabel& label);
std::string format_form(const LinearForm& f);

// Inverse of format_label; whitespace is ignored. `n` is the number of
// variables; it must cover every index that appears. Throws kParseError.
ColumnLabel parse_label(const Field& field, std::string_view text, int n);

}  // namespace ssd

#endif  // SSD_POLY_LABELS_HPP_
