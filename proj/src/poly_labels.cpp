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

#include "ssd/poly_labels.hpp"

#include <cctype>
#include <string>

#include "ssd/error.hpp"

namespace ssd {

bool LinearForm::is_zero() const { return last_nonzero() < 0; }

int LinearForm::last_nonzero() const {
  for (int i = arity(); i-- > 0;) {
    if (coeffs[i] != 0) return i;
  }
  return -1;
}

bool LinearForm::is_canonical() const {
  const int k = last_nonzero();
  return k >= 0 && coeffs[k] == 1;
}

LinearForm variable(int n, int index) {
  LinearForm f{std::vector<Element>(n, 0)};
  f.coeffs.at(index) = 1;
  return f;
}

LinearForm scale(const Field& field, Element c, const LinearForm& f) {
  LinearForm out = f;
  for (auto& x : out.coeffs) x = field.mul(c, x);
  return out;
}

LinearForm add(const Field& field, const LinearForm& f, const LinearForm& g) {
  if (f.arity() != g.arity()) {
    throw Error(ErrorCode::kShapeMismatch, "linear forms of different arity");
  }
  LinearForm out = f;
  for (int i = 0; i < f.arity(); ++i) {
    out.coeffs[i] = field.add(f.coeffs[i], g.coeffs[i]);
  }
  return out;
}

Element evaluate(const Field& field, const LinearForm& f,
                 std::span<const Element> point) {
  if (point.size() != f.coeffs.size()) {
    throw Error(ErrorCode::kShapeMismatch, "point length differs from arity");
  }
  Element acc = 0;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (f.coeffs[i] != 0) acc = field.add(acc, field.mul(f.coeffs[i], point[i]));
  }
  return acc;
}

bool dependent(const Field& field, const LinearForm& f1, const LinearForm& f2) {
  if (f1.arity() != f2.arity() || f1.is_zero() || f2.is_zero()) return false;
  const int k = f2.last_nonzero();
  if (f1.last_nonzero() != k) return false;
  const Element c = field.div(f1.coeffs[k], f2.coeffs[k]);
  return scale(field, c, f2) == f1;
}

int ColumnLabel::arity() const {
  return is_linear() ? linear().arity() : quadratic().base.arity();
}

QuadraticForm make_quadratic(const Field& field, const LinearForm& base,
                             const LinearForm& linear_part) {
  const int k = base.last_nonzero();
  if (k < 0) {
    throw Error(ErrorCode::kInvalidArgument, "quadratic base must be nonzero");
  }
  if (linear_part.arity() != base.arity()) {
    throw Error(ErrorCode::kShapeMismatch, "quadratic parts of different arity");
  }
  QuadraticForm q;
  q.base = base;
  q.a = field.div(linear_part.coeffs[k], base.coeffs[k]);
  q.tail = add(field, linear_part, scale(field, field.neg(q.a), base));
  return q;
}

LinearForm linear_part(const Field& field, const QuadraticForm& q) {
  return add(field, scale(field, q.a, q.base), q.tail);
}

Element evaluate(const Field& field, const ColumnLabel& label,
                 std::span<const Element> point) {
  if (label.is_linear()) return evaluate(field, label.linear(), point);
  const QuadraticForm& q = label.quadratic();
  const Element b = evaluate(field, q.base, point);
  const Element square = field.mul(b, b);
  return field.add(field.add(square, field.mul(q.a, b)),
                   evaluate(field, q.tail, point));
}

std::vector<LinearForm> h_set(const Field& field, int n) {
  if (n < 1) throw Error(ErrorCode::kDimensionTooSmall, "H needs n >= 1");
  const std::uint32_t s = field.order();
  std::vector<LinearForm> out;
  std::vector<Element> c(n, 0);
  // Odometer with c_1 fastest, which is lexicographic order on (c_n..c_1).
  while (true) {
    int i = 0;
    while (i < n && c[i] + 1 == s) c[i++] = 0;
    if (i == n) break;
    ++c[i];
    LinearForm f{c};
    if (f.is_canonical()) out.push_back(std::move(f));
  }
  return out;
}

namespace {

// Embeds a form over n-1 variables as a form over X2..Xn.
LinearForm shift_up(const LinearForm& g) {
  LinearForm out{std::vector<Element>(g.arity() + 1, 0)};
  for (int i = 0; i < g.arity(); ++i) out.coeffs[i + 1] = g.coeffs[i];
  return out;
}

}  // namespace

std::vector<ColumnLabel> q1_star(const Field& field, int n) {
  if (n < 2) throw Error(ErrorCode::kDimensionTooSmall, "Q1* needs n >= 2");
  const LinearForm x1 = variable(n, 0);
  std::vector<ColumnLabel> out;
  for (const LinearForm& g : h_set(field, n - 1)) {
    const LinearForm tail = shift_up(g);
    for (Element a = 0; a < field.order(); ++a) {
      out.emplace_back(QuadraticForm{x1, a, tail});
    }
  }
  return out;
}

std::vector<ColumnLabel> q1(const Field& field, int n) {
  std::vector<ColumnLabel> out{ColumnLabel(variable(n, 0))};
  for (auto& label : q1_star(field, n)) out.push_back(std::move(label));
  return out;
}

std::vector<LinearForm> qh_substitution(const Field& field,
                                        const LinearForm& h) {
  (void)field;
  if (!h.is_canonical()) {
    throw Error(ErrorCode::kNotCanonical,
                format_form(h) + " is not a member of H");
  }
  const int n = h.arity();
  const int k = h.last_nonzero() + 1;  // one-based position
  std::vector<LinearForm> y;
  y.reserve(n);
  y.push_back(h);
  for (int i = 2; i <= n; ++i) {
    y.push_back(variable(n, i <= k ? i - 2 : i - 1));
  }
  return y;
}

std::vector<ColumnLabel> qh_star(const Field& field, const LinearForm& h) {
  const int n = h.arity();
  if (n < 2) throw Error(ErrorCode::kDimensionTooSmall, "Q_h* needs n >= 2");
  const std::vector<LinearForm> y = qh_substitution(field, h);
  std::vector<ColumnLabel> out;
  for (const LinearForm& g : h_set(field, n - 1)) {
    LinearForm tail{std::vector<Element>(n, 0)};
    for (int j = 0; j < g.arity(); ++j) {
      if (g.coeffs[j] != 0) {
        tail = add(field, tail, scale(field, g.coeffs[j], y[j + 1]));
      }
    }
    for (Element a = 0; a < field.order(); ++a) {
      out.emplace_back(QuadraticForm{h, a, tail});
    }
  }
  return out;
}

std::vector<ColumnLabel> qh(const Field& field, const LinearForm& h) {
  std::vector<ColumnLabel> out = qh_star(field, h);
  out.insert(out.begin(), ColumnLabel(h));
  return out;
}

std::string format_form(const LinearForm& f) {
  std::string out;
  for (int i = 0; i < f.arity(); ++i) {
    const Element c = f.coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (c != 1) out += std::to_string(c) + '*';
    out += 'X' + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string format_label(const Field& field, const ColumnLabel& label) {
  if (label.is_linear()) return format_form(label.linear());
  const QuadraticForm& q = label.quadratic();
  std::string out;
  const int k = q.base.last_nonzero();
  bool single = q.base.coeffs[k] == 1;
  for (int i = 0; i < k; ++i) single = single && q.base.coeffs[i] == 0;
  if (single) {
    out = "X" + std::to_string(k + 1) + "^2";
  } else {
    out = "(" + format_form(q.base) + ")^2";
  }
  const LinearForm rest = linear_part(field, q);
  if (!rest.is_zero()) out += "+" + format_form(rest);
  return out;
}

namespace {

class LabelParser {
 public:
  LabelParser(const Field& field, std::string_view text, int n)
      : field_(field), n_(n), original_(text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) text_ += ch;
    }
  }

  ColumnLabel parse() {
    if (text_.empty()) fail("empty label");
    ColumnLabel result = parse_top();
    if (pos_ != text_.size()) fail("trailing input");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::kParseError,
                why + " in label '" + std::string(original_) + "'");
  }

  bool peek(char ch) const { return pos_ < text_.size() && text_[pos_] == ch; }

  void expect(std::string_view token) {
    if (text_.compare(pos_, token.size(), token) != 0) {
      fail("expected '" + std::string(token) + "'");
    }
    pos_ += token.size();
  }

  std::uint64_t number() {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (1u << 20)) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }

  int variable_index() {
    expect("X");
    const std::uint64_t index = number();
    if (index < 1 || index > static_cast<std::uint64_t>(n_)) {
      fail("variable index out of range");
    }
    return static_cast<int>(index) - 1;
  }

  // [c '*'] X i
  void term(LinearForm& into) {
    Element c = 1;
    if (!peek('X')) {
      const std::uint64_t value = number();
      if (value >= field_.order()) fail("coefficient not a field symbol");
      c = static_cast<Element>(value);
      expect("*");
    }
    const int i = variable_index();
    into.coeffs[i] = field_.add(into.coeffs[i], c);
  }

  LinearForm linear() {
    LinearForm f{std::vector<Element>(n_, 0)};
    term(f);
    while (peek('+')) {
      ++pos_;
      term(f);
    }
    return f;
  }

  ColumnLabel parse_top() {
    LinearForm base;
    if (peek('(')) {
      ++pos_;
      base = linear();
      expect(")^2");
    } else if (peek('X')) {
      const std::size_t save = pos_;
      const int i = variable_index();
      if (text_.compare(pos_, 2, "^2") != 0) {
        pos_ = save;
        return ColumnLabel(checked_nonzero(linear()));
      }
      pos_ += 2;
      base = variable(n_, i);
    } else {
      return ColumnLabel(checked_nonzero(linear()));
    }
    checked_nonzero(base);
    LinearForm rest{std::vector<Element>(n_, 0)};
    if (peek('+')) {
      ++pos_;
      rest = linear();
    }
    return ColumnLabel(make_quadratic(field_, base, rest));
  }

  LinearForm checked_nonzero(LinearForm f) const {
    if (f.is_zero()) fail("zero linear form");
    return f;
  }

  const Field& field_;
  int n_;
  std::string_view original_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

ColumnLabel parse_label(const Field& field, std::string_view text, int n) {
  return LabelParser(field, text, n).parse();
}

}  // namespace ssd
