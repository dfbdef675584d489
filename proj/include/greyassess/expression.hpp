// Copyright 2026 The Greyassess Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GREYASSESS_EXPRESSION_HPP
#define GREYASSESS_EXPRESSION_HPP

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "greyassess/error.hpp"
#include "greyassess/grey_number.hpp"

namespace greyassess {

enum class BinaryOp { kAdd, kSub, kMul, kDiv };

inline char op_symbol(BinaryOp op) noexcept {
  switch (op) {
    case BinaryOp::kAdd: return '+';
    case BinaryOp::kSub: return '-';
    case BinaryOp::kMul: return '*';
    case BinaryOp::kDiv: return '/';
  }
  return '?';
}

/// Immutable parse tree of a grey-number expression. Subtrees are shared, so
/// copies are cheap and never alias mutable state.
class Expression {
 public:
  /// `[a,b]` or a bare number x, which denotes the white number [x,x]. The
  /// spelling is remembered so printing reproduces the input form.
  struct Literal {
    GreyNumber value;
    bool bare_number = false;

    friend bool operator==(const Literal&, const Literal&) = default;
  };

  struct Binary {
    BinaryOp op;
    std::shared_ptr<const Expression> lhs;
    std::shared_ptr<const Expression> rhs;
  };

  static Expression interval(double lower, double upper) { return Expression(Literal{make(lower, upper), false}); }
  static Expression number(double x) { return Expression(Literal{GreyNumber(x), true}); }
  static Expression binary(BinaryOp op, Expression lhs, Expression rhs) {
    return Expression(Binary{op, std::make_shared<const Expression>(std::move(lhs)),
                             std::make_shared<const Expression>(std::move(rhs))});
  }

  bool is_literal() const noexcept { return std::holds_alternative<Literal>(node_); }
  const Literal& literal() const { return std::get<Literal>(node_); }
  const Binary& binary() const { return std::get<Binary>(node_); }

  // Structural equality.
  friend bool operator==(const Expression& x, const Expression& y) {
    if (x.is_literal() != y.is_literal()) return false;
    if (x.is_literal()) return x.literal() == y.literal();
    const auto& bx = x.binary();
    const auto& by = y.binary();
    return bx.op == by.op && *bx.lhs == *by.lhs && *bx.rhs == *by.rhs;
  }

 private:
  explicit Expression(Literal l) : node_(std::move(l)) {}
  explicit Expression(Binary b) : node_(std::move(b)) {}

  std::variant<Literal, Binary> node_;
};

namespace detail {

inline int precedence(const Expression& e) {
  if (e.is_literal()) return 3;
  const auto op = e.binary().op;
  return (op == BinaryOp::kAdd || op == BinaryOp::kSub) ? 1 : 2;
}

class ExpressionParser {
 public:
  static constexpr int kMaxDepth = 200;
  static constexpr std::size_t kMaxOperands = 10000;

  explicit ExpressionParser(std::string_view src) : src_(src) {}

  Expression parse() {
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "empty expression");
    auto e = parse_expr(0);
    skip_ws();
    if (!at_end()) throw SyntaxError(pos_, "unexpected " + describe_current());
    return e;
  }

 private:
  // expr := term (('+'|'-') term)*
  Expression parse_expr(int depth) {
    auto lhs = parse_term(depth);
    while (true) {
      skip_ws();
      if (at_end() || (peek() != '+' && peek() != '-')) return lhs;
      const auto op = peek() == '+' ? BinaryOp::kAdd : BinaryOp::kSub;
      ++pos_;
      lhs = Expression::binary(op, std::move(lhs), parse_term(depth));
    }
  }

  // term := factor (('*'|'/') factor)*
  Expression parse_term(int depth) {
    auto lhs = parse_factor(depth);
    while (true) {
      skip_ws();
      if (at_end() || (peek() != '*' && peek() != '/')) return lhs;
      const auto op = peek() == '*' ? BinaryOp::kMul : BinaryOp::kDiv;
      ++pos_;
      lhs = Expression::binary(op, std::move(lhs), parse_factor(depth));
    }
  }

  // factor := interval | number | '(' expr ')'
  Expression parse_factor(int depth) {
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "unexpected end of input, expected an operand");
    const char c = peek();
    if (c == '(') {
      if (depth >= kMaxDepth) throw SyntaxError(pos_, "expression nested too deeply");
      const std::size_t open = pos_++;
      auto inner = parse_expr(depth + 1);
      skip_ws();
      if (at_end()) throw SyntaxError(pos_, "missing ')' for '(' at offset " + std::to_string(open));
      if (peek() != ')') throw SyntaxError(pos_, "expected ')', found " + describe_current());
      ++pos_;
      return inner;
    }
    if (++operands_ > kMaxOperands) throw SyntaxError(pos_, "expression has too many operands");
    if (c == '[') return parse_interval();
    if (starts_number()) return Expression::number(parse_number());
    throw SyntaxError(pos_, "expected an operand, found " + describe_current());
  }

  // interval := '[' number ',' number ']'
  Expression parse_interval() {
    const std::size_t open = pos_++;
    skip_ws();
    if (!starts_number()) throw SyntaxError(pos_, "expected lower bound, found " + describe_current());
    const double lo = parse_number();
    expect(',');
    skip_ws();
    if (!starts_number()) throw SyntaxError(pos_, "expected upper bound, found " + describe_current());
    const double hi = parse_number();
    expect(']');
    if (lo > hi) {
      throw SyntaxError(open, "invalid interval [" + format_shortest(lo) + ", " + format_shortest(hi) +
                                  "]: lower bound exceeds upper bound");
    }
    return Expression::interval(lo, hi);
  }

  double parse_number() {
    const std::size_t start = pos_;
    std::size_t i = pos_;
    if (i < src_.size() && (src_[i] == '+' || src_[i] == '-')) ++i;
    const std::size_t mantissa = i;
    std::size_t digits = 0;
    while (i < src_.size() && is_digit(src_[i])) ++i, ++digits;
    if (i < src_.size() && src_[i] == '.') {
      ++i;
      while (i < src_.size() && is_digit(src_[i])) ++i, ++digits;
    }
    if (digits == 0) throw SyntaxError(mantissa, "malformed number");
    if (i < src_.size() && (src_[i] == 'e' || src_[i] == 'E')) {
      std::size_t j = i + 1;
      if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) ++j;
      if (j >= src_.size() || !is_digit(src_[j])) throw SyntaxError(j, "malformed exponent");
      while (j < src_.size() && is_digit(src_[j])) ++j;
      i = j;
    }
    const std::size_t from = src_[start] == '+' ? start + 1 : start;
    double v = 0;
    const auto [ptr, ec] = std::from_chars(src_.data() + from, src_.data() + i, v);
    if (ec == std::errc::result_out_of_range || !std::isfinite(v)) {
      throw SyntaxError(start, "number out of range");
    }
    if (ec != std::errc() || ptr != src_.data() + i) throw SyntaxError(start, "malformed number");
    pos_ = i;
    return v;
  }

  void expect(char c) {
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, std::string("unexpected end of input, expected '") + c + "'");
    if (peek() != c) throw SyntaxError(pos_, std::string("expected '") + c + "', found " + describe_current());
    ++pos_;
  }

  bool starts_number() const {
    if (at_end()) return false;
    const char c = peek();
    if (is_digit(c) || c == '.') return true;
    if (c == '+' || c == '-') {
      return pos_ + 1 < src_.size() && (is_digit(src_[pos_ + 1]) || src_[pos_ + 1] == '.');
    }
    return false;
  }

  std::string describe_current() const {
    if (at_end()) return "end of input";
    const unsigned char c = static_cast<unsigned char>(peek());
    if (std::isprint(c)) return std::string("'") + peek() + "'";
    return "byte 0x" + std::string(1, "0123456789abcdef"[c >> 4]) + "0123456789abcdef"[c & 15];
  }

  static bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }
  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r')) ++pos_;
  }
  bool at_end() const noexcept { return pos_ >= src_.size(); }
  char peek() const noexcept { return src_[pos_]; }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t operands_ = 0;
};

}  // namespace detail

/// Parses
///
///     expr   := term (('+'|'-') term)*
///     term   := factor (('*'|'/') factor)*
///     factor := interval | number | '(' expr ')'
///     interval := '[' number ',' number ']'
///
/// with the usual precedence and left associativity; whitespace is ignored.
/// Throws SyntaxError carrying the byte offset of the problem.
inline Expression parse_gn_expression(std::string_view text) { return detail::ExpressionParser(text).parse(); }

/// Canonical text for `e`; parsing the result gives back an equal tree.
inline std::string to_string(const Expression& e) {
  if (e.is_literal()) {
    const auto& lit = e.literal();
    if (lit.bare_number) return detail::format_shortest(lit.value.lower());
    return "[" + detail::format_shortest(lit.value.lower()) + ", " + detail::format_shortest(lit.value.upper()) + "]";
  }
  const auto& b = e.binary();
  const int p = detail::precedence(e);
  auto side = [](const Expression& child, bool parens) {
    return parens ? "(" + to_string(child) + ")" : to_string(child);
  };
  return side(*b.lhs, detail::precedence(*b.lhs) < p) + " " + op_symbol(b.op) + " " +
         side(*b.rhs, detail::precedence(*b.rhs) <= p);
}

/// Bottom-up evaluation with grey-number arithmetic. A zero-containing
/// divisor raises DivisionByZeroInterval naming the offending sub-expression.
inline GreyNumber eval_gn_expression(const Expression& e) {
  if (e.is_literal()) return e.literal().value;
  const auto& b = e.binary();
  const GreyNumber x = eval_gn_expression(*b.lhs);
  const GreyNumber y = eval_gn_expression(*b.rhs);
  switch (b.op) {
    case BinaryOp::kAdd: return add(x, y);
    case BinaryOp::kSub: return sub(x, y);
    case BinaryOp::kMul: return mul(x, y);
    case BinaryOp::kDiv:
      if (y.contains(0.0)) {
        throw DivisionByZeroInterval("division by an interval containing zero in '" + to_string(e) +
                                     "': divisor '" + to_string(*b.rhs) + "' evaluates to " + to_string(y));
      }
      return div(x, y);
  }
  throw Error("unknown operator");
}

inline GreyNumber eval_gn_expression(std::string_view text) { return eval_gn_expression(parse_gn_expression(text)); }

}  // namespace greyassess

#endif  // GREYASSESS_EXPRESSION_HPP
