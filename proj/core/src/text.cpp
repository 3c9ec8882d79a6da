/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#include <cctype>
#include <stdexcept>
#include <string>

#include "carlitz/poly.hpp"

namespace carlitz {

namespace {

bool needs_parens(const std::string& s) {
  return s.find('+') != std::string::npos || s.find('-') != std::string::npos;
}

/* Recursive-descent parser over F_q[x]. Accepts sums and products of integer
 * literals, the field symbol `u` (e > 1 only), the variable, and
 * parenthesized subexpressions, with `^` for nonnegative integer powers. */
class Parser {
 public:
  Parser(const FqField* f, const std::string& text, char var)
      : f_(f), s_(text), var_(var) {}

  Poly parse_expr() {
    Poly acc = Poly::zero(f_);
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = get() == '-';
    acc = neg ? -parse_term() : parse_term();
    while (peek() == '+' || peek() == '-') {
      bool minus = get() == '-';
      Poly t = parse_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  void expect_end() {
    if (peek() != '\0') fail("unexpected trailing input");
  }

  bool at_slash() { return peek() == '/'; }
  void eat_slash() { get(); }

 private:
  Poly parse_term() {
    Poly acc = parse_factor();
    while (peek() == '*') {
      get();
      acc *= parse_factor();
    }
    return acc;
  }

  Poly parse_factor() {
    Poly base = parse_atom();
    if (peek() == '^') {
      get();
      base = base.pow(parse_int());
    }
    return base;
  }

  Poly parse_atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Poly::constant(f_->from_int(parse_int()));
    if (c == 'u' && var_ != 'u') {
      if (f_->e() == 1) fail("symbol u is only defined for extension fields");
      get();
      return Poly::constant(f_->element({0, 1}));
    }
    if (c == var_) {
      get();
      return Poly::var(f_);
    }
    if (c == '(') {
      get();
      Poly inner = parse_expr();
      if (peek() != ')') fail("missing closing parenthesis");
      get();
      return inner;
    }
    fail("unexpected character");
  }

  long long parse_int() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("number expected");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > (1LL << 40)) fail("number too large");
    }
    return v;
  }

  char peek() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  char get() {
    char c = peek();
    if (c != '\0') ++pos_;
    return c;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) +
                                " in \"" + s_ + "\": " + why);
  }

  const FqField* f_;
  const std::string& s_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Poly::str(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    std::uint16_t idx = c_[k];
    if (idx == 0) continue;
    if (!out.empty()) out += '+';
    std::string ct = f_->to_string(idx);
    if (k == 0) {
      out += ct;
      continue;
    }
    if (idx != 1) {
      if (needs_parens(ct)) {
        out += '(';
        out += ct;
        out += ')';
      } else {
        out += ct;
      }
      out += '*';
    }
    out += var;
    if (k > 1) {
      out += '^';
      out += std::to_string(k);
    }
  }
  return out;
}

std::string RatFunc::str(char var) const {
  if (den_.is_one()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

Poly parse_poly(const FqField* f, const std::string& text, char var) {
  Parser p(f, text, var);
  Poly r = p.parse_expr();
  p.expect_end();
  return r;
}

RatFunc parse_ratfunc(const FqField* f, const std::string& text, char var) {
  Parser p(f, text, var);
  Poly num = p.parse_expr();
  if (!p.at_slash()) {
    p.expect_end();
    return RatFunc(std::move(num));
  }
  p.eat_slash();
  Poly den = p.parse_expr();
  p.expect_end();
  if (den.is_zero()) throw std::invalid_argument("zero denominator in rational function text");
  return RatFunc(std::move(num), std::move(den));
}

}  // namespace carlitz
