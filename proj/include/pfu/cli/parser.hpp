#pragma once

// Recursive-descent parser for rational-function expressions:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' int)?        int := ['-'] digits | '(' ['-'] digits ')'
//   atom  := digits | letter | '(' expr ')'
// so ^ binds tightest, then unary minus, then * and /, then + and -.

#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pfu/error.hpp"
#include "pfu/exact/ratfunc.hpp"

namespace pfu {

class ParseError : public InputError {
 public:
  ParseError(size_t position, std::vector<std::string> expected)
      : InputError(message(position, expected)), position_(position), expected_(std::move(expected)) {}

  size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string message(size_t pos, const std::vector<std::string>& expected) {
    std::string s = "parse error at position " + std::to_string(pos) + ": expected ";
    for (size_t i = 0; i < expected.size(); ++i) s += (i ? ", " : "") + expected[i];
    return s;
  }

  size_t position_;
  std::vector<std::string> expected_;
};

namespace detail {

class ExprParser {
 public:
  ExprParser(const std::string& text, std::optional<char> var) : s_(text), var_(var) {}

  RationalFunction run() {
    RationalFunction r = expr();
    skip();
    if (pos_ != s_.size()) fail({"operator", "end of input"});
    return r;
  }

  std::optional<char> variable() const { return var_; }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  [[noreturn]] void fail(std::vector<std::string> expected) { throw ParseError(pos_, std::move(expected)); }

  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= unary();
      } else if (peek('/')) {
        ++pos_;
        size_t at = pos_;
        RationalFunction d = unary();
        if (d.is_zero()) throw InputError("division by zero at position " + std::to_string(at));
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (!peek('^')) return base;
    ++pos_;
    long e = exponent();
    if (e < 0 && base.is_zero()) throw InputError("zero raised to a negative power");
    return base.pow(static_cast<int>(e));
  }

  long exponent() {
    bool paren = false;
    if (peek('(')) {
      paren = true;
      ++pos_;
    }
    bool neg = false;
    if (peek('-')) {
      neg = true;
      ++pos_;
    }
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail({"integer exponent"});
    std::string digits = read_digits();
    if (digits.size() > 6) fail({"exponent below 10^6"});
    long e = std::stol(digits);
    if (paren) {
      if (!peek(')')) fail({")"});
      ++pos_;
    }
    return neg ? -e : e;
  }

  std::string read_digits() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  RationalFunction atom() {
    skip();
    if (pos_ >= s_.size()) fail({"number", "variable", "("});
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!peek(')')) fail({")", "+", "-", "*", "/", "^"});
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RationalFunction(Rational(Integer(read_digits())));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (pos_ + 1 < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        fail({"operator"});
      }
      if (var_ && *var_ != c) fail({std::string("variable ") + *var_});
      var_ = c;
      ++pos_;
      return RationalFunction::x();
    }
    fail({"number", "variable", "("});
  }

  const std::string& s_;
  size_t pos_ = 0;
  std::optional<char> var_;
};

}  // namespace detail

/// Parses an expression in a single-letter variable. When `var` is given,
/// any other letter is rejected.
inline RationalFunction parse_ratfunc(const std::string& text, std::optional<char> var = std::nullopt) {
  return detail::ExprParser(text, var).run();
}

/// Like parse_ratfunc, recording the variable seen in `var`.
inline RationalFunction parse_ratfunc_tracking(const std::string& text, std::optional<char>& var) {
  detail::ExprParser p(text, var);
  RationalFunction r = p.run();
  var = p.variable();
  return r;
}

}  // namespace pfu
