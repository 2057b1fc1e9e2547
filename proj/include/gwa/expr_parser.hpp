#pragma once

// Small recursive-descent parser shared by scalars and base polynomials.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/')? factor)*      juxtaposition multiplies
//   factor := atom ('^' ['-'] digits)?
//   atom   := digits | identifier | '(' expr ')'

#include <cctype>
#include <string>
#include <string_view>

#include "gwa/errors.hpp"
#include "gwa/scalar.hpp"

namespace gwa::detail {

template <class T, class Ops>
class ExprParser {
 public:
  ExprParser(std::string_view text, Ops& ops) : text_(text), ops_(ops) {}

  T parse_all() {
    T value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::Parse, why + " at offset " + std::to_string(pos_) + " in '" +
                                 std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_atom(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(' || c == '_';
  }

  T expr() {
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    T value = term();
    if (negate) value = -value;
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        value = value + term();
      } else if (c == '-') {
        ++pos_;
        value = value - term();
      } else {
        return value;
      }
    }
  }

  T term() {
    T value = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        value = value * factor();
      } else if (c == '/') {
        ++pos_;
        value = ops_.divide(value, factor());
      } else if (starts_atom(c)) {
        value = value * factor();
      } else {
        return value;
      }
    }
  }

  T factor() {
    T base = atom();
    if (peek() == '^') {
      ++pos_;
      bool negative = false;
      if (peek() == '-') {
        negative = true;
        ++pos_;
      } else if (peek() == '+') {
        ++pos_;
      }
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      base = ops_.power(base, negative ? -e : e);
    }
    return base;
  }

  T atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      T value = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ops_.number(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return ops_.identifier(text_.substr(start, pos_ - start));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  Ops& ops_;
  std::size_t pos_ = 0;
};

}  // namespace gwa::detail
