#ifndef COQE_PARSE_HPP
#define COQE_PARSE_HPP

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coqe/expr.hpp"

namespace coqe {

/// Known symbols for restricted parsing (chart coordinates and parameters).
/// With no table, unknown identifiers become assumption-free symbols.
using SymbolTable = std::map<std::string, Expr>;

namespace detail {

class Parser {
 public:
  Parser(const std::string& text, const SymbolTable* table)
      : text_(text), table_(table) {}

  Expr run() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("parse error at byte " + std::to_string(pos_) + ": " + what,
                static_cast<long>(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Expr parse_expr() {
    Expr acc = parse_term();
    while (true) {
      if (eat('+'))
        acc = acc + parse_term();
      else if (eat('-'))
        acc = acc - parse_term();
      else
        return acc;
    }
  }

  Expr parse_term() {
    Expr acc = parse_factor();
    while (true) {
      if (eat('*'))
        acc = acc * parse_factor();
      else if (eat('/')) {
        std::size_t at = pos_;
        Expr d = parse_factor();
        if (d.is_zero_literal()) {
          pos_ = at;
          fail("division by zero");
        }
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  Expr parse_factor() {
    Expr b = parse_base();
    if (eat('^')) {
      std::size_t at = pos_;
      Expr e = parse_factor();
      if (!e.is_number()) {
        pos_ = at;
        fail("exponent must be a rational constant");
      }
      try {
        return Expr::pow(b, e.number());
      } catch (const Error& err) {
        pos_ = at;
        fail(err.what());
      }
    }
    return b;
  }

  Expr parse_base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -parse_factor();
    }
    if (c == '(') {
      ++pos_;
      Expr e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return parse_identifier();
    fail("unexpected character");
  }

  Expr parse_number() {
    std::size_t start = pos_;
    std::string digits;
    bool seen_dot = false;
    long long frac_digits = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (seen_dot) ++frac_digits;
        ++pos_;
      } else if (c == '.') {
        if (seen_dot) fail("malformed number");
        seen_dot = true;
        ++pos_;
      } else {
        break;
      }
    }
    if (digits.empty()) {
      pos_ = start;
      fail("malformed number");
    }
    BigInt n = BigInt::from_decimal(digits);
    if (frac_digits == 0) return Expr(Rational(n));
    return Expr(Rational(n, BigInt(10).pow(frac_digits)));
  }

  Expr parse_identifier() {
    std::size_t start = pos_;
    std::string name;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      name += text_[pos_];
      ++pos_;
    }
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      Expr a = parse_expr();
      if (!eat(')')) fail("expected ')'");
      if (name == "exp") return Expr::exp(a);
      if (name == "log") return Expr::log(a);
      if (name == "sin") return Expr::sin(a);
      if (name == "cos") return Expr::cos(a);
      if (name == "sqrt") return Expr::sqrt(a);
      if (name == "tan") return Expr::sin(a) / Expr::cos(a);
      pos_ = start;
      fail("unknown function '" + name + "'");
    }
    if (table_) {
      auto it = table_->find(name);
      if (it == table_->end()) {
        pos_ = start;
        fail("unknown symbol '" + name + "'");
      }
      return it->second;
    }
    return Expr::symbol(name);
  }

  const std::string& text_;
  const SymbolTable* table_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse(const std::string& text) {
  return detail::Parser(text, nullptr).run();
}

inline Expr parse(const std::string& text, const SymbolTable& table) {
  return detail::Parser(text, &table).run();
}

}  // namespace coqe

#endif  // COQE_PARSE_HPP
