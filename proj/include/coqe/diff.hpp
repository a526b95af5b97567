#ifndef COQE_DIFF_HPP
#define COQE_DIFF_HPP

#include <string>
#include <vector>

#include "coqe/expr.hpp"

namespace coqe {

/// Exact partial derivative with respect to the named symbol; every other
/// symbol is treated as a constant. The result is canonical.
inline Expr differentiate(const Expr& e, const std::string& var) {
  switch (e.kind()) {
    case Kind::Number:
      return Expr(0);
    case Kind::Symbol:
      return e.symbol_name() == var ? Expr(1) : Expr(0);
    case Kind::Sum: {
      std::vector<Expr> parts;
      for (const auto& k : e.kids()) parts.push_back(differentiate(k, var));
      return Expr::sum(std::move(parts));
    }
    case Kind::Product: {
      std::vector<Expr> parts;
      for (std::size_t i = 0; i < e.kids().size(); ++i) {
        Expr d = differentiate(e.kids()[i], var);
        if (d.is_zero_literal()) continue;
        std::vector<Expr> fs;
        fs.push_back(d);
        for (std::size_t j = 0; j < e.kids().size(); ++j)
          if (j != i) fs.push_back(e.kids()[j]);
        parts.push_back(Expr::product(std::move(fs)));
      }
      return Expr::sum(std::move(parts));
    }
    case Kind::Power: {
      Expr db = differentiate(e.base(), var);
      if (db.is_zero_literal()) return Expr(0);
      return Expr(e.exponent()) * Expr::pow(e.base(), e.exponent() - Rational(1)) * db;
    }
    case Kind::Exp:
      return e * differentiate(e.arg(), var);
    case Kind::Log:
      return differentiate(e.arg(), var) / e.arg();
    case Kind::Sin:
      return Expr::cos(e.arg()) * differentiate(e.arg(), var);
    case Kind::Cos:
      return -Expr::sin(e.arg()) * differentiate(e.arg(), var);
  }
  return Expr(0);
}

inline Expr differentiate(const Expr& e, const Expr& var) {
  if (var.kind() != Kind::Symbol) throw Error("differentiation variable must be a symbol");
  return differentiate(e, var.symbol_name());
}

}  // namespace coqe

#endif  // COQE_DIFF_HPP
