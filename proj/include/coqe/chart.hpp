#ifndef COQE_CHART_HPP
#define COQE_CHART_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "coqe/eval.hpp"
#include "coqe/parse.hpp"

namespace coqe {

/// Coordinate chart: n coordinate symbols plus parameter symbols carrying
/// assumption flags, together with the sample point used for the numeric
/// certificates (invertibility, signature, pivoting).
class Chart {
 public:
  Chart(std::vector<Expr> coords, std::vector<Expr> params = {})
      : coords_(std::move(coords)), params_(std::move(params)) {
    if (coords_.size() < 2) throw Error("chart dimension must be at least 2");
    for (const auto& c : coords_)
      if (c.kind() != Kind::Symbol) throw Error("chart coordinates must be symbols");
    for (const auto& p : params_)
      if (p.kind() != Kind::Symbol) throw Error("chart parameters must be symbols");
    for (std::size_t i = 0; i < coords_.size(); ++i)
      for (std::size_t j = i + 1; j < coords_.size(); ++j)
        if (coords_[i].symbol_name() == coords_[j].symbol_name())
          throw Error("duplicate coordinate name '" + coords_[i].symbol_name() + "'");
    for (const auto& c : coords_)
      for (const auto& p : params_)
        if (c.symbol_name() == p.symbol_name())
          throw Error("coordinate and parameter share the name '" +
                      c.symbol_name() + "'");
    for (const auto& c : coords_) sample_[c.symbol_name()] = Rational(1, 3);
    for (const auto& p : params_) sample_[p.symbol_name()] = Rational(2);
  }

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<Expr>& coords() const { return coords_; }
  const std::vector<Expr>& params() const { return params_; }
  const std::string& coord_name(int i) const { return coords_[i].symbol_name(); }

  void set_sample(const std::string& name, const Rational& v) {
    if (!sample_.count(name))
      throw Error("sample point names unknown symbol '" + name + "'");
    sample_[name] = v;
  }

  Bindings sample_bindings() const {
    Bindings b;
    for (const auto& [name, v] : sample_) b[name] = Value(v);
    return b;
  }
  const std::map<std::string, Rational>& sample_point() const { return sample_; }

  SymbolTable symbols() const {
    SymbolTable t;
    for (const auto& c : coords_) t[c.symbol_name()] = c;
    for (const auto& p : params_) t[p.symbol_name()] = p;
    return t;
  }

  Expr parse_expr(const std::string& text) const {
    SymbolTable t = symbols();
    return parse(text, t);
  }

 private:
  std::vector<Expr> coords_;
  std::vector<Expr> params_;
  std::map<std::string, Rational> sample_;
};

using ChartPtr = std::shared_ptr<const Chart>;

}  // namespace coqe

#endif  // COQE_CHART_HPP
