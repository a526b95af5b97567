#ifndef COQE_METRIC_HPP
#define COQE_METRIC_HPP

#include <vector>

#include "coqe/tensor.hpp"

namespace coqe {

/// Pseudo-Riemannian metric on a chart. The inverse is exact (adjugate over
/// determinant) and g * g^-1 = I is verified symbolically at construction.
/// Invertibility and the signature are certified numerically at the chart's
/// sample point, since symbolic non-vanishing of det(g) is undecidable.
class Metric {
 public:
  Metric(ChartPtr chart, const std::vector<std::vector<Expr>>& components)
      : chart_(std::move(chart)) {
    int n = chart_->dim();
    if (static_cast<int>(components.size()) != n)
      throw Error("metric dimension mismatch");
    g_ = components;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!is_zero(g_[i][j] - g_[j][i]))
          throw Error("metric is not symmetric");

    det_ = sym_det(g_);
    Bindings at = chart_->sample_bindings();
    double d;
    try {
      d = eval_double(det_, at);
    } catch (const Error& e) {
      throw Error(std::string("metric determinant undefined at sample point: ") +
                  e.what());
    }
    if (std::fabs(d) < 1e-12)
      throw Error("metric is not invertible at the sample point");

    ginv_.assign(n, std::vector<Expr>(n, Expr(0)));
    bool diagonal = true;
    for (int i = 0; i < n && diagonal; ++i)
      for (int j = 0; j < n && diagonal; ++j)
        if (i != j && !g_[i][j].is_zero_literal()) diagonal = false;
    if (diagonal) {
      for (int i = 0; i < n; ++i) ginv_[i][i] = Expr::pow(g_[i][i], Rational(-1));
    } else {
      auto adj = sym_adjugate(g_);
      Expr inv_det = Expr::pow(det_, Rational(-1));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ginv_[i][j] = adj[i][j] * inv_det;
    }

    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Expr acc(0);
        for (int l = 0; l < n; ++l) acc = acc + g_[i][l] * ginv_[l][j];
        if (!is_zero(acc - (i == j ? Expr(1) : Expr(0))))
          throw Error("inverse metric failed the symbolic identity check");
      }

    std::vector<std::vector<double>> num(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) num[i][j] = eval_double(g_[i][j], at);
    signature_ = eigen_signs(num);
  }

  const ChartPtr& chart() const { return chart_; }
  int n() const { return chart_->dim(); }
  const Expr& det() const { return det_; }
  const std::vector<int>& signature() const { return signature_; }

  const Expr& lo(int i, int j) const { return g_[i][j]; }
  const Expr& up(int i, int j) const { return ginv_[i][j]; }

  Tensor as_tensor() const {
    Tensor t(chart_, {Var::Co, Var::Co});
    for (int i = 0; i < n(); ++i)
      for (int j = 0; j < n(); ++j) t.at({i, j}) = g_[i][j];
    return t;
  }

  /// g(X, Y) for two contravariant fields.
  Expr inner(const VectorField& x, const VectorField& y) const {
    Expr acc(0);
    for (int i = 0; i < n(); ++i)
      for (int j = 0; j < n(); ++j)
        acc = acc + g_[i][j] * x.at({i}) * y.at({j});
    return acc;
  }

  OneForm lower(const VectorField& x) const {
    OneForm w(chart_, {Var::Co});
    for (int i = 0; i < n(); ++i) {
      Expr acc(0);
      for (int j = 0; j < n(); ++j) acc = acc + g_[i][j] * x.at({j});
      w.at({i}) = acc;
    }
    return w;
  }

  VectorField raise(const OneForm& w) const {
    VectorField x(chart_, {Var::Contra});
    for (int i = 0; i < n(); ++i) {
      Expr acc(0);
      for (int j = 0; j < n(); ++j) acc = acc + ginv_[i][j] * w.at({j});
      x.at({i}) = acc;
    }
    return x;
  }

  /// Metric trace of a (0,2) tensor: g^{ij} T_ij.
  Expr trace(const Tensor& t) const {
    Expr acc(0);
    for (int i = 0; i < n(); ++i)
      for (int j = 0; j < n(); ++j) acc = acc + ginv_[i][j] * t.at({i, j});
    return acc;
  }

 private:
  ChartPtr chart_;
  std::vector<std::vector<Expr>> g_, ginv_;
  Expr det_;
  std::vector<int> signature_;
};

}  // namespace coqe

#endif  // COQE_METRIC_HPP
