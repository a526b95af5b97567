#ifndef COQE_CURVATURE_HPP
#define COQE_CURVATURE_HPP

#include <optional>
#include <vector>

#include "coqe/diff.hpp"
#include "coqe/metric.hpp"

namespace coqe {

/// Levi-Civita curvature pipeline. Sign convention, fixed so that the
/// worked fixtures reproduce their published Ricci components:
///   R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb}
///             + Gamma^a_{ce} Gamma^e_{db} - Gamma^a_{de} Gamma^e_{cb}
///   R_{abcd}  = g_{ae} R^e_{bcd},   S_{bd} = R^a_{bad},   r = g^{bd} S_{bd}
class CurvatureBundle {
 public:
  static CurvatureBundle compute(const Metric& g) {
    CurvatureBundle b(g);
    b.build();
    return b;
  }

  const Metric& metric() const { return g_; }
  const ChartPtr& chart() const { return g_.chart(); }
  int n() const { return g_.n(); }
  const Tensor& christoffel() const { return gamma_; }
  const Tensor& riemann() const { return riemann_; }         // (0,4)
  const Tensor& riemann_updown() const { return riemann13_; }  // R^a_{bcd}
  const Tensor& ricci() const { return ricci_; }
  const Expr& scalar_curvature() const { return scalar_; }
  const Tensor& ricci_operator() const { return qop_; }  // Q^a_b

  /// Covariant derivative; the new covariant index comes first:
  /// result(c; i...) = (nabla_c T)(i...).
  Tensor covariant_derivative(const Tensor& t) const {
    int n = g_.n();
    std::vector<Var> var{Var::Co};
    for (auto v : t.variance()) var.push_back(v);
    Tensor out(g_.chart(), var);
    t.for_each([&](const std::vector<int>& t_idx, const Expr& value) {
      for (int c = 0; c < n; ++c) {
        Expr acc = differentiate(value, g_.chart()->coord_name(c));
        for (int slot = 0; slot < t.rank(); ++slot) {
          for (int e = 0; e < n; ++e) {
            std::vector<int> swapped = t_idx;
            swapped[slot] = e;
            if (t.variance()[slot] == Var::Co) {
              if (!gamma_.at({e, c, t_idx[slot]}).is_zero_literal())
                acc = acc - gamma_.at({e, c, t_idx[slot]}) * t.at(swapped);
            } else {
              if (!gamma_.at({t_idx[slot], c, e}).is_zero_literal())
                acc = acc + gamma_.at({t_idx[slot], c, e}) * t.at(swapped);
            }
          }
        }
        std::vector<int> out_idx;
        out_idx.reserve(t.rank() + 1);
        out_idx.push_back(c);
        for (int i : t_idx) out_idx.push_back(i);
        out.at(out_idx) = acc;
      }
    });
    return out;
  }

  /// Gradient one-form of a scalar.
  OneForm gradient(const Expr& f) const {
    OneForm w(g_.chart(), {Var::Co});
    for (int i = 0; i < n(); ++i)
      w.at({i}) = differentiate(f, g_.chart()->coord_name(i));
    return w;
  }

  /// First Beltrami symbol |grad f|^2 = g^{ab} f_,a f_,b.
  Expr grad_norm2(const Expr& f) const {
    Expr acc(0);
    for (int a = 0; a < n(); ++a)
      for (int b = 0; b < n(); ++b)
        acc = acc + g_.up(a, b) * differentiate(f, g_.chart()->coord_name(a)) *
                        differentiate(f, g_.chart()->coord_name(b));
    return acc;
  }

  /// Laplace-Beltrami of a scalar: g^{ab}(f_,ab - Gamma^c_{ab} f_,c).
  Expr laplacian(const Expr& f) const {
    Expr acc(0);
    for (int a = 0; a < n(); ++a)
      for (int b = 0; b < n(); ++b) {
        Expr second = differentiate(differentiate(f, g_.chart()->coord_name(a)),
                                    g_.chart()->coord_name(b));
        for (int c = 0; c < n(); ++c)
          second = second -
                   gamma_.at({c, a, b}) * differentiate(f, g_.chart()->coord_name(c));
        acc = acc + g_.up(a, b) * second;
      }
    return acc;
  }

  /// S^k(X,Y) = g(Q^k X, Y); k >= 1. S^1 is the Ricci tensor itself.
  Tensor ricci_power(int k) const {
    if (k < 1) throw Error("ricci_power requires k >= 1");
    int nn = n();
    // matrix power of Q^a_b
    std::vector<std::vector<Expr>> q(nn, std::vector<Expr>(nn, Expr(0)));
    for (int a = 0; a < nn; ++a)
      for (int b = 0; b < nn; ++b) q[a][b] = qop_.at({a, b});
    std::vector<std::vector<Expr>> acc = q;
    for (int step = 1; step < k; ++step) {
      std::vector<std::vector<Expr>> next(nn, std::vector<Expr>(nn, Expr(0)));
      for (int a = 0; a < nn; ++a)
        for (int b = 0; b < nn; ++b) {
          Expr s(0);
          for (int c = 0; c < nn; ++c) s = s + acc[a][c] * q[c][b];
          next[a][b] = s;
        }
      acc = std::move(next);
    }
    Tensor out(g_.chart(), {Var::Co, Var::Co});
    for (int a = 0; a < nn; ++a)
      for (int b = 0; b < nn; ++b) {
        Expr s(0);
        for (int c = 0; c < nn; ++c) s = s + g_.lo(c, b) * acc[c][a];
        out.at({a, b}) = s;
      }
    return out;
  }

  /// Divergence over slot `slot` of a covariant tensor:
  /// (div T)(rest) = g^{ce} (nabla_e T)(... c at slot ...).
  Tensor divergence(const Tensor& t, int slot = 0) const {
    for (auto v : t.variance())
      if (v != Var::Co) throw Error("divergence expects a covariant tensor");
    Tensor grad = covariant_derivative(t);  // (e; i0...ik)
    std::vector<Var> var(t.rank() - 1, Var::Co);
    Tensor out(g_.chart(), var);
    int nn = n();
    std::vector<std::vector<int>> tuples;
    out.for_each([&](const std::vector<int>& oi, const Expr&) {
      tuples.push_back(oi);
    });
    for (const auto& oi : tuples) {
      Expr acc(0);
      for (int c = 0; c < nn; ++c)
        for (int e = 0; e < nn; ++e) {
          if (g_.up(c, e).is_zero_literal()) continue;
          std::vector<int> gi;
          gi.push_back(e);
          int oj = 0;
          for (int s = 0; s < t.rank(); ++s) {
            if (s == slot)
              gi.push_back(c);
            else
              gi.push_back(oi[oj++]);
          }
          acc = acc + g_.up(c, e) * grad.at(gi);
        }
      out.at(oi) = acc;
    }
    return out;
  }

  /// Sectional curvature K(X,Y) = R(X,Y,X,Y) / (g(X,X)g(Y,Y) - g(X,Y)^2),
  /// positive for the round sphere under this component convention.
  Expr sectional_curvature(const VectorField& x, const VectorField& y) const {
    Expr gxx = g_.inner(x, x), gyy = g_.inner(y, y), gxy = g_.inner(x, y);
    Expr denom = gxx * gyy - gxy * gxy;
    Bindings at = g_.chart()->sample_bindings();
    double d;
    try {
      d = eval_double(denom, at);
    } catch (const Error&) {
      d = 0;
    }
    if (std::fabs(d) < 1e-12)
      throw Error("sectional curvature of a degenerate plane");
    Expr num(0);
    int nn = n();
    for (int a = 0; a < nn; ++a)
      for (int b = 0; b < nn; ++b)
        for (int c = 0; c < nn; ++c)
          for (int dd = 0; dd < nn; ++dd)
            num = num + riemann_.at({a, b, c, dd}) * x.at({a}) * y.at({b}) *
                            x.at({c}) * y.at({dd});
    return num / denom;
  }

 private:
  explicit CurvatureBundle(const Metric& g)
      : g_(g),
        gamma_(g.chart(), {Var::Contra, Var::Co, Var::Co}),
        riemann13_(g.chart(), {Var::Contra, Var::Co, Var::Co, Var::Co}),
        riemann_(g.chart(), {Var::Co, Var::Co, Var::Co, Var::Co}),
        ricci_(g.chart(), {Var::Co, Var::Co}),
        qop_(g.chart(), {Var::Contra, Var::Co}) {}

  void build() {
    int n = g_.n();
    const Chart& chart = *g_.chart();
    // Gamma^a_{bc} = (1/2) g^{ad} (d_b g_{dc} + d_c g_{db} - d_d g_{bc})
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = b; c < n; ++c) {
          Expr acc(0);
          for (int d = 0; d < n; ++d) {
            if (g_.up(a, d).is_zero_literal()) continue;
            Expr inner = differentiate(g_.lo(d, c), chart.coord_name(b)) +
                         differentiate(g_.lo(d, b), chart.coord_name(c)) -
                         differentiate(g_.lo(b, c), chart.coord_name(d));
            acc = acc + g_.up(a, d) * inner;
          }
          acc = Expr(Rational(1, 2)) * acc;
          gamma_.at({a, b, c}) = acc;
          gamma_.at({a, c, b}) = acc;
        }

    // R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb}
    //           + Gamma^a_{ce} Gamma^e_{db} - Gamma^a_{de} Gamma^e_{cb}
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = c + 1; d < n; ++d) {
            Expr acc = differentiate(gamma_.at({a, d, b}), chart.coord_name(c)) -
                       differentiate(gamma_.at({a, c, b}), chart.coord_name(d));
            for (int e = 0; e < n; ++e) {
              acc = acc + gamma_.at({a, c, e}) * gamma_.at({e, d, b}) -
                    gamma_.at({a, d, e}) * gamma_.at({e, c, b});
            }
            riemann13_.at({a, b, c, d}) = acc;
            riemann13_.at({a, b, d, c}) = -acc;
          }

    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = c; d < n; ++d) {
            Expr acc(0);
            for (int e = 0; e < n; ++e) {
              if (g_.lo(a, e).is_zero_literal()) continue;
              acc = acc + g_.lo(a, e) * riemann13_.at({e, b, c, d});
            }
            riemann_.at({a, b, c, d}) = acc;
            if (d != c) riemann_.at({a, b, d, c}) = -acc;
          }

    for (int b = 0; b < n; ++b)
      for (int d = b; d < n; ++d) {
        Expr acc(0);
        for (int a = 0; a < n; ++a) acc = acc + riemann13_.at({a, b, a, d});
        ricci_.at({b, d}) = acc;
        ricci_.at({d, b}) = acc;
      }

    scalar_ = Expr(0);
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        scalar_ = scalar_ + g_.up(b, d) * ricci_.at({b, d});

    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Expr acc(0);
        for (int c = 0; c < n; ++c) acc = acc + g_.up(a, c) * ricci_.at({c, b});
        qop_.at({a, b}) = acc;
      }
  }

  Metric g_;
  Tensor gamma_, riemann13_, riemann_, ricci_, qop_;
  Expr scalar_;
};

}  // namespace coqe

#endif  // COQE_CURVATURE_HPP
