#ifndef COQE_CONFORMAL_HPP
#define COQE_CONFORMAL_HPP

#include "coqe/curvature.hpp"

namespace coqe {

/// G_{abcd} = g_{ac} g_{bd} - g_{ad} g_{bc}; constant curvature K means
/// R = K G under this component convention.
inline Tensor g_tensor(const Metric& g) {
  int n = g.n();
  Tensor t(g.chart(), {Var::Co, Var::Co, Var::Co, Var::Co});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          t.at({a, b, c, d}) = g.lo(a, c) * g.lo(b, d) - g.lo(a, d) * g.lo(b, c);
  return t;
}

/// Kulkarni-Nomizu product of two symmetric (0,2) tensors:
/// (a^b)_{abcd} = a_{ac}b_{bd} + a_{bd}b_{ac} - a_{bc}b_{ad} - a_{ad}b_{bc}.
/// Satisfies (1/2) g^g = G.
inline Tensor kulkarni_nomizu(const Tensor& alpha, const Tensor& beta) {
  if (alpha.rank() != 2 || beta.rank() != 2)
    throw Error("kulkarni_nomizu expects (0,2) tensors");
  if (!alpha.symmetric2() || !beta.symmetric2())
    throw Error("kulkarni_nomizu expects symmetric tensors");
  int n = alpha.n();
  Tensor t(alpha.chart(), {Var::Co, Var::Co, Var::Co, Var::Co});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          t.at({a, b, c, d}) = alpha.at({a, c}) * beta.at({b, d}) +
                               alpha.at({b, d}) * beta.at({a, c}) -
                               alpha.at({b, c}) * beta.at({a, d}) -
                               alpha.at({a, d}) * beta.at({b, c});
  return t;
}

/// Weyl conformal curvature (0,4), fully trace-free, zero iff conformally
/// flat for n > 3:
///   C = R - 1/(n-2) (g_{ac}S_{bd} - g_{ad}S_{bc} + S_{ac}g_{bd} - S_{ad}g_{bc})
///         + r/((n-1)(n-2)) (g_{ac}g_{bd} - g_{ad}g_{bc})
inline Tensor weyl(const CurvatureBundle& b) {
  int n = b.n();
  if (n <= 2) throw Error("weyl tensor requires dimension > 2");
  const Metric& g = b.metric();
  const Tensor& S = b.ricci();
  const Tensor& R = b.riemann();
  Expr c1 = Expr(1) / Expr(n - 2);
  Expr c2 = b.scalar_curvature() / Expr((n - 1) * (n - 2));
  Tensor t(b.chart(), {Var::Co, Var::Co, Var::Co, Var::Co});
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          Expr mid = g.lo(a, c) * S.at({bb, d}) - g.lo(a, d) * S.at({bb, c}) +
                     S.at({a, c}) * g.lo(bb, d) - S.at({a, d}) * g.lo(bb, c);
          Expr last = g.lo(a, c) * g.lo(bb, d) - g.lo(a, d) * g.lo(bb, c);
          t.at({a, bb, c, d}) =
              R.at({a, bb, c, d}) - c1 * mid + c2 * last;
        }
  return t;
}

/// Cotton tensor (0,3), antisymmetric in its last two slots:
///   C_{abc} = nabla_c S_{ab} - nabla_b S_{ac}
///             - 1/(2(n-1)) (r_,c g_{ab} - r_,b g_{ac})
inline Tensor cotton(const CurvatureBundle& b) {
  int n = b.n();
  if (n < 3) throw Error("cotton tensor requires dimension >= 3");
  Tensor ds = b.covariant_derivative(b.ricci());  // (e; a, b)
  OneForm dr = b.gradient(b.scalar_curvature());
  const Metric& g = b.metric();
  Expr c = Expr(1) / Expr(2 * (n - 1));
  Tensor t(b.chart(), {Var::Co, Var::Co, Var::Co});
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb)
      for (int cc = 0; cc < n; ++cc)
        t.at({a, bb, cc}) = ds.at({cc, a, bb}) - ds.at({bb, a, cc}) -
                            c * (dr.at({cc}) * g.lo(a, bb) -
                                 dr.at({bb}) * g.lo(a, cc));
  return t;
}

/// Covariant divergence of the Weyl tensor over its first slot, indexed
/// (b,c,d). Identity: div_weyl = -(n-3)/(n-2) * cotton, componentwise.
inline Tensor div_weyl(const CurvatureBundle& b) {
  if (b.n() < 3) throw Error("div_weyl requires dimension >= 3");
  return b.divergence(weyl(b), 0);
}

/// Conformally rescaled metric e^{2 sigma} g.
inline Metric conformal_rescale(const Metric& g, const Expr& sigma) {
  int n = g.n();
  Expr factor = Expr::exp(Expr(2) * sigma);
  std::vector<std::vector<Expr>> comp(n, std::vector<Expr>(n, Expr(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) comp[i][j] = factor * g.lo(i, j);
  return Metric(g.chart(), comp);
}

/// Deviation from the conharmonic condition
///   Delta sigma = -(n-2)/2 |grad sigma|^2,
/// returned as Delta sigma + (n-2)/2 |grad sigma|^2 (zero iff conharmonic).
inline Expr conharmonic_defect(const CurvatureBundle& b, const Expr& sigma) {
  int n = b.n();
  return b.laplacian(sigma) +
         Expr(Rational(n - 2, 2)) * b.grad_norm2(sigma);
}

struct ConformalConstants {
  Expr mu;   // sigma(Ric) constant of the non-homothetic branch
  Expr rho;  // concircular function of the grad-sigma branch
};

/// mu = ((2-n)(n-1)|grad|^2 - r) / (2(n-1) r)
inline Expr conformal_mu(int n, const Expr& grad2, const Expr& r) {
  return (Expr((2 - n) * (n - 1)) * grad2 - r) / (Expr(2 * (n - 1)) * r);
}

/// rho = ((n-2)(1-n) Delta_1 sigma - b22 - b33 - b44) / ((n+2)(n-1)),
/// Delta_1 sigma being the first Beltrami symbol |grad sigma|^2.
inline Expr conformal_rho(int n, const Expr& grad2, const Expr& b22,
                          const Expr& b33, const Expr& b44) {
  return (Expr((n - 2) * (1 - n)) * grad2 - b22 - b33 - b44) /
         Expr((n + 2) * (n - 1));
}

inline ConformalConstants conformal_mapping_constants(const CurvatureBundle& b,
                                                      const Expr& sigma,
                                                      const Expr& b22,
                                                      const Expr& b33,
                                                      const Expr& b44) {
  int n = b.n();
  if (n <= 2) throw Error("conformal mapping constants require n > 2");
  const Expr& r = b.scalar_curvature();
  if (is_zero(r)) throw Error("mu is undefined when the scalar curvature vanishes");
  Expr grad2 = b.grad_norm2(sigma);
  return {conformal_mu(n, grad2, r), conformal_rho(n, grad2, b22, b33, b44)};
}

}  // namespace coqe

#endif  // COQE_CONFORMAL_HPP
