#ifndef COQE_QCC_HPP
#define COQE_QCC_HPP

#include <array>

#include "coqe/structure.hpp"

namespace coqe {

/// The thirteen scalars of the comprehensive quasi-constant curvature
/// ansatz; a[0] is a_1 through a[12] = a_13.
struct QCCCoefficients {
  std::array<Expr, 13> a;
};

namespace detail {

// g-wedge block with a symmetric (0,2) payload h:
//   h_{bd}g_{ac} - h_{ad}g_{bc} + h_{ac}g_{bd} - h_{bc}g_{ad}
inline void add_block(Tensor& out, const Expr& coeff, const Metric& g,
                      const std::vector<std::vector<Expr>>& h) {
  if (is_zero(coeff)) return;
  int n = g.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          out.at({a, b, c, d}) =
              out.at({a, b, c, d}) +
              coeff * (h[b][d] * g.lo(a, c) - h[a][d] * g.lo(b, c) +
                       h[a][c] * g.lo(b, d) - h[b][c] * g.lo(a, d));
}

inline std::vector<std::vector<Expr>> outer_sym(const OneForm& u,
                                                const OneForm& v) {
  int n = u.n();
  std::vector<std::vector<Expr>> h(n, std::vector<Expr>(n, Expr(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      h[i][j] = u.at({i}) * v.at({j}) + v.at({i}) * u.at({j});
  return h;
}

}  // namespace detail

/// Builds the (0,4) curvature ansatz: thirteen g-wedge blocks over g itself,
/// the structure tensors d1, d2, the four squared 1-forms and the six
/// symmetrized mixed pairs. The result carries all algebraic curvature
/// symmetries for arbitrary coefficients.
inline Tensor build_qcc_curvature(const QCCCoefficients& q, const Metric& g,
                                  const std::vector<OneForm>& w,
                                  const Tensor& d1, const Tensor& d2) {
  if (g.n() <= 2) throw Error("quasi-constant curvature requires n > 2");
  if (w.size() != 4) throw Error("four 1-forms required");
  int n = g.n();
  Tensor out(g.chart(), {Var::Co, Var::Co, Var::Co, Var::Co});

  // a1 G = (a1/2) g-wedge-g
  std::vector<std::vector<Expr>> gm(n, std::vector<Expr>(n, Expr(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gm[i][j] = g.lo(i, j);
  detail::add_block(out, q.a[0] / Expr(2), g, gm);

  auto tensor_matrix = [&](const Tensor& t) {
    std::vector<std::vector<Expr>> m(n, std::vector<Expr>(n, Expr(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = t.at({i, j});
    return m;
  };
  detail::add_block(out, q.a[1], g, tensor_matrix(d1));  // a2
  detail::add_block(out, q.a[2], g, tensor_matrix(d2));  // a3

  auto single = [&](const OneForm& u) {
    std::vector<std::vector<Expr>> h(n, std::vector<Expr>(n, Expr(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) h[i][j] = u.at({i}) * u.at({j});
    return h;
  };
  for (int i = 0; i < 4; ++i)
    detail::add_block(out, q.a[3 + i], g, single(w[i]));  // a4..a7

  // mixed pair blocks, in the order: (1,2),(1,4),(2,3),(2,4),(3,1),(3,4)
  static const std::pair<int, int> pairs[] = {{0, 1}, {0, 3}, {1, 2},
                                              {1, 3}, {2, 0}, {2, 3}};
  for (int p = 0; p < 6; ++p)
    detail::add_block(out, q.a[7 + p], g,
                      detail::outer_sym(w[pairs[p].first], w[pairs[p].second]));
  return out;
}

/// Contraction coefficient map: b1 = a1(n-1)+a4+a5+a6+a7 and
/// b_k = (n-2) a_{sigma(k)} for the remaining twelve.
inline std::array<Expr, 13> qcc_b_map(const QCCCoefficients& q, int n) {
  std::array<Expr, 13> b;
  Expr nm2(n - 2);
  b[0] = q.a[0] * Expr(n - 1) + q.a[3] + q.a[4] + q.a[5] + q.a[6];
  b[1] = nm2 * q.a[3];
  b[2] = nm2 * q.a[4];
  b[3] = nm2 * q.a[5];
  b[4] = nm2 * q.a[6];
  b[5] = nm2 * q.a[7];
  b[6] = nm2 * q.a[8];
  b[7] = nm2 * q.a[9];
  b[8] = nm2 * q.a[10];
  b[9] = nm2 * q.a[11];
  b[10] = nm2 * q.a[12];
  b[11] = nm2 * q.a[1];
  b[12] = nm2 * q.a[2];
  return b;
}

struct QCCContraction {
  Tensor ricci;                 // g^{ac} R_{abcd} of the built tensor
  std::array<Expr, 13> b;       // b1 = a1(n-1)+a4+a5+a6+a7, b_k = (n-2) a_sigma(k)
  Tensor coefficient_form;          // b1 g + b2 w1w1 + ... + b12 d1 + b13 d2
  Tensor residual;              // ricci - coefficient_form
  bool matches_coefficient_map;     // residual vanishes symbolically
};

/// Ricci-contracts the built ansatz and compares against the
/// b-coefficient form. The match is exact when the 1-forms are orthonormal
/// and the structure tensors are metric-trace-free; deviations otherwise
/// show up in the residual.
inline QCCContraction qcc_contract(const QCCCoefficients& q, const Metric& g,
                                   const std::vector<OneForm>& w,
                                   const Tensor& d1, const Tensor& d2) {
  int n = g.n();
  Tensor R = build_qcc_curvature(q, g, w, d1, d2);
  Tensor ric(g.chart(), {Var::Co, Var::Co});
  for (int b = 0; b < n; ++b)
    for (int d = 0; d < n; ++d) {
      Expr acc(0);
      for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
          if (g.up(a, c).is_zero_literal()) continue;
          acc = acc + g.up(a, c) * R.at({a, b, c, d});
        }
      ric.at({b, d}) = acc;
    }

  QCCContraction out{ric, qcc_b_map(q, n),
                     Tensor(g.chart(), {Var::Co, Var::Co}),
                     Tensor(g.chart(), {Var::Co, Var::Co}), false};
  static const std::pair<int, int> pairs[] = {{0, 1}, {0, 3}, {1, 2},
                                              {1, 3}, {2, 0}, {2, 3}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Expr acc = out.b[0] * g.lo(i, j);
      for (int k = 0; k < 4; ++k)
        acc = acc + out.b[1 + k] * w[k].at({i}) * w[k].at({j});
      for (int p = 0; p < 6; ++p) {
        const auto& u = w[pairs[p].first];
        const auto& v = w[pairs[p].second];
        acc = acc + out.b[5 + p] * (u.at({i}) * v.at({j}) + v.at({i}) * u.at({j}));
      }
      acc = acc + out.b[11] * d1.at({i, j}) + out.b[12] * d2.at({i, j});
      out.coefficient_form.at({i, j}) = acc;
    }
  out.residual = out.ricci - out.coefficient_form;
  out.matches_coefficient_map = out.residual.all_zero_symbolic();
  return out;
}

}  // namespace coqe

#endif  // COQE_QCC_HPP
