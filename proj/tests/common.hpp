#ifndef COQE_TESTS_COMMON_HPP
#define COQE_TESTS_COMMON_HPP

#include <random>
#include <vector>

#include "coqe/curvature.hpp"
#include "coqe/metric.hpp"

namespace coqe::testing {

inline ChartPtr godel_chart() {
  auto t = Expr::symbol("t"), x = Expr::symbol("x"), y = Expr::symbol("y"),
       z = Expr::symbol("z");
  auto k = Expr::symbol("k", /*nonzero=*/true);
  return std::make_shared<Chart>(std::vector<Expr>{t, x, y, z},
                                 std::vector<Expr>{k});
}

/// ds^2 = k^2((dt + e^x dy)^2 - dx^2 - e^{2x}/2 dy^2 - dz^2), coords (t,x,y,z).
inline Metric godel_metric(const ChartPtr& chart) {
  Expr k = chart->params()[0];
  Expr x = chart->coords()[1];
  Expr k2 = k * k;
  Expr ex = Expr::exp(x);
  Expr zero(0);
  std::vector<std::vector<Expr>> g(4, std::vector<Expr>(4, zero));
  g[0][0] = k2;
  g[1][1] = -k2;
  g[2][2] = k2 * Expr::exp(Expr(2) * x) / Expr(2);
  g[3][3] = -k2;
  g[0][2] = g[2][0] = k2 * ex;
  return Metric(chart, g);
}

inline ChartPtr sphere2_chart() {
  auto th = Expr::symbol("theta"), ph = Expr::symbol("phi");
  auto R = Expr::symbol("R", true, true);
  return std::make_shared<Chart>(std::vector<Expr>{th, ph},
                                 std::vector<Expr>{R});
}

inline Metric sphere2_metric(const ChartPtr& chart) {
  Expr R = chart->params()[0];
  Expr th = chart->coords()[0];
  std::vector<std::vector<Expr>> g(2, std::vector<Expr>(2, Expr(0)));
  g[0][0] = R * R;
  g[1][1] = R * R * Expr::pow(Expr::sin(th), Rational(2));
  return Metric(chart, g);
}

inline ChartPtr sphere4_chart() {
  auto a = Expr::symbol("p1"), b = Expr::symbol("p2"), c = Expr::symbol("p3"),
       d = Expr::symbol("p4");
  auto R = Expr::symbol("R", true, true);
  return std::make_shared<Chart>(std::vector<Expr>{a, b, c, d},
                                 std::vector<Expr>{R});
}

/// Round 4-sphere in nested polar coordinates.
inline Metric sphere4_metric(const ChartPtr& chart) {
  Expr R = chart->params()[0];
  std::vector<std::vector<Expr>> g(4, std::vector<Expr>(4, Expr(0)));
  Expr acc = R * R;
  g[0][0] = acc;
  for (int i = 1; i < 4; ++i) {
    acc = acc * Expr::pow(Expr::sin(chart->coords()[i - 1]), Rational(2));
    g[i][i] = acc;
  }
  return Metric(chart, g);
}

inline ChartPtr flat_chart(int n = 4) {
  std::vector<Expr> coords;
  const char* names[] = {"x1", "x2", "x3", "x4", "x5", "x6"};
  for (int i = 0; i < n; ++i) coords.push_back(Expr::symbol(names[i]));
  return std::make_shared<Chart>(coords);
}

inline Metric euclidean_metric(const ChartPtr& chart) {
  int n = chart->dim();
  std::vector<std::vector<Expr>> g(n, std::vector<Expr>(n, Expr(0)));
  for (int i = 0; i < n; ++i) g[i][i] = Expr(1);
  return Metric(chart, g);
}

inline Metric minkowski_metric(const ChartPtr& chart) {
  int n = chart->dim();
  std::vector<std::vector<Expr>> g(n, std::vector<Expr>(n, Expr(0)));
  g[0][0] = Expr(-1);
  for (int i = 1; i < n; ++i) g[i][i] = Expr(1);
  return Metric(chart, g);
}

/// Sparse polynomial metric, diagonally dominant, non-collapsing determinant.
inline Metric polynomial_metric(const ChartPtr& chart) {
  int n = chart->dim();
  std::vector<std::vector<Expr>> g(n, std::vector<Expr>(n, Expr(0)));
  for (int i = 0; i < n; ++i) {
    Expr c = chart->coords()[(i + 1) % n];
    g[i][i] = Expr(1) + c * c;
  }
  g[0][1] = g[1][0] = chart->coords()[n - 1] / Expr(3);
  return Metric(chart, g);
}

inline ChartPtr product_sphere_chart() {
  auto t1 = Expr::symbol("t1"), f1 = Expr::symbol("f1"), t2 = Expr::symbol("t2"),
       f2 = Expr::symbol("f2");
  auto r1 = Expr::symbol("R1", true, true), r2 = Expr::symbol("R2", true, true);
  return std::make_shared<Chart>(std::vector<Expr>{t1, f1, t2, f2},
                                 std::vector<Expr>{r1, r2});
}

/// S^2(R1) x S^2(R2): Einstein on each block, a generalized quasi-Einstein
/// structure with orthonormal generators overall.
inline Metric product_sphere_metric(const ChartPtr& chart) {
  Expr r1 = chart->params()[0], r2 = chart->params()[1];
  Expr t1 = chart->coords()[0], t2 = chart->coords()[2];
  std::vector<std::vector<Expr>> g(4, std::vector<Expr>(4, Expr(0)));
  g[0][0] = r1 * r1;
  g[1][1] = r1 * r1 * Expr::pow(Expr::sin(t1), Rational(2));
  g[2][2] = r2 * r2;
  g[3][3] = r2 * r2 * Expr::pow(Expr::sin(t2), Rational(2));
  return Metric(chart, g);
}

/// Seeded random diagonal polynomial metric: g_ii = 1 + c_i x_{p(i)}^2 with
/// small rational c_i. Curved, generic Weyl/Cotton, cheap symbolics.
inline Metric random_diag_metric(const ChartPtr& chart, unsigned seed) {
  int n = chart->dim();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(1, 3), den(2, 5), pick(0, n - 1);
  std::vector<std::vector<Expr>> g(n, std::vector<Expr>(n, Expr(0)));
  for (int i = 0; i < n; ++i) {
    Expr c = chart->coords()[pick(rng)];
    g[i][i] = Expr(1) + Expr(Rational(num(rng), den(rng))) * c * c;
  }
  return Metric(chart, g);
}

}  // namespace coqe::testing

#endif
