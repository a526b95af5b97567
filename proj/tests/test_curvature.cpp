#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "common.hpp"
#include "coqe/equiv.hpp"

using namespace coqe;
using namespace coqe::testing;

namespace {

void check_riemann_symmetries(const CurvatureBundle& b) {
  const Tensor& R = b.riemann();
  int n = b.n();
  for (int a = 0; a < n; ++a)
    for (int bb = a; bb < n; ++bb)
      for (int c = 0; c < n; ++c)
        for (int d = c; d < n; ++d) {
          CHECK(is_zero(R.at({a, bb, c, d}) + R.at({bb, a, c, d})));
          CHECK(is_zero(R.at({a, bb, c, d}) + R.at({a, bb, d, c})));
          CHECK(is_zero(R.at({a, bb, c, d}) - R.at({c, d, a, bb})));
          CHECK(is_zero(R.at({a, bb, c, d}) + R.at({a, c, d, bb}) +
                        R.at({a, d, bb, c})));
        }
}

void check_nabla_g_zero(const CurvatureBundle& b) {
  Tensor dg = b.covariant_derivative(b.metric().as_tensor());
  CHECK(dg.all_zero_symbolic());
}

void check_contracted_bianchi(const CurvatureBundle& b) {
  Tensor div_s = b.divergence(b.ricci(), 0);
  for (int c = 0; c < b.n(); ++c) {
    Expr half_dr = Expr(Rational(1, 2)) *
                   differentiate(b.scalar_curvature(), b.chart()->coord_name(c));
    CHECK(is_zero(div_s.at({c}) - half_dr));
  }
}

}  // namespace

TEST_CASE("godel christoffel symbols match the published list") {
  auto chart = godel_chart();
  auto bundle = CurvatureBundle::compute(godel_metric(chart));
  Expr x = chart->coords()[1];
  Expr ex = Expr::exp(x);
  const Tensor& G = bundle.christoffel();
  // coordinates (t,x,y,z) are indices (0,1,2,3)
  CHECK(G.at({0, 0, 1}) == Expr(1));
  CHECK(G.at({0, 1, 2}) == ex / Expr(2));
  CHECK(G.at({1, 0, 2}) == ex / Expr(2));
  CHECK(G.at({1, 2, 2}) == Expr::exp(Expr(2) * x) / Expr(2));
  CHECK(G.at({2, 0, 1}) == -Expr::exp(-x));
  // exactly the five known symbols and their (b,c) mirrors are nonzero
  G.for_each([&](const std::vector<int>& idx, const Expr& e) {
    bool listed = (idx == std::vector<int>{0, 0, 1}) ||
                  (idx == std::vector<int>{0, 1, 0}) ||
                  (idx == std::vector<int>{0, 1, 2}) ||
                  (idx == std::vector<int>{0, 2, 1}) ||
                  (idx == std::vector<int>{1, 0, 2}) ||
                  (idx == std::vector<int>{1, 2, 0}) ||
                  (idx == std::vector<int>{1, 2, 2}) ||
                  (idx == std::vector<int>{2, 0, 1}) ||
                  (idx == std::vector<int>{2, 1, 0});
    CHECK(e.is_zero_literal() == !listed);
  });
}

TEST_CASE("godel ricci and scalar curvature") {
  auto chart = godel_chart();
  auto bundle = CurvatureBundle::compute(godel_metric(chart));
  Expr x = chart->coords()[1];
  Expr k = chart->params()[0];
  const Tensor& S = bundle.ricci();
  CHECK(S.at({0, 0}) == Expr(1));
  CHECK(S.at({0, 2}) == Expr::exp(x));
  CHECK(S.at({2, 2}) == Expr::exp(Expr(2) * x));
  int nonzero = 0;
  S.for_each([&](const std::vector<int>&, const Expr& e) {
    if (!e.is_zero_literal()) ++nonzero;
  });
  CHECK(nonzero == 4);
  // contraction of the listed S with the listed inverse gives +1/k^2
  CHECK(is_zero(bundle.scalar_curvature() - Expr(1) / (k * k)));
}

TEST_CASE("godel signature and inverse metric") {
  auto chart = godel_chart();
  Metric g = godel_metric(chart);
  Expr k = chart->params()[0];
  Expr x = chart->coords()[1];
  CHECK(is_zero(g.up(0, 0) + Expr(1) / (k * k)));
  CHECK(is_zero(g.up(2, 2) + Expr(2) * Expr::exp(Expr(-2) * x) / (k * k)));
  CHECK(is_zero(g.up(0, 2) - Expr(2) * Expr::exp(-x) / (k * k)));
  int plus = 0, minus = 0;
  for (int s : g.signature()) (s > 0 ? plus : minus)++;
  CHECK(plus == 1);
  CHECK(minus == 3);
}

TEST_CASE("flat metrics have zero curvature") {
  auto chart = flat_chart(4);
  auto e = CurvatureBundle::compute(euclidean_metric(chart));
  CHECK(e.christoffel().all_zero_literal());
  CHECK(e.riemann().all_zero_literal());
  CHECK(e.ricci().all_zero_literal());
  CHECK(e.scalar_curvature().is_zero_literal());
  auto m = CurvatureBundle::compute(minkowski_metric(chart));
  CHECK(m.riemann().all_zero_literal());
}

TEST_CASE("round 2-sphere curvature") {
  auto chart = sphere2_chart();
  auto bundle = CurvatureBundle::compute(sphere2_metric(chart));
  Expr th = chart->coords()[0];
  Expr R = chart->params()[0];
  const Tensor& G = bundle.christoffel();
  CHECK(is_zero(G.at({0, 1, 1}) + Expr::sin(th) * Expr::cos(th)));
  CHECK(is_zero(G.at({1, 0, 1}) - Expr::cos(th) / Expr::sin(th)));
  CHECK(is_zero(bundle.riemann().at({0, 1, 0, 1}) -
                R * R * Expr::pow(Expr::sin(th), Rational(2))));
  // S = (1/R^2) g, r = 2/R^2
  CHECK(is_zero(bundle.scalar_curvature() - Expr(2) / (R * R)));
  VectorField dth = make_vector(chart, {Expr(1), Expr(0)});
  VectorField dph = make_vector(chart, {Expr(0), Expr(1)});
  CHECK(is_zero(bundle.sectional_curvature(dth, dph) - Expr(1) / (R * R)));
}

TEST_CASE("sectional curvature of a degenerate plane is an error") {
  auto chart = flat_chart(3);
  auto bundle = CurvatureBundle::compute(euclidean_metric(chart));
  VectorField v = make_vector(chart, {Expr(1), Expr(0), Expr(0)});
  CHECK_THROWS_AS(bundle.sectional_curvature(v, v), Error);
  VectorField w = make_vector(chart, {Expr(0), Expr(1), Expr(0)});
  CHECK(bundle.sectional_curvature(v, w).is_zero_literal());
}

TEST_CASE("riemann symmetries, bianchi, nabla g on fixtures") {
  {
    auto chart = godel_chart();
    auto b = CurvatureBundle::compute(godel_metric(chart));
    check_riemann_symmetries(b);
    check_nabla_g_zero(b);
    check_contracted_bianchi(b);
  }
  {
    auto chart = sphere2_chart();
    auto b = CurvatureBundle::compute(sphere2_metric(chart));
    check_riemann_symmetries(b);
    check_nabla_g_zero(b);
    check_contracted_bianchi(b);
  }
  {
    auto chart = flat_chart(3);
    auto b = CurvatureBundle::compute(polynomial_metric(chart));
    check_riemann_symmetries(b);
    check_nabla_g_zero(b);
    check_contracted_bianchi(b);
  }
}

TEST_CASE("scalar covariant derivative is the gradient") {
  auto chart = godel_chart();
  auto bundle = CurvatureBundle::compute(godel_metric(chart));
  Expr x = chart->coords()[1];
  Expr f = Expr::exp(Expr(2) * x);
  OneForm df = bundle.gradient(f);
  CHECK(df.at({0}).is_zero_literal());
  CHECK(df.at({1}) == Expr(2) * f);
  CHECK(df.at({2}).is_zero_literal());
  CHECK(df.at({3}).is_zero_literal());
}

TEST_CASE("nabla S vanishes on constant-curvature spaces") {
  auto chart = sphere2_chart();
  auto bundle = CurvatureBundle::compute(sphere2_metric(chart));
  Tensor ds = bundle.covariant_derivative(bundle.ricci());
  CHECK(ds.all_zero_symbolic());
}

TEST_CASE("ricci_power") {
  {
    auto chart = sphere2_chart();
    auto b = CurvatureBundle::compute(sphere2_metric(chart));
    Expr R = chart->params()[0];
    Tensor s2 = b.ricci_power(2);
    Tensor expect = Expr::pow(R, Rational(-4)) * b.metric().as_tensor();
    CHECK((s2 - expect).all_zero_symbolic());
    Tensor s1 = b.ricci_power(1);
    CHECK((s1 - b.ricci()).all_zero_symbolic());
  }
  {
    auto chart = flat_chart(3);
    auto b = CurvatureBundle::compute(euclidean_metric(chart));
    CHECK(b.ricci_power(3).all_zero_literal());
    CHECK_THROWS_AS(b.ricci_power(0), Error);
  }
  {
    // godel S^2 against an explicit 4x4 matrix oracle at a random point
    auto chart = godel_chart();
    auto b = CurvatureBundle::compute(godel_metric(chart));
    Tensor s2 = b.ricci_power(2);
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(0.2, 1.1);
    Bindings at;
    at["t"] = Value(dist(rng));
    at["x"] = Value(dist(rng));
    at["y"] = Value(dist(rng));
    at["z"] = Value(dist(rng));
    at["k"] = Value(dist(rng) + 0.5);
    double q[4][4], gl[4][4];
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        q[i][j] = eval_double(b.ricci_operator().at({i, j}), at);
        gl[i][j] = eval_double(b.metric().lo(i, j), at);
      }
    for (int a = 0; a < 4; ++a)
      for (int bb = 0; bb < 4; ++bb) {
        double qq = 0;
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) qq += gl[c][bb] * q[c][d] * (d == a);
        // g(Q^2 X, Y): Q^2 first
        double q2[4][4] = {};
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            for (int l = 0; l < 4; ++l) q2[i][j] += q[i][l] * q[l][j];
        double expect = 0;
        for (int c = 0; c < 4; ++c) expect += gl[c][bb] * q2[c][a];
        double got = eval_double(s2.at({a, bb}), at);
        CHECK(std::fabs(got - expect) <= 1e-9 * std::max(1.0, std::fabs(expect)));
        (void)qq;
      }
  }
}

TEST_CASE("christoffel validated by finite differences of g") {
  auto chart = flat_chart(3);
  Metric g = polynomial_metric(chart);
  auto bundle = CurvatureBundle::compute(g);
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> dist(-0.4, 0.6);
  int n = 3;
  double h = 1e-6;
  for (int trial = 0; trial < 5; ++trial) {
    Bindings at;
    for (int i = 0; i < n; ++i) at[chart->coord_name(i)] = Value(dist(rng));
    // numeric dg and inverse at the point
    double dg[3][3][3];
    for (int d = 0; d < n; ++d) {
      Bindings hi = at, lo = at;
      hi[chart->coord_name(d)] = Value(at.at(chart->coord_name(d)).as_double() + h);
      lo[chart->coord_name(d)] = Value(at.at(chart->coord_name(d)).as_double() - h);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          dg[d][i][j] =
              (eval_double(g.lo(i, j), hi) - eval_double(g.lo(i, j), lo)) / (2 * h);
    }
    double up[3][3];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) up[i][j] = eval_double(g.up(i, j), at);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          double fd = 0;
          for (int d = 0; d < n; ++d)
            fd += 0.5 * up[a][d] * (dg[b][d][c] + dg[c][d][b] - dg[d][b][c]);
          double sym = eval_double(bundle.christoffel().at({a, b, c}), at);
          CHECK(std::fabs(fd - sym) <= 1e-5 * std::max(1.0, std::fabs(sym)));
        }
  }
}

TEST_CASE("non-invertible metric is rejected") {
  auto chart = flat_chart(2);
  std::vector<std::vector<Expr>> g(2, std::vector<Expr>(2, Expr(0)));
  g[0][0] = Expr(1);
  g[0][1] = g[1][0] = Expr(1);
  g[1][1] = Expr(1);  // det = 0 everywhere
  CHECK_THROWS_AS(Metric(chart, g), Error);
}

TEST_CASE("asymmetric metric is rejected") {
  auto chart = flat_chart(2);
  std::vector<std::vector<Expr>> g(2, std::vector<Expr>(2, Expr(0)));
  g[0][0] = Expr(1);
  g[1][1] = Expr(1);
  g[0][1] = Expr(1);
  g[1][0] = Expr(2);
  CHECK_THROWS_AS(Metric(chart, g), Error);
}
