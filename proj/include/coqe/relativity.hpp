#ifndef COQE_RELATIVITY_HPP
#define COQE_RELATIVITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coqe/conformal.hpp"
#include "coqe/structure.hpp"

namespace coqe {

/// One viscous fluid: energy density, isotropic pressure, shear viscosity,
/// symmetric shear tensor, velocity 1-form and heat-flux 1-form.
struct FluidComponent {
  Expr sigma, p, zeta;
  Tensor shear;     // (0,2) symmetric
  OneForm velocity;
  OneForm heat;

  FluidComponent(Expr sigma_, Expr p_, Expr zeta_, Tensor shear_,
                 OneForm velocity_, OneForm heat_)
      : sigma(std::move(sigma_)),
        p(std::move(p_)),
        zeta(std::move(zeta_)),
        shear(std::move(shear_)),
        velocity(std::move(velocity_)),
        heat(std::move(heat_)) {
    if (shear.rank() != 2 || !shear.symmetric2())
      throw Error("fluid shear tensor must be symmetric (0,2)");
  }

  static FluidComponent zero(const ChartPtr& chart) {
    return FluidComponent(Expr(0), Expr(0), Expr(0),
                          Tensor(chart, {Var::Co, Var::Co}),
                          OneForm(chart, {Var::Co}), OneForm(chart, {Var::Co}));
  }
};

/// kappa multiplies T and Lambda multiplies g in the field equation
///   S - (r/2) g + Lambda g = kappa T,
/// regardless of how the surrounding prose names the two constants.
struct GravConstants {
  Expr kappa, lambda;
};

/// Normalization report for the two-fluid data: velocity normalizations
/// omega(W) = -1, heat normalizations q(Q) = 1 and the listed
/// cross-orthogonality conditions. Deviations are flagged, not fatal.
inline std::vector<ConstraintCheck> fluid_normalization_report(
    const Metric& g, const FluidComponent& fr, const FluidComponent& fm) {
  auto pairing = [&](const OneForm& u, const OneForm& v) {
    Expr acc(0);
    for (int i = 0; i < g.n(); ++i)
      for (int j = 0; j < g.n(); ++j)
        acc = acc + g.up(i, j) * u.at({i}) * v.at({j});
    return acc;
  };
  std::vector<ConstraintCheck> out;
  auto check = [&](const std::string& name, const Expr& got, const Expr& want) {
    bool ok = is_zero(got - want);
    out.push_back({name, ok ? Verdict::Pass : Verdict::Flagged, got.str()});
  };
  check("omega_r(W_r) = -1", pairing(fr.velocity, fr.velocity), Expr(-1));
  check("omega_m(W_m) = -1", pairing(fm.velocity, fm.velocity), Expr(-1));
  check("q_r(Q_r) = 1", pairing(fr.heat, fr.heat), Expr(1));
  check("q_m(Q_m) = 1", pairing(fm.heat, fm.heat), Expr(1));
  check("omega_m(W_r) = 0", pairing(fm.velocity, fr.velocity), Expr(0));
  check("q_r(Q_m) = 0", pairing(fr.heat, fm.heat), Expr(0));
  check("q_r(W_m) = 0", pairing(fr.heat, fm.velocity), Expr(0));
  check("omega_r(Q_m) = 0", pairing(fr.velocity, fm.heat), Expr(0));
  return out;
}

/// Two-fluid stress-energy:
///   T = p_r g + (sigma_r + p_r) w^r w^r - zeta_r e_r + q^r w^r + w^r q^r
///     + (same with the matter component). Symmetric by construction.
inline Tensor stress_energy(const FluidComponent& fr, const FluidComponent& fm,
                            const Metric& g) {
  int n = g.n();
  Tensor t(g.chart(), {Var::Co, Var::Co});
  auto add_fluid = [&](const FluidComponent& f) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Expr acc = f.p * g.lo(i, j) +
                   (f.sigma + f.p) * f.velocity.at({i}) * f.velocity.at({j}) -
                   f.zeta * f.shear.at({i, j}) +
                   f.heat.at({i}) * f.velocity.at({j}) +
                   f.heat.at({j}) * f.velocity.at({i});
        t.at({i, j}) = t.at({i, j}) + acc;
      }
  };
  add_fluid(fr);
  add_fluid(fm);
  return t;
}

/// S - (r/2) g + Lambda g - kappa T; zero certifies the field equations.
inline Tensor efe_residual(const CurvatureBundle& b, const Tensor& t,
                           const GravConstants& k) {
  if (t.rank() != 2 || !t.symmetric2())
    throw Error("stress-energy tensor must be symmetric (0,2)");
  int n = b.n();
  Tensor out(b.chart(), {Var::Co, Var::Co});
  Expr half_r = b.scalar_curvature() / Expr(2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.at({i, j}) = b.ricci().at({i, j}) -
                       half_r * b.metric().lo(i, j) +
                       k.lambda * b.metric().lo(i, j) - k.kappa * t.at({i, j});
  return out;
}

struct FluidRicci {
  Tensor s;  // the Ricci tensor the field equations force
  // comprehensive quasi-Einstein pattern; absent when a fluid 1-form
  // vanishes and cannot serve as a generator
  std::optional<CoQEStructure> identification;
};

/// Ricci tensor of a two-fluid spacetime obeying the field equations:
///   S = (kappa p_r + kappa p_m - Lambda + r/2) g
///     + kappa (sigma_r + p_r) w^r w^r + kappa (sigma_m + p_m) w^m w^m
///     + kappa (q^r w^r + w^r q^r) + kappa (q^m w^m + w^m q^m)
///     - kappa zeta_r e_r - kappa zeta_m e_m
/// with the generator identification w^1 = w^r, w^2 = w^m, w^3 = q^r,
/// w^4 = q^m, giving a = kappa(p_r + p_m) - Lambda + r/2, b11, b22 as the
/// fluid terms, b13 = b24 = kappa, c_i = -kappa zeta_i, d_i = e_i.
inline FluidRicci ricci_from_fluids(const FluidComponent& fr,
                                    const FluidComponent& fm,
                                    const GravConstants& k, const Metric& g,
                                    const Expr& r) {
  int n = g.n();
  Tensor s(g.chart(), {Var::Co, Var::Co});
  Expr a = k.kappa * fr.p + k.kappa * fm.p - k.lambda + r / Expr(2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Expr acc = a * g.lo(i, j) +
                 k.kappa * (fr.sigma + fr.p) * fr.velocity.at({i}) *
                     fr.velocity.at({j}) +
                 k.kappa * (fm.sigma + fm.p) * fm.velocity.at({i}) *
                     fm.velocity.at({j}) +
                 k.kappa * (fr.heat.at({i}) * fr.velocity.at({j}) +
                            fr.heat.at({j}) * fr.velocity.at({i})) +
                 k.kappa * (fm.heat.at({i}) * fm.velocity.at({j}) +
                            fm.heat.at({j}) * fm.velocity.at({i})) -
                 k.kappa * fr.zeta * fr.shear.at({i, j}) -
                 k.kappa * fm.zeta * fm.shear.at({i, j});
      s.at({i, j}) = acc;
    }

  std::vector<std::vector<Expr>> b(4, std::vector<Expr>(4, Expr(0)));
  b[0][0] = k.kappa * (fr.sigma + fr.p);
  b[1][1] = k.kappa * (fm.sigma + fm.p);
  b[0][2] = b[2][0] = k.kappa;  // q^r w^r cross term
  b[1][3] = b[3][1] = k.kappa;  // q^m w^m cross term
  std::vector<OneForm> omegas{fr.velocity, fm.velocity, fr.heat, fm.heat};
  FluidRicci out{std::move(s), std::nullopt};
  bool forms_ok = true;
  for (const auto& w : omegas) {
    bool nz = false;
    for (int i = 0; i < n; ++i)
      if (!is_zero(w.at({i}))) nz = true;
    forms_ok = forms_ok && nz;
  }
  if (forms_ok)
    out.identification.emplace(a, b, -k.kappa * fr.zeta, -k.kappa * fm.zeta,
                               std::move(omegas), fr.shear, fm.shear);
  return out;
}

/// Energy densities of the two fluids:
///   sigma_r = (a + b11 - b22 - b33 - b44 + 2 Lambda)/(2 kappa) - (2p_r + p_m)
///   sigma_m = (a + b22 - b11 - b33 - b44 + 2 Lambda)/(2 kappa) - (2p_m + p_r)
inline std::pair<Expr, Expr> energy_densities(const CoQEStructure& st,
                                              const GravConstants& k,
                                              const Expr& p_r, const Expr& p_m) {
  if (is_zero(k.kappa)) throw Error("energy densities are undefined for kappa = 0");
  Expr common = -st.b[2][2] - st.b[3][3] + Expr(2) * k.lambda;
  Expr sr = (st.a + st.b[0][0] - st.b[1][1] + common) / (Expr(2) * k.kappa) -
            (Expr(2) * p_r + p_m);
  Expr sm = (st.a + st.b[1][1] - st.b[0][0] + common) / (Expr(2) * k.kappa) -
            (Expr(2) * p_m + p_r);
  return {sr, sm};
}

struct SpaceMatter {
  Tensor p;    // (0,4)
  Expr sigma;  // energy density input
};

/// Space-matter tensor P = R + (kappa/2) g ^ T - sigma G, with ^ the
/// Kulkarni-Nomizu product and G the metric double form.
inline SpaceMatter space_matter(const CurvatureBundle& b, const Tensor& t,
                                const Expr& kappa, const Expr& sigma) {
  if (t.rank() != 2 || !t.symmetric2())
    throw Error("stress-energy tensor must be symmetric (0,2)");
  Tensor gw = kulkarni_nomizu(b.metric().as_tensor(), t);
  Tensor G = g_tensor(b.metric());
  Tensor p = b.riemann() + (kappa / Expr(2)) * gw - sigma * G;
  return {std::move(p), sigma};
}

/// Divergence of the space-matter tensor after the field equations are
/// substituted (closed form):
///   (div P)(X,Y,Z) = (3/2)((nabla_X S)(Y,Z) - (nabla_Y S)(X,Z))
///     - g(Y,Z)(dsigma(X) + dr(X)/4) + g(X,Z)(dsigma(Y) + dr(Y)/4)
inline Tensor div_space_matter(const CurvatureBundle& b, const Expr& sigma) {
  int n = b.n();
  Tensor ds = b.covariant_derivative(b.ricci());
  OneForm dsig = b.gradient(sigma);
  OneForm dr = b.gradient(b.scalar_curvature());
  Tensor out(b.chart(), {Var::Co, Var::Co, Var::Co});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Expr acc = Expr(Rational(3, 2)) * (ds.at({x, y, z}) - ds.at({y, x, z}));
        acc = acc - b.metric().lo(y, z) *
                        (dsig.at({x}) + dr.at({x}) / Expr(4));
        acc = acc + b.metric().lo(x, z) *
                        (dsig.at({y}) + dr.at({y}) / Expr(4));
        out.at({x, y, z}) = acc;
      }
  return out;
}

/// Solves the (Y,Z)-contraction of div P = 0 for dsigma:
///   dsigma(X) = (3/2)(g^{yz} nabla_X S_{yz} - g^{yz} nabla_y S_{Xz})/(n-1)
///               - dr(X)/4
/// By the contracted Bianchi identity this is (4-n)/(4(n-1)) dr, hence zero
/// in dimension four: divergence-free space-matter forces constant sigma.
inline OneForm sigma_gradient_from_divP(const CurvatureBundle& b) {
  int n = b.n();
  Tensor ds = b.covariant_derivative(b.ricci());
  OneForm dr = b.gradient(b.scalar_curvature());
  OneForm out(b.chart(), {Var::Co});
  for (int x = 0; x < n; ++x) {
    Expr tr_x(0), div_x(0);
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (b.metric().up(y, z).is_zero_literal()) continue;
        tr_x = tr_x + b.metric().up(y, z) * ds.at({x, y, z});
        div_x = div_x + b.metric().up(y, z) * ds.at({y, x, z});
      }
    out.at({x}) = Expr(Rational(3, 2)) * (tr_x - div_x) / Expr(n - 1) -
                  dr.at({x}) / Expr(4);
  }
  return out;
}

}  // namespace coqe

#endif  // COQE_RELATIVITY_HPP
