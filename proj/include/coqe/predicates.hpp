#ifndef COQE_PREDICATES_HPP
#define COQE_PREDICATES_HPP

#include <optional>
#include <string>

#include "coqe/curvature.hpp"

namespace coqe {

/// Lie derivative of the metric along X; zero iff X is Killing.
inline Tensor killing_defect(const CurvatureBundle& b, const VectorField& x) {
  if (x.rank() != 1 || x.variance()[0] != Var::Contra)
    throw Error("killing_defect expects a vector field");
  OneForm xl = b.metric().lower(x);
  Tensor dxl = b.covariant_derivative(xl);  // (a; b)
  int n = b.n();
  Tensor t(b.chart(), {Var::Co, Var::Co});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.at({i, j}) = dxl.at({i, j}) + dxl.at({j, i});
  return t;
}

/// (nabla_X A)(Y,Z) - (nabla_Y A)(X,Z); zero iff A is a Codazzi tensor.
inline Tensor codazzi_defect(const Tensor& a, const CurvatureBundle& b) {
  if (a.rank() != 2 || !a.symmetric2())
    throw Error("codazzi_defect expects a symmetric (0,2) tensor");
  Tensor da = b.covariant_derivative(a);
  int n = b.n();
  Tensor t(b.chart(), {Var::Co, Var::Co, Var::Co});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        t.at({i, j, k}) = da.at({i, j, k}) - da.at({j, i, k});
  return t;
}

/// (nabla_X A)(Y,Z) + (nabla_Y A)(Z,X) + (nabla_Z A)(X,Y); zero iff cyclic
/// parallel.
inline Tensor cyclic_parallel_defect(const Tensor& a, const CurvatureBundle& b) {
  if (a.rank() != 2 || !a.symmetric2())
    throw Error("cyclic_parallel_defect expects a symmetric (0,2) tensor");
  Tensor da = b.covariant_derivative(a);
  int n = b.n();
  Tensor t(b.chart(), {Var::Co, Var::Co, Var::Co});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        t.at({i, j, k}) = da.at({i, j, k}) + da.at({j, k, i}) + da.at({k, i, j});
  return t;
}

/// Classification of a vector field against the pointwise characters of the
/// taxonomy: parallel, concircular (with function rho), concurrent, dual-form
/// recurrent (with 1-form phi), and phi(Ric) (with constant mu).
struct VectorCharacter {
  bool parallel = false;
  bool concircular = false;
  std::optional<Expr> rho;
  bool concurrent = false;
  bool recurrent = false;
  std::optional<OneForm> phi;
  bool phi_ric = false;       // nabla of the dual form equals mu * Ricci
  bool proper_phi_ric = false;  // mu is a nonzero constant
  std::optional<Expr> mu;
  std::string label = "none of the listed characters";
};

inline VectorCharacter vector_field_character(const CurvatureBundle& b,
                                              const VectorField& u) {
  if (u.rank() != 1 || u.variance()[0] != Var::Contra)
    throw Error("vector_field_character expects a vector field");
  int n = b.n();
  bool all_zero = true;
  for (int i = 0; i < n; ++i)
    if (!is_zero(u.at({i}))) all_zero = false;
  if (all_zero) throw Error("vector_field_character: the zero field has no character");

  VectorCharacter out;
  Tensor du = b.covariant_derivative(u);  // (a; ^b): nabla_a u^b

  // parallel / concircular / concurrent act on nabla U itself
  out.parallel = true;
  for (int a = 0; a < n && out.parallel; ++a)
    for (int i = 0; i < n && out.parallel; ++i)
      if (!is_zero(du.at({a, i}))) out.parallel = false;

  Expr rho = Expr(0);
  for (int a = 0; a < n; ++a) rho = rho + du.at({a, a});
  rho = rho / Expr(n);
  bool conc = true;
  for (int a = 0; a < n && conc; ++a)
    for (int i = 0; i < n && conc; ++i) {
      Expr expect = (a == i) ? rho : Expr(0);
      if (!is_zero(du.at({a, i}) - expect)) conc = false;
    }
  if (conc) {
    out.concircular = true;
    out.rho = rho;
    bool constant = true;
    for (int c = 0; c < n; ++c)
      if (!is_zero(differentiate(rho, b.chart()->coord_name(c)))) constant = false;
    out.concurrent = constant && !is_zero(rho);
  }

  // recurrence of the metric-dual 1-form: nabla_a w_b = phi_a w_b
  OneForm w = b.metric().lower(u);
  Tensor dw = b.covariant_derivative(w);  // (a; b)
  Bindings at = b.chart()->sample_bindings();
  int pivot = -1;
  for (int i = 0; i < n; ++i) {
    if (is_zero(w.at({i}))) continue;
    try {
      if (std::fabs(eval_double(w.at({i}), at)) > 1e-9) {
        pivot = i;
        break;
      }
    } catch (const Error&) {
      continue;
    }
  }
  if (pivot >= 0) {
    OneForm phi(b.chart(), {Var::Co});
    for (int a = 0; a < n; ++a)
      phi.at({a}) = dw.at({a, pivot}) / w.at({pivot});
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int i = 0; i < n && ok; ++i)
        if (!is_zero(dw.at({a, i}) - phi.at({a}) * w.at({i}))) ok = false;
    bool phi_nonzero = false;
    for (int a = 0; a < n; ++a)
      if (!is_zero(phi.at({a}))) phi_nonzero = true;
    if (ok && phi_nonzero) {
      out.recurrent = true;
      out.phi = phi;
    }
  }

  // phi(Ric): nabla_a w_b = mu S_{ab} with mu constant
  const Tensor& S = b.ricci();
  int spivot_a = -1, spivot_b = -1;
  for (int a = 0; a < n && spivot_a < 0; ++a)
    for (int i = 0; i < n && spivot_a < 0; ++i) {
      if (is_zero(S.at({a, i}))) continue;
      try {
        if (std::fabs(eval_double(S.at({a, i}), at)) > 1e-9) {
          spivot_a = a;
          spivot_b = i;
        }
      } catch (const Error&) {
      }
    }
  if (spivot_a < 0) {
    // vanishing Ricci: nabla w = mu S degenerates to the covariantly
    // constant case with mu = 0
    bool dw_zero = true;
    for (int a = 0; a < n && dw_zero; ++a)
      for (int i = 0; i < n && dw_zero; ++i)
        if (!is_zero(dw.at({a, i}))) dw_zero = false;
    if (dw_zero) {
      out.phi_ric = true;
      out.mu = Expr(0);
    }
  } else {
    Expr mu = dw.at({spivot_a, spivot_b}) / S.at({spivot_a, spivot_b});
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int i = 0; i < n && ok; ++i)
        if (!is_zero(dw.at({a, i}) - mu * S.at({a, i}))) ok = false;
    bool constant = true;
    for (int c = 0; c < n; ++c)
      if (!is_zero(differentiate(mu, b.chart()->coord_name(c)))) constant = false;
    if (ok && constant) {
      out.phi_ric = true;
      out.mu = mu;
      out.proper_phi_ric = !is_zero(mu);
    }
  }

  if (out.parallel)
    out.label = "parallel";
  else if (out.concurrent)
    out.label = "concurrent";
  else if (out.concircular)
    out.label = "concircular";
  else if (out.recurrent)
    out.label = "recurrent";
  else if (out.proper_phi_ric)
    out.label = "proper phi(Ric)";
  return out;
}

/// (nabla_X S)(Y,Z) - alpha(X) S(Y,Z) - beta(X) S(Y,Z); zero certifies the
/// generalized Ricci recurrence condition, both recurrence forms scaling S.
inline Tensor ricci_recurrence_defect(const CurvatureBundle& b,
                                      const OneForm& alpha, const OneForm& beta) {
  Tensor ds = b.covariant_derivative(b.ricci());
  int n = b.n();
  Tensor t(b.chart(), {Var::Co, Var::Co, Var::Co});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        t.at({x, y, z}) = ds.at({x, y, z}) -
                          alpha.at({x}) * b.ricci().at({y, z}) -
                          beta.at({x}) * b.ricci().at({y, z});
  return t;
}

/// (nabla_X S)(Y,Z) - pi(Y) S(X,Z) - pi(Z) S(X,Y); zero certifies the
/// semi-pseudo Ricci symmetric condition.
inline Tensor semi_pseudo_defect(const CurvatureBundle& b, const OneForm& pi) {
  Tensor ds = b.covariant_derivative(b.ricci());
  int n = b.n();
  Tensor t(b.chart(), {Var::Co, Var::Co, Var::Co});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        t.at({x, y, z}) = ds.at({x, y, z}) - pi.at({y}) * b.ricci().at({x, z}) -
                          pi.at({z}) * b.ricci().at({x, y});
  return t;
}

}  // namespace coqe

#endif  // COQE_PREDICATES_HPP
