#ifndef COQE_CHECKS_HPP
#define COQE_CHECKS_HPP

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "coqe/predicates.hpp"
#include "coqe/report.hpp"

namespace coqe {

struct RunOptions {
  unsigned seed = 42;
};

namespace detail {

inline void list_nonzero(const Tensor& t, CheckResult& out, std::size_t cap = 16) {
  std::size_t listed = 0;
  t.for_each([&](const std::vector<int>& idx, const Expr& e) {
    if (e.is_zero_literal() || is_zero(e)) return;
    if (listed++ >= cap) return;
    std::string indices;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) indices += ",";
      indices += std::to_string(idx[i] + 1);
    }
    out.residuals.push_back({indices, e.str()});
  });
  if (listed > cap)
    out.notes.push_back("(" + std::to_string(listed - cap) +
                        " further nonzero components suppressed)");
}

inline bool requires_structure(const std::string& name) {
  static const std::set<std::string> s = {
      "coqe-verify", "constraints", "classify",       "trace-identity",
      "generator-ricci", "length-identity", "fit"};
  return s.count(name) > 0;
}

}  // namespace detail

/// Expands the requested check list ("all" keyword included), validates
/// block availability, and runs everything against one curvature bundle.
inline Report run_checks(const Manifest& m, const RunOptions& opt = {}) {
  Report report;
  if (!m.metric) throw Error("manifest has no metric");

  for (const auto& name : m.checks) {
    if (name == "all") continue;
    bool known = false;
    for (const auto& k : known_check_names())
      if (k == name) known = true;
    if (!known) throw Error("unknown check name '" + name + "'");
  }

  std::vector<std::string> wanted;
  for (const auto& name : m.checks.empty() ? std::vector<std::string>{"all"}
                                           : m.checks) {
    if (name != "all") {
      wanted.push_back(name);
      continue;
    }
    // the cotton check is heavy and opt-in; everything else applicable runs
    wanted.push_back("curvature");
    wanted.push_back("bianchi");
    if (m.chart->dim() > 2) wanted.push_back("weyl");
    if (m.structure) {
      wanted.push_back("coqe-verify");
      wanted.push_back("constraints");
      wanted.push_back("classify");
      wanted.push_back("trace-identity");
      wanted.push_back("generator-ricci");
      wanted.push_back("length-identity");
      wanted.push_back("fit");
    }
    if (m.qcc && m.structure) wanted.push_back("qcc");
    if (m.fluid_r && m.constants) wanted.push_back("fluid");
    if (m.constants && m.sigma) wanted.push_back("spacematter");
  }
  for (const auto& name : wanted) {
    if (detail::requires_structure(name) && !m.structure)
      throw Error("check '" + name + "' needs a structure block");
    if (name == "qcc" && !(m.qcc && m.structure))
      throw Error("check 'qcc' needs qcc and structure blocks");
    if (name == "fluid" && !(m.fluid_r && m.fluid_m && m.constants))
      throw Error("check 'fluid' needs fluids and constants blocks");
    if (name == "spacematter" && !(m.constants && m.sigma))
      throw Error("check 'spacematter' needs constants with kappa and sigma");
  }

  CurvatureBundle bundle = CurvatureBundle::compute(*m.metric);
  int n = bundle.n();

  for (const auto& name : wanted) {
    CheckResult res;
    res.name = name;
    try {
      if (name == "curvature") {
        int count = 0;
        bundle.christoffel().for_each([&](const std::vector<int>& idx,
                                          const Expr& e) {
          if (e.is_zero_literal()) return;
          if (idx[1] > idx[2]) return;  // symmetric pair, list once
          res.notes.push_back("Gamma^" + std::to_string(idx[0] + 1) + "_{" +
                              std::to_string(idx[1] + 1) +
                              std::to_string(idx[2] + 1) + "} = " + e.str());
          ++count;
        });
        if (count == 0) res.notes.push_back("all Christoffel symbols vanish");
        bundle.ricci().for_each([&](const std::vector<int>& idx, const Expr& e) {
          if (e.is_zero_literal() || idx[0] > idx[1]) return;
          res.notes.push_back("S_{" + std::to_string(idx[0] + 1) +
                              std::to_string(idx[1] + 1) + "} = " + e.str());
        });
        res.notes.push_back("scalar curvature r = " +
                            bundle.scalar_curvature().str());
        std::string sig = "signature (";
        for (std::size_t i = 0; i < m.metric->signature().size(); ++i)
          sig += (m.metric->signature()[i] > 0 ? "+" : "-");
        res.notes.push_back(sig + ")");
        if (m.structure && m.structure->declared_r) {
          Expr diff = bundle.scalar_curvature() - *m.structure->declared_r;
          if (is_zero(diff)) {
            res.notes.push_back("declared scalar curvature confirmed");
          } else {
            res.verdict = Verdict::Flagged;
            res.notes.push_back(
                "declared r = " + m.structure->declared_r->str() +
                " does not match computed r = " +
                bundle.scalar_curvature().str());
          }
        }
      } else if (name == "bianchi") {
        bool ok = true;
        const Tensor& R = bundle.riemann();
        for (int a = 0; a < n && ok; ++a)
          for (int b = 0; b < n && ok; ++b)
            for (int c = 0; c < n && ok; ++c)
              for (int d = 0; d < n && ok; ++d) {
                if (!is_zero(R.at({a, b, c, d}) + R.at({b, a, c, d}))) ok = false;
                if (!is_zero(R.at({a, b, c, d}) + R.at({a, b, d, c}))) ok = false;
                if (!is_zero(R.at({a, b, c, d}) - R.at({c, d, a, b}))) ok = false;
                if (!is_zero(R.at({a, b, c, d}) + R.at({a, c, d, b}) +
                             R.at({a, d, b, c})))
                  ok = false;
              }
        if (!bundle.covariant_derivative(m.metric->as_tensor()).all_zero_symbolic())
          ok = false;
        Tensor div_s = bundle.divergence(bundle.ricci(), 0);
        for (int c = 0; c < n; ++c) {
          Expr half_dr =
              Expr(Rational(1, 2)) *
              differentiate(bundle.scalar_curvature(), m.chart->coord_name(c));
          if (!is_zero(div_s.at({c}) - half_dr)) ok = false;
        }
        res.verdict = ok ? Verdict::Pass : Verdict::Fail;
        res.notes.push_back(
            "Riemann symmetries, first Bianchi, nabla g = 0, div S = dr/2");
      } else if (name == "weyl") {
        Tensor w = weyl(bundle);
        bool ok = true;
        for (int b = 0; b < n && ok; ++b)
          for (int d = 0; d < n && ok; ++d) {
            Expr tr(0);
            for (int a = 0; a < n; ++a)
              for (int c = 0; c < n; ++c)
                tr = tr + m.metric->up(a, c) * w.at({a, b, c, d});
            if (!is_zero(tr)) ok = false;
          }
        res.verdict = ok ? Verdict::Pass : Verdict::Fail;
        res.notes.push_back(std::string("trace-free: ") + (ok ? "yes" : "no"));
        res.notes.push_back(std::string("weyl tensor is ") +
                            (w.all_zero_symbolic() ? "zero (conformally flat)"
                                                   : "nonzero"));
      } else if (name == "cotton") {
        Tensor c = cotton(bundle);
        Tensor dw = div_weyl(bundle);
        bool harmonic = c.all_zero_symbolic();
        Tensor resid = dw + Expr(Rational(n - 3, n - 2)) * c;
        bool identity = resid.all_zero_symbolic();
        res.verdict = identity ? Verdict::Pass : Verdict::Fail;
        res.notes.push_back(std::string("harmonic weyl: ") +
                            (harmonic ? "yes" : "no"));
        res.notes.push_back(std::string("div W = -(n-3)/(n-2) C: ") +
                            (identity ? "verified" : "violated"));
        if (!identity) detail::list_nonzero(resid, res);
      } else if (name == "coqe-verify") {
        Tensor resid = decomposition_residual(bundle, *m.structure);
        bool ok = resid.all_zero_symbolic();
        res.verdict = ok ? Verdict::Pass : Verdict::Fail;
        if (ok)
          res.notes.push_back("decomposition residual is the zero tensor");
        else
          detail::list_nonzero(resid, res);
      } else if (name == "constraints") {
        StructureReport rep = verify_structure_constraints(bundle, *m.structure);
        bool any_flag = false;
        for (const auto& c : rep.checks) {
          res.notes.push_back(std::string("[") + verdict_name(c.verdict) + "] " +
                              c.name + ": " + c.detail);
          if (c.verdict != Verdict::Pass) any_flag = true;
        }
        for (int i = 0; i < 4; ++i)
          for (int j = i; j < 4; ++j)
            if (!is_zero(rep.gram[i][j]))
              res.residuals.push_back({"W" + std::to_string(i + 1) + ",W" +
                                           std::to_string(j + 1),
                                       rep.gram[i][j].str()});
        res.verdict = any_flag ? Verdict::Flagged : Verdict::Pass;
      } else if (name == "classify") {
        Tensor resid = decomposition_residual(bundle, *m.structure);
        if (!resid.all_zero_symbolic()) {
          res.verdict = Verdict::Fail;
          res.notes.push_back(class_label_name(ClassLabel::NoneOfListed));
          res.notes.push_back("decomposition residual is nonzero");
        } else {
          res.notes.push_back(std::string("class = ") +
                              class_label_name(classify(*m.structure)));
        }
      } else if (name == "trace-identity") {
        auto ti = trace_identity(bundle, *m.structure);
        res.notes.push_back("orthonormal form a n + b11+b22+b33+b44 = " +
                            ti.orthonormal_value.str());
        res.notes.push_back("signature-corrected form = " +
                            ti.corrected_value.str());
        res.notes.push_back("computed r = " + ti.computed_r.str());
        bool orthonormal_ok = is_zero(ti.orthonormal_value - ti.computed_r);
        bool corr_ok = is_zero(ti.corrected_value - ti.computed_r);
        if (!corr_ok) {
          res.verdict = Verdict::Fail;
          res.notes.push_back("corrected identity deviates from computed r");
        } else if (!orthonormal_ok) {
          res.verdict = Verdict::Flagged;
          res.notes.push_back("orthonormal-frame identity deviates from computed r");
        }
      } else if (name == "generator-ricci") {
        auto vals = generator_ricci_values(bundle, *m.structure);
        bool any_dev = false;
        for (const auto& [id, resid] : vals.orthonormal_residuals) {
          bool ok = is_zero(resid);
          if (!ok) {
            any_dev = true;
            res.residuals.push_back({id, resid.str()});
          }
        }
        bool corrected_ok = true;
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            if (!is_zero(vals.corrected_residuals[i][j])) corrected_ok = false;
        res.notes.push_back(std::string("orthonormal-frame identities: ") +
                            (any_dev ? "deviations flagged" : "all hold"));
        res.notes.push_back(std::string("signature-corrected identities: ") +
                            (corrected_ok ? "all hold" : "deviate"));
        res.verdict = corrected_ok
                          ? (any_dev ? Verdict::Flagged : Verdict::Pass)
                          : Verdict::Fail;
      } else if (name == "length-identity") {
        auto li = length_identity(bundle, *m.structure, opt.seed);
        res.notes.push_back("s^2 = " + li.s2.str());
        res.notes.push_back("lhs s^2 - c1 t1^2 - c2 t2^2 = " + li.lhs.str());
        res.notes.push_back("closed-form rhs = " + li.rhs.str());
        if (li.equal.equal) {
          res.notes.push_back(li.equal.probabilistic
                                  ? "identity holds (probabilistic)"
                                  : "identity holds (exact)");
        } else {
          res.verdict = Verdict::Flagged;
          res.notes.push_back("identity deviates (expected off the"
                              " orthonormal Riemannian hypotheses)");
        }
      } else if (name == "fit") {
        auto fit = fit_decomposition(bundle, m.structure->omega, m.structure->d1,
                                     m.structure->d2, opt.seed);
        if (!fit.exact) {
          res.verdict = Verdict::Fail;
          res.notes.push_back(fit.message);
        } else {
          auto shown = [](const Expr& e) {
            std::string s = e.str();
            if (s.size() > 120)
              return std::string("(expression with ") +
                     std::to_string(s.size()) + " characters)";
            return s;
          };
          res.notes.push_back("a = " + shown(fit.a));
          res.notes.push_back("c1 = " + shown(fit.c1) + ", c2 = " + shown(fit.c2));
          res.notes.push_back("rank " + std::to_string(fit.rank) +
                              ", null space dimension " +
                              std::to_string(fit.nullspace.size()));
          CoQEStructure fitted(fit.a, fit.b, fit.c1, fit.c2, m.structure->omega,
                               m.structure->d1, m.structure->d2);
          bool ok = decomposition_residual(bundle, fitted).all_zero_symbolic();
          if (!ok) {
            res.verdict = Verdict::Fail;
            res.notes.push_back("refit residual is nonzero");
          }
        }
      } else if (name == "qcc") {
        auto con = qcc_contract(*m.qcc, *m.metric, m.structure->omega,
                                m.structure->d1, m.structure->d2);
        res.verdict = con.matches_coefficient_map ? Verdict::Pass : Verdict::Flagged;
        res.notes.push_back(std::string("contraction matches the coefficient map: ") +
                            (con.matches_coefficient_map ? "yes" : "no"));
        if (!con.matches_coefficient_map) detail::list_nonzero(con.residual, res);
      } else if (name == "fluid") {
        auto norm = fluid_normalization_report(*m.metric, *m.fluid_r, *m.fluid_m);
        bool any_flag = false;
        for (const auto& c : norm) {
          res.notes.push_back(std::string("[") + verdict_name(c.verdict) + "] " +
                              c.name + ": " + c.detail);
          if (c.verdict != Verdict::Pass) any_flag = true;
        }
        Tensor t = stress_energy(*m.fluid_r, *m.fluid_m, *m.metric);
        Tensor efe = efe_residual(bundle, t, *m.constants);
        bool efe_ok = efe.all_zero_symbolic();
        res.notes.push_back(std::string("field equations: ") +
                            (efe_ok ? "satisfied" : "not satisfied by this"
                                                    " metric and fluid data"));
        if (!efe_ok) any_flag = true;
        if (m.structure) {
          auto [sr, sm] =
              energy_densities(*m.structure, *m.constants, m.fluid_r->p,
                               m.fluid_m->p);
          res.notes.push_back("sigma_r = " + sr.str());
          res.notes.push_back("sigma_m = " + sm.str());
        }
        res.verdict = any_flag ? Verdict::Flagged : Verdict::Pass;
      } else if (name == "spacematter") {
        OneForm ds = sigma_gradient_from_divP(bundle);
        bool dsigma_zero = ds.all_zero_symbolic();
        res.notes.push_back(
            std::string("contracting div P = 0 gives dsigma = 0: ") +
            (dsigma_zero ? "yes" : "no"));
        Tensor divp = div_space_matter(bundle, *m.sigma);
        bool divp_zero = divp.all_zero_symbolic();
        res.notes.push_back(std::string("div P with the supplied sigma: ") +
                            (divp_zero ? "zero" : "nonzero"));
        res.verdict = (n == 4 && !dsigma_zero) ? Verdict::Fail : Verdict::Pass;
      } else {
        throw Error("unknown check name '" + name + "'");
      }
    } catch (const Error& e) {
      res.verdict = Verdict::Fail;
      res.notes.push_back(e.what());
    }
    report.checks.push_back(std::move(res));
  }
  return report;
}

}  // namespace coqe

#endif  // COQE_CHECKS_HPP
