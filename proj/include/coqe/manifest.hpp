#ifndef COQE_MANIFEST_HPP
#define COQE_MANIFEST_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "coqe/qcc.hpp"
#include "coqe/relativity.hpp"

namespace coqe {

using Json = nlohmann::ordered_json;

inline const std::vector<std::string>& known_check_names() {
  static const std::vector<std::string> names = {
      "curvature",     "bianchi",        "weyl",          "cotton",
      "coqe-verify",   "constraints",    "classify",      "trace-identity",
      "generator-ricci", "length-identity", "fit",        "qcc",
      "fluid",         "spacematter"};
  return names;
}

/// Parsed and validated manifest: chart, metric and the optional structure,
/// qcc, fluid and constants blocks, plus the list of checks to run.
class Manifest {
 public:
  ChartPtr chart;
  std::optional<Metric> metric;
  std::optional<CoQEStructure> structure;
  std::optional<QCCCoefficients> qcc;
  std::optional<FluidComponent> fluid_r, fluid_m;
  std::optional<GravConstants> constants;
  std::optional<Expr> sigma;  // space-matter energy density
  std::vector<std::string> checks;

  static Manifest load_text(const std::string& text) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(std::string("manifest parse error: ") + e.what());
    }
    return from_json(j);
  }

  static Manifest load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open manifest file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_text(ss.str());
  }

  static Manifest from_json(const Json& j) {
    Manifest m;
    if (!j.contains("chart")) throw Error("manifest is missing the chart block");
    const Json& cj = j.at("chart");
    std::vector<Expr> coords, params;
    for (const auto& name : cj.at("coords"))
      coords.push_back(Expr::symbol(name.get<std::string>()));
    if (cj.contains("params"))
      for (const auto& p : cj.at("params")) {
        bool nonzero = p.value("nonzero", false);
        bool positive = p.value("positive", false);
        params.push_back(
            Expr::symbol(p.at("name").get<std::string>(), nonzero, positive));
      }
    auto chart = std::make_shared<Chart>(coords, params);
    if (cj.contains("sample_point"))
      for (auto it = cj.at("sample_point").begin();
           it != cj.at("sample_point").end(); ++it)
        chart->set_sample(it.key(), parse_rational(it.value().get<std::string>()));
    m.chart = chart;

    if (!j.contains("metric")) throw Error("manifest is missing the metric block");
    int n = chart->dim();
    std::vector<std::vector<Expr>> g(n, std::vector<Expr>(n, Expr(0)));
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (auto it = j.at("metric").begin(); it != j.at("metric").end(); ++it) {
      auto [i, k] = parse_index_pair(it.key(), n);
      if (k < i) {
        if (seen[k][i])
          throw Error("duplicate metric entry g_{" + it.key() + "}");
        throw Error("metric entries use i <= j; found g_{" + it.key() + "}");
      }
      if (seen[i][k]) throw Error("duplicate metric entry g_{" + it.key() + "}");
      seen[i][k] = true;
      Expr e = chart->parse_expr(it.value().get<std::string>());
      g[i][k] = e;
      g[k][i] = e;
    }
    m.metric.emplace(chart, g);

    if (j.contains("structure")) m.load_structure(j.at("structure"));
    if (j.contains("qcc")) m.load_qcc(j.at("qcc"));
    if (j.contains("fluids")) m.load_fluids(j.at("fluids"));
    if (j.contains("constants")) {
      const Json& kj = j.at("constants");
      GravConstants k{chart->parse_expr(kj.value("kappa", "1")),
                      chart->parse_expr(kj.value("lambda", "0"))};
      m.constants = k;
      if (kj.contains("sigma"))
        m.sigma = chart->parse_expr(kj.at("sigma").get<std::string>());
    }

    if (j.contains("checks"))
      for (const auto& c : j.at("checks")) {
        std::string name = c.get<std::string>();
        if (name != "all") {
          bool known = false;
          for (const auto& k : known_check_names())
            if (k == name) known = true;
          if (!known) throw Error("unknown check name '" + name + "'");
        }
        m.checks.push_back(name);
      }
    return m;
  }

  Json to_json() const {
    Json j;
    Json cj;
    for (const auto& c : chart->coords()) cj["coords"].push_back(c.symbol_name());
    for (const auto& p : chart->params()) {
      Json pj;
      pj["name"] = p.symbol_name();
      if (p.symbol_nonzero()) pj["nonzero"] = true;
      if (p.symbol_positive()) pj["positive"] = true;
      cj["params"].push_back(pj);
    }
    for (const auto& [name, v] : chart->sample_point())
      cj["sample_point"][name] = v.str();
    j["chart"] = cj;
    Json mj;
    int n = chart->dim();
    for (int i = 0; i < n; ++i)
      for (int k = i; k < n; ++k)
        if (!metric->lo(i, k).is_zero_literal())
          mj[std::to_string(i + 1) + "," + std::to_string(k + 1)] =
              metric->lo(i, k).str();
    j["metric"] = mj;
    if (structure) {
      Json sj;
      sj["a"] = structure->a.str();
      Json bj;
      for (int i = 0; i < 4; ++i)
        for (int k = i; k < 4; ++k)
          if (!structure->b[i][k].is_zero_literal())
            bj[std::to_string(i + 1) + "," + std::to_string(k + 1)] =
                structure->b[i][k].str();
      sj["b"] = bj;
      sj["c1"] = structure->c1.str();
      sj["c2"] = structure->c2.str();
      for (const auto& w : structure->omega) {
        Json wj = Json::array();
        for (int i = 0; i < n; ++i) wj.push_back(w.at({i}).str());
        sj["omega"].push_back(wj);
      }
      auto dump_d = [&](const Tensor& d) {
        Json dj;
        for (int i = 0; i < n; ++i)
          for (int k = i; k < n; ++k)
            if (!d.at({i, k}).is_zero_literal())
              dj[std::to_string(i + 1) + "," + std::to_string(k + 1)] =
                  d.at({i, k}).str();
        return dj;
      };
      sj["d1"] = dump_d(structure->d1);
      sj["d2"] = dump_d(structure->d2);
      if (structure->declared_r) sj["declared_r"] = structure->declared_r->str();
      j["structure"] = sj;
    }
    if (qcc) {
      Json qj;
      for (int i = 0; i < 13; ++i)
        qj["a" + std::to_string(i + 1)] = qcc->a[i].str();
      j["qcc"] = qj;
    }
    if (fluid_r && fluid_m) {
      auto dump_fluid = [&](const FluidComponent& f) {
        Json fj;
        fj["sigma"] = f.sigma.str();
        fj["p"] = f.p.str();
        fj["zeta"] = f.zeta.str();
        Json ej;
        for (int i = 0; i < n; ++i)
          for (int k = i; k < n; ++k)
            if (!f.shear.at({i, k}).is_zero_literal())
              ej[std::to_string(i + 1) + "," + std::to_string(k + 1)] =
                  f.shear.at({i, k}).str();
        fj["e"] = ej;
        Json wj = Json::array(), qj = Json::array();
        for (int i = 0; i < n; ++i) {
          wj.push_back(f.velocity.at({i}).str());
          qj.push_back(f.heat.at({i}).str());
        }
        fj["omega"] = wj;
        fj["q"] = qj;
        return fj;
      };
      j["fluids"]["r"] = dump_fluid(*fluid_r);
      j["fluids"]["m"] = dump_fluid(*fluid_m);
    }
    if (constants) {
      j["constants"]["kappa"] = constants->kappa.str();
      j["constants"]["lambda"] = constants->lambda.str();
      if (sigma) j["constants"]["sigma"] = sigma->str();
    }
    j["checks"] = checks;
    return j;
  }

 private:
  static Rational parse_rational(const std::string& s) {
    Expr e = parse(s);
    if (!e.is_number()) throw Error("expected a rational constant, got '" + s + "'");
    return e.number();
  }

  static std::pair<int, int> parse_index_pair(const std::string& key, int n) {
    auto comma = key.find(',');
    if (comma == std::string::npos)
      throw Error("bad index key '" + key + "' (expected \"i,j\")");
    int i, j;
    try {
      i = std::stoi(key.substr(0, comma));
      j = std::stoi(key.substr(comma + 1));
    } catch (const std::exception&) {
      throw Error("bad index key '" + key + "'");
    }
    if (i < 1 || i > n || j < 1 || j > n)
      throw Error("index out of range in key '" + key + "' for dimension " +
                  std::to_string(n));
    return {i - 1, j - 1};
  }

  Tensor load_sym2(const Json& j, int dim) const {
    Tensor t(chart, {Var::Co, Var::Co});
    for (auto it = j.begin(); it != j.end(); ++it) {
      auto [i, k] = parse_index_pair(it.key(), dim);
      Expr e = chart->parse_expr(it.value().get<std::string>());
      t.at({i, k}) = e;
      t.at({k, i}) = e;
    }
    return t;
  }

  void load_structure(const Json& sj) {
    int n = chart->dim();
    Expr a = chart->parse_expr(sj.at("a").get<std::string>());
    std::vector<std::vector<Expr>> b(4, std::vector<Expr>(4, Expr(0)));
    if (sj.contains("b"))
      for (auto it = sj.at("b").begin(); it != sj.at("b").end(); ++it) {
        auto [i, k] = parse_index_pair(it.key(), 4);
        Expr e = chart->parse_expr(it.value().get<std::string>());
        b[i][k] = e;
        b[k][i] = e;
      }
    Expr c1 = chart->parse_expr(sj.value("c1", "0"));
    Expr c2 = chart->parse_expr(sj.value("c2", "0"));
    if (!sj.contains("omega") || sj.at("omega").size() != 4)
      throw Error("structure block needs exactly four omega 1-forms");
    std::vector<OneForm> omegas;
    for (const auto& wj : sj.at("omega")) {
      if (static_cast<int>(wj.size()) != n)
        throw Error("omega component count does not match the dimension");
      std::vector<Expr> comps;
      for (const auto& s : wj) comps.push_back(chart->parse_expr(s.get<std::string>()));
      omegas.push_back(make_one_form(chart, comps));
    }
    Tensor d1 = sj.contains("d1") ? load_sym2(sj.at("d1"), n)
                                  : Tensor(chart, {Var::Co, Var::Co});
    Tensor d2 = sj.contains("d2") ? load_sym2(sj.at("d2"), n)
                                  : Tensor(chart, {Var::Co, Var::Co});
    structure.emplace(a, b, c1, c2, omegas, d1, d2);
    if (sj.contains("declared_r"))
      structure->declared_r = chart->parse_expr(sj.at("declared_r").get<std::string>());
  }

  void load_qcc(const Json& qj) {
    QCCCoefficients q;
    for (int i = 0; i < 13; ++i) {
      std::string key = "a" + std::to_string(i + 1);
      q.a[i] = chart->parse_expr(qj.value(key, "0"));
    }
    qcc = q;
  }

  void load_fluids(const Json& fj) {
    auto load_one = [&](const Json& f) {
      int n = chart->dim();
      Expr sig = chart->parse_expr(f.value("sigma", "0"));
      Expr p = chart->parse_expr(f.value("p", "0"));
      Expr zeta = chart->parse_expr(f.value("zeta", "0"));
      Tensor shear = f.contains("e") ? load_sym2(f.at("e"), n)
                                     : Tensor(chart, {Var::Co, Var::Co});
      auto load_form = [&](const char* key) {
        OneForm w(chart, {Var::Co});
        if (f.contains(key)) {
          const Json& arr = f.at(key);
          if (static_cast<int>(arr.size()) != n)
            throw Error("fluid 1-form component count mismatch");
          for (int i = 0; i < n; ++i)
            w.at({i}) = chart->parse_expr(arr[i].get<std::string>());
        }
        return w;
      };
      return FluidComponent(sig, p, zeta, shear, load_form("omega"),
                            load_form("q"));
    };
    if (!fj.contains("r") || !fj.contains("m"))
      throw Error("fluids block needs both 'r' and 'm' components");
    fluid_r = load_one(fj.at("r"));
    fluid_m = load_one(fj.at("m"));
  }
};

}  // namespace coqe

#endif  // COQE_MANIFEST_HPP
