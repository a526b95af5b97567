// coqe: curvature objects and comprehensive quasi-Einstein analysis of
// coordinate-chart metrics described by manifest files.
//
// Exit codes: 0 = all checks passed (flags allowed), 1 = a check failed,
// 2 = input error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coqe/coqe.hpp"

namespace {

struct GlobalOpts {
  bool json = false;
  unsigned seed = 42;
  std::string sample_point;
  std::string manifest;
  std::string checks;
  std::string plane;
};

void apply_sample_point(coqe::Manifest& m, const std::string& spec) {
  if (spec.empty()) return;
  // "t=1/3,x=1/2,..."
  std::size_t pos = 0;
  auto chart = const_cast<coqe::Chart*>(m.chart.get());
  while (pos < spec.size()) {
    auto comma = spec.find(',', pos);
    std::string item = spec.substr(pos, comma == std::string::npos
                                            ? std::string::npos
                                            : comma - pos);
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw coqe::Error("bad --sample-point item '" + item + "'");
    std::string name = item.substr(0, eq);
    coqe::Expr v = coqe::parse(item.substr(eq + 1));
    if (!v.is_number())
      throw coqe::Error("sample point values must be rational constants");
    chart->set_sample(name, v.number());
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
}

int run_report(const GlobalOpts& g, const std::vector<std::string>& checks) {
  coqe::Manifest m = coqe::resolve_manifest(g.manifest);
  apply_sample_point(m, g.sample_point);
  if (!checks.empty()) m.checks = checks;
  coqe::RunOptions opt;
  opt.seed = g.seed;
  coqe::Report rep = coqe::run_checks(m, opt);
  std::cout << coqe::emit_report(rep, g.json ? "json" : "text");
  return rep.exit_code();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos
                                         ? std::string::npos
                                         : comma - pos);
    if (!item.empty()) out.push_back(item);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int run_sectional(const GlobalOpts& g) {
  coqe::Manifest m = coqe::resolve_manifest(g.manifest);
  apply_sample_point(m, g.sample_point);
  auto semi = g.plane.find(';');
  if (semi == std::string::npos)
    throw coqe::Error("--plane expects \"<vec>;<vec>\" with comma-separated components");
  auto parse_vec = [&](const std::string& s) {
    auto comps = split_list(s);
    if (static_cast<int>(comps.size()) != m.chart->dim())
      throw coqe::Error("plane vector component count does not match dimension");
    std::vector<coqe::Expr> es;
    for (const auto& c : comps) es.push_back(m.chart->parse_expr(c));
    return coqe::make_vector(m.chart, es);
  };
  auto x = parse_vec(g.plane.substr(0, semi));
  auto y = parse_vec(g.plane.substr(semi + 1));
  auto bundle = coqe::CurvatureBundle::compute(*m.metric);
  coqe::Expr k = bundle.sectional_curvature(x, y);
  if (g.json) {
    coqe::Json j;
    j["version"] = coqe::kVersion;
    j["sectional_curvature"] = k.str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "sectional curvature K = " << k.str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic curvature and comprehensive quasi-Einstein analysis"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_flag("--json", g.json, "machine-readable report");
  app.add_option("--seed", g.seed, "seed for probabilistic equivalence checks")
      ->default_val(42);
  app.add_option("--sample-point", g.sample_point,
                 "override the sample point, e.g. \"x=1/2,t=2/3\"");

  auto add_manifest = [&](CLI::App* sub) {
    sub->add_option("manifest", g.manifest,
                    "manifest file or bundled fixture name")
        ->required();
  };

  auto* curvature = app.add_subcommand("curvature", "Christoffel, Ricci, scalar");
  add_manifest(curvature);
  auto* verify = app.add_subcommand("verify", "decomposition and constraints");
  add_manifest(verify);
  auto* classify = app.add_subcommand("classify", "taxonomy label");
  add_manifest(classify);
  auto* sectional = app.add_subcommand("sectional", "sectional curvature of a plane");
  add_manifest(sectional);
  sectional->add_option("--plane", g.plane, "two vectors \"<vec>;<vec>\"")
      ->required();
  auto* fluid = app.add_subcommand("fluid", "two-fluid stress-energy analysis");
  add_manifest(fluid);
  auto* spacematter = app.add_subcommand("spacematter", "space-matter tensor");
  add_manifest(spacematter);
  auto* report = app.add_subcommand("report", "run a named list of checks");
  add_manifest(report);
  report->add_option("--checks", g.checks, "comma list of checks or 'all'")
      ->default_val("all");
  auto* fixtures = app.add_subcommand("fixtures", "list bundled fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad invocation is an input error
  }

  try {
    if (fixtures->parsed()) {
      for (const auto& name : coqe::bundled_fixture_names())
        std::cout << name << "\n";
      return 0;
    }
    if (curvature->parsed()) return run_report(g, {"curvature"});
    if (verify->parsed()) return run_report(g, {"coqe-verify", "constraints"});
    if (classify->parsed()) return run_report(g, {"coqe-verify", "classify"});
    if (sectional->parsed()) return run_sectional(g);
    if (fluid->parsed()) return run_report(g, {"fluid"});
    if (spacematter->parsed()) return run_report(g, {"spacematter"});
    if (report->parsed()) {
      std::vector<std::string> checks = split_list(g.checks);
      return run_report(g, checks);
    }
  } catch (const coqe::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
