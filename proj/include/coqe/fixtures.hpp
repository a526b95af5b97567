#ifndef COQE_FIXTURES_HPP
#define COQE_FIXTURES_HPP

#include <map>
#include <string>
#include <vector>

#include "coqe/manifest.hpp"

namespace coqe {

/// Bundled fixture manifests, keyed by name. The godel fixture carries the
/// published structure data verbatim, including the declared scalar
/// curvature -1/k^2 so that the audit path fires by default.
inline const std::map<std::string, std::string>& bundled_fixtures() {
  static const std::map<std::string, std::string> fixtures = {
      {"godel", R"json({
  "chart": {
    "coords": ["t", "x", "y", "z"],
    "params": [{"name": "k", "nonzero": true}]
  },
  "metric": {
    "1,1": "k^2",
    "2,2": "-k^2",
    "3,3": "k^2*exp(2*x)/2",
    "4,4": "-k^2",
    "1,3": "k^2*exp(x)"
  },
  "structure": {
    "a": "-1/k^2",
    "b": {
      "1,1": "-1/k^2",
      "2,2": "-3/(2*k^2)",
      "3,3": "3/k^2",
      "4,4": "5/(2*k^2)",
      "2,3": "sqrt(2)/k^2",
      "3,4": "2*sqrt(2)/k^2"
    },
    "c1": "exp(-2*x)",
    "c2": "-exp(2*x)",
    "omega": [
      ["0", "0", "0", "k"],
      ["0", "k", "0", "0"],
      ["0", "0", "k*exp(x)/sqrt(2)", "0"],
      ["k", "0", "0", "0"]
    ],
    "d1": {
      "1,1": "-exp(2*x)/4",
      "1,2": "exp(2*x)",
      "2,2": "3*exp(2*x)/4",
      "3,3": "-exp(2*x)/2"
    },
    "d2": {
      "1,1": "exp(-2*x)/4",
      "1,2": "exp(-2*x)",
      "2,2": "exp(-2*x)/4",
      "2,3": "exp(-x)",
      "3,3": "-exp(-2*x)/2"
    },
    "declared_r": "-1/k^2"
  },
  "constants": {"kappa": "1", "lambda": "0", "sigma": "1/3"},
  "checks": ["all"]
})json"},
      {"flat-euclidean", R"json({
  "chart": {"coords": ["x1", "x2", "x3", "x4"]},
  "metric": {"1,1": "1", "2,2": "1", "3,3": "1", "4,4": "1"},
  "checks": ["curvature", "bianchi", "weyl"]
})json"},
      {"flat-minkowski", R"json({
  "chart": {"coords": ["t", "x", "y", "z"]},
  "metric": {"1,1": "-1", "2,2": "1", "3,3": "1", "4,4": "1"},
  "checks": ["curvature", "bianchi", "weyl"]
})json"},
      {"round-sphere-2", R"json({
  "chart": {
    "coords": ["theta", "phi"],
    "params": [{"name": "R", "positive": true}]
  },
  "metric": {"1,1": "R^2", "2,2": "R^2*sin(theta)^2"},
  "checks": ["curvature", "bianchi"]
})json"},
      {"round-sphere-4", R"json({
  "chart": {
    "coords": ["p1", "p2", "p3", "p4"],
    "params": [{"name": "R", "positive": true}]
  },
  "metric": {
    "1,1": "R^2",
    "2,2": "R^2*sin(p1)^2",
    "3,3": "R^2*sin(p1)^2*sin(p2)^2",
    "4,4": "R^2*sin(p1)^2*sin(p2)^2*sin(p3)^2"
  },
  "structure": {
    "a": "3/R^2",
    "b": {},
    "c1": "0",
    "c2": "0",
    "omega": [
      ["R", "0", "0", "0"],
      ["0", "R*sin(p1)", "0", "0"],
      ["0", "0", "R*sin(p1)*sin(p2)", "0"],
      ["0", "0", "0", "R*sin(p1)*sin(p2)*sin(p3)"]
    ]
  },
  "checks": ["curvature", "bianchi", "weyl", "coqe-verify", "constraints",
             "classify", "trace-identity", "generator-ricci"]
})json"},
      {"einstein-desitter", R"json({
  "chart": {
    "coords": ["t", "x", "y", "z"],
    "params": []
  },
  "metric": {
    "1,1": "-1",
    "2,2": "t^(4/3)",
    "3,3": "t^(4/3)",
    "4,4": "t^(4/3)"
  },
  "checks": ["curvature", "bianchi", "weyl"]
})json"},
      {"polynomial-random-template", R"json({
  "chart": {"coords": ["w", "x", "y", "z"]},
  "metric": {
    "1,1": "1 + x^2/2",
    "2,2": "1 + y^2/3",
    "3,3": "1 + z^2/2",
    "4,4": "1 + w^2/4"
  },
  "checks": ["curvature", "bianchi", "weyl"]
})json"},
  };
  return fixtures;
}

/// Resolves a manifest argument: a bundled fixture name or a file path.
inline Manifest resolve_manifest(const std::string& arg) {
  auto it = bundled_fixtures().find(arg);
  if (it != bundled_fixtures().end()) return Manifest::load_text(it->second);
  return Manifest::load_file(arg);
}

inline std::vector<std::string> bundled_fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : bundled_fixtures()) names.push_back(name);
  return names;
}

}  // namespace coqe

#endif  // COQE_FIXTURES_HPP
