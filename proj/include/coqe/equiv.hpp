#ifndef COQE_EQUIV_HPP
#define COQE_EQUIV_HPP

#include <cmath>
#include <random>
#include <string>

#include "coqe/eval.hpp"

namespace coqe {

struct Equivalence {
  bool equal = false;
  bool probabilistic = false;  // verdict came from the numeric fallback
};

/// Draws a small random rational respecting the symbol's assumption flags.
inline Rational random_rational(std::mt19937& rng, bool nonzero, bool positive) {
  std::uniform_int_distribution<int> num(positive ? 1 : -12, 12);
  std::uniform_int_distribution<int> den(1, 7);
  for (int i = 0; i < 64; ++i) {
    int p = num(rng);
    if (nonzero && p == 0) continue;
    return Rational(p, den(rng));
  }
  return Rational(1, 3);
}

/// Canonical-form equality first; on mismatch, compares values at `points`
/// random rational bindings (seeded, deterministic) to the given relative
/// tolerance. Fallback verdicts are flagged probabilistic.
inline Equivalence equivalent(const Expr& a, const Expr& b,
                              unsigned seed = 42, int points = 20,
                              double rel_tol = 1e-10) {
  if (a == b) return {true, false};
  Expr diff = a - b;
  if (is_zero(diff)) return {true, false};

  std::map<std::string, std::pair<bool, bool>> syms;
  a.collect_symbols(syms);
  b.collect_symbols(syms);
  std::mt19937 rng(seed);
  int done = 0;
  for (int attempt = 0; attempt < points * 16 && done < points; ++attempt) {
    Bindings bind;
    for (const auto& [name, flags] : syms)
      bind[name] = Value(random_rational(rng, flags.first, flags.second));
    double va, vb;
    try {
      va = eval_double(a, bind);
      vb = eval_double(b, bind);
    } catch (const Error&) {
      continue;  // out of domain; draw again
    }
    double scale = std::max({1.0, std::fabs(va), std::fabs(vb)});
    if (std::fabs(va - vb) > rel_tol * scale) return {false, true};
    ++done;
  }
  if (done == 0) throw Error("equivalence check found no admissible sample points");
  return {true, true};
}

}  // namespace coqe

#endif  // COQE_EQUIV_HPP
