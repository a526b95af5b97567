#ifndef COQE_LINSOLVE_HPP
#define COQE_LINSOLVE_HPP

#include <vector>

#include "coqe/equiv.hpp"

namespace coqe {

struct LinearSolution {
  bool consistent = false;
  int rank = 0;
  std::vector<Expr> particular;             // free variables set to zero
  std::vector<std::vector<Expr>> nullspace;  // basis vectors of A x = 0
};

/// Exact Gauss-Jordan elimination over symbolic expressions. Pivots are
/// chosen by magnitude across the supplied sample bindings (deterministic),
/// with the symbolic zero test as the ground truth for eliminability.
inline LinearSolution solve_linear(std::vector<std::vector<Expr>> a,
                                   std::vector<Expr> rhs,
                                   const std::vector<Bindings>& samples) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;

  auto magnitude = [&](const Expr& e) {
    double best = 0;
    for (const auto& s : samples) {
      try {
        double v = std::fabs(eval_double(e, s));
        if (v > best) best = v;
      } catch (const Error&) {
      }
    }
    return best;
  };

  std::vector<int> pivot_col_of_row(rows, -1);
  std::vector<bool> col_used(cols, false);
  std::size_t rank = 0;

  for (std::size_t step = 0; step < rows && rank < cols; ++step) {
    // best remaining pivot across all free rows and columns
    double best_mag = 0;
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = rank; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        if (col_used[j] || a[i][j].is_zero_literal()) continue;
        double m = magnitude(a[i][j]);
        if (m > best_mag) {
          best_mag = m;
          pr = i;
          pc = j;
        }
      }
    if (pr == rows) {
      // no numerically visible pivot; try a symbolic one
      for (std::size_t i = rank; i < rows && pr == rows; ++i)
        for (std::size_t j = 0; j < cols && pr == rows; ++j)
          if (!col_used[j] && !is_zero(a[i][j])) {
            pr = i;
            pc = j;
          }
    }
    if (pr == rows) break;
    std::swap(a[rank], a[pr]);
    std::swap(rhs[rank], rhs[pr]);
    Expr inv = Expr(1) / a[rank][pc];
    for (std::size_t j = 0; j < cols; ++j) a[rank][j] = a[rank][j] * inv;
    rhs[rank] = rhs[rank] * inv;
    a[rank][pc] = Expr(1);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank) continue;
      Expr f = a[i][pc];
      if (f.is_zero_literal() || is_zero(f)) continue;
      for (std::size_t j = 0; j < cols; ++j)
        a[i][j] = a[i][j] - f * a[rank][j];
      rhs[i] = rhs[i] - f * rhs[rank];
      a[i][pc] = Expr(0);
    }
    pivot_col_of_row[rank] = static_cast<int>(pc);
    col_used[pc] = true;
    ++rank;
  }

  LinearSolution out;
  out.rank = static_cast<int>(rank);
  out.consistent = true;
  for (std::size_t i = rank; i < rows; ++i)
    if (!is_zero(rhs[i])) out.consistent = false;

  out.particular.assign(cols, Expr(0));
  if (out.consistent)
    for (std::size_t i = 0; i < rank; ++i)
      out.particular[pivot_col_of_row[i]] = rhs[i];

  for (std::size_t j = 0; j < cols; ++j) {
    if (col_used[j]) continue;
    std::vector<Expr> v(cols, Expr(0));
    v[j] = Expr(1);
    for (std::size_t i = 0; i < rank; ++i)
      v[pivot_col_of_row[i]] = -a[i][j];
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

}  // namespace coqe

#endif  // COQE_LINSOLVE_HPP
