#ifndef COQE_TENSOR_HPP
#define COQE_TENSOR_HPP

#include <cmath>
#include <initializer_list>
#include <vector>

#include "coqe/chart.hpp"

namespace coqe {

enum class Var { Co, Contra };

/// Dense variance-tagged multi-index array of expressions over a chart.
class Tensor {
 public:
  Tensor(ChartPtr chart, std::vector<Var> variance)
      : chart_(std::move(chart)), var_(std::move(variance)) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < var_.size(); ++i) count *= n();
    comp_.assign(count, Expr(0));
  }

  int n() const { return chart_->dim(); }
  int rank() const { return static_cast<int>(var_.size()); }
  const std::vector<Var>& variance() const { return var_; }
  const ChartPtr& chart() const { return chart_; }

  Expr& at(const std::vector<int>& idx) { return comp_[flat(idx)]; }
  const Expr& at(const std::vector<int>& idx) const { return comp_[flat(idx)]; }
  Expr& at(std::initializer_list<int> idx) { return comp_[flat(idx)]; }
  const Expr& at(std::initializer_list<int> idx) const { return comp_[flat(idx)]; }

  const std::vector<Expr>& components() const { return comp_; }
  std::vector<Expr>& components() { return comp_; }

  /// Iterate all index tuples in row-major order.
  template <typename F>
  void for_each(F&& f) const {
    std::vector<int> idx(rank(), 0);
    std::size_t total = comp_.size();
    for (std::size_t flat = 0; flat < total; ++flat) {
      f(idx, comp_[flat]);
      for (int d = rank() - 1; d >= 0; --d) {
        if (++idx[d] < n()) break;
        idx[d] = 0;
      }
    }
  }

  bool all_zero_literal() const {
    for (const auto& c : comp_)
      if (!c.is_zero_literal()) return false;
    return true;
  }

  bool all_zero_symbolic() const {
    for (const auto& c : comp_)
      if (!is_zero(c)) return false;
    return true;
  }

  friend Tensor operator+(const Tensor& a, const Tensor& b) {
    a.require_same_shape(b);
    Tensor r = a;
    for (std::size_t i = 0; i < r.comp_.size(); ++i)
      r.comp_[i] = r.comp_[i] + b.comp_[i];
    return r;
  }
  friend Tensor operator-(const Tensor& a, const Tensor& b) {
    a.require_same_shape(b);
    Tensor r = a;
    for (std::size_t i = 0; i < r.comp_.size(); ++i)
      r.comp_[i] = r.comp_[i] - b.comp_[i];
    return r;
  }
  friend Tensor operator*(const Expr& s, const Tensor& t) {
    Tensor r = t;
    for (auto& c : r.comp_) c = s * c;
    return r;
  }

  void require_same_shape(const Tensor& o) const {
    if (chart_ != o.chart_ || var_ != o.var_)
      throw Error("tensor shape or chart mismatch");
  }

  bool symmetric2() const {
    if (rank() != 2) return false;
    for (int i = 0; i < n(); ++i)
      for (int j = i + 1; j < n(); ++j)
        if (!is_zero(at({i, j}) - at({j, i}))) return false;
    return true;
  }

 private:
  std::size_t flat(const std::vector<int>& idx) const {
    std::size_t f = 0;
    for (std::size_t d = 0; d < idx.size(); ++d) f = f * n() + idx[d];
    return f;
  }
  std::size_t flat(std::initializer_list<int> idx) const {
    std::size_t f = 0;
    for (int i : idx) f = f * n() + i;
    return f;
  }

  ChartPtr chart_;
  std::vector<Var> var_;
  std::vector<Expr> comp_;
};

using VectorField = Tensor;  // rank 1, contravariant
using OneForm = Tensor;      // rank 1, covariant

inline VectorField make_vector(ChartPtr chart, std::vector<Expr> comps) {
  VectorField v(chart, {Var::Contra});
  if (static_cast<int>(comps.size()) != v.n())
    throw Error("vector component count mismatch");
  for (int i = 0; i < v.n(); ++i) v.at({i}) = comps[i];
  return v;
}

inline OneForm make_one_form(ChartPtr chart, std::vector<Expr> comps) {
  OneForm w(chart, {Var::Co});
  if (static_cast<int>(comps.size()) != w.n())
    throw Error("one-form component count mismatch");
  for (int i = 0; i < w.n(); ++i) w.at({i}) = comps[i];
  return w;
}

inline Tensor make_sym2(ChartPtr chart,
                        const std::vector<std::vector<Expr>>& m) {
  Tensor t(chart, {Var::Co, Var::Co});
  int n = t.n();
  if (static_cast<int>(m.size()) != n) throw Error("matrix size mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.at({i, j}) = m[i][j];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!is_zero(t.at({i, j}) - t.at({j, i})))
        throw Error("matrix is not symmetric");
  return t;
}

// ---------------------------------------------------------------------------
// small symbolic matrix helpers

/// Determinant by cofactor expansion along the first column, skipping
/// structural zeros (charts are small and metrics sparse).
inline Expr sym_det(const std::vector<std::vector<Expr>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Expr acc(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][0].is_zero_literal()) continue;
    std::vector<std::vector<Expr>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      std::vector<Expr> row;
      row.reserve(n - 1);
      for (std::size_t c = 1; c < n; ++c) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Expr term = m[i][0] * sym_det(minor);
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

/// Adjugate matrix (transpose of cofactors): inv = adj / det.
inline std::vector<std::vector<Expr>> sym_adjugate(
    const std::vector<std::vector<Expr>>& m) {
  std::size_t n = m.size();
  std::vector<std::vector<Expr>> adj(n, std::vector<Expr>(n, Expr(0)));
  if (n == 1) {
    adj[0][0] = Expr(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<Expr>> minor;
      minor.reserve(n - 1);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<Expr> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      Expr cof = sym_det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj[j][i] = cof;  // transpose
    }
  return adj;
}

/// Signs of the eigenvalues of a numeric symmetric matrix (Jacobi sweep).
inline std::vector<int> eigen_signs(std::vector<std::vector<double>> a) {
  std::size_t n = a.size();
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-24) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-18) continue;
        double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t i = 0; i < n; ++i) {
          double aip = a[i][p], aiq = a[i][q];
          a[i][p] = c * aip - s * aiq;
          a[i][q] = s * aip + c * aiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          double api = a[p][i], aqi = a[q][i];
          a[p][i] = c * api - s * aqi;
          a[q][i] = s * api + c * aqi;
        }
      }
  }
  std::vector<int> signs;
  for (std::size_t i = 0; i < n; ++i) signs.push_back(a[i][i] >= 0 ? 1 : -1);
  return signs;
}

}  // namespace coqe

#endif  // COQE_TENSOR_HPP
