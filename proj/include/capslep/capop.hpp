#pragma once

// Per-order operators of the cap concentration problem:
//
//   K_m[l, l'] = int_{cos Theta}^{1} F_lm(x) F_l'm(x) dx        (dense, SPD)
//   J_m        = tridiagonal matrix of the commuting differential operator
//
// indexed by degrees l, l' = lmin(m) .. L, and the Shannon-number bookkeeping
// derived from their traces.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "capslep/double_double.hpp"
#include "capslep/errors.hpp"
#include "capslep/flm.hpp"
#include "capslep/quadrature.hpp"

namespace capslep::capop {

/// Bandlimit L >= 1 and cap half-angle Theta in (0, pi] (radians).
class CapProblem {
 public:
  CapProblem(int L, double theta);

  [[nodiscard]] int bandlimit() const { return L_; }
  [[nodiscard]] double theta() const { return theta_; }
  /// cos(Theta), exact at Theta = pi/2 and Theta = pi.
  [[nodiscard]] double cos_theta() const { return cos_theta_; }
  /// 2 pi (1 - cos Theta).
  [[nodiscard]] double area() const;

 private:
  int L_;
  double theta_;
  double cos_theta_;
};

/// One diagonal block of the problem: order m, degrees lmin(m) .. L.
class FixedOrderProblem {
 public:
  /// Throws DomainError when |m| > L.
  FixedOrderProblem(CapProblem cap, int m);

  [[nodiscard]] const CapProblem& cap() const { return cap_; }
  [[nodiscard]] int order() const { return m_; }
  [[nodiscard]] int min_degree() const { return flm::min_degree(m_); }
  [[nodiscard]] int size() const { return cap_.bandlimit() - min_degree() + 1; }

 private:
  CapProblem cap_;
  int m_;
};

/// Symmetric matrix with packed upper-triangle storage.
template <class Real>
class DenseSymT {
 public:
  DenseSymT() = default;
  explicit DenseSymT(int n) : n_(n), packed_(static_cast<std::size_t>(n * (n + 1) / 2), Real(0.0)) {}

  /// Upper triangle of a row-major n x n matrix.
  static DenseSymT from_full(const std::vector<Real>& full, int n) {
    if (full.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
      throw DomainError("DenseSym: expected n*n entries");
    }
    DenseSymT a(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) a.set(i, j, full[static_cast<std::size_t>(i * n + j)]);
    }
    return a;
  }

  [[nodiscard]] int size() const { return n_; }

  [[nodiscard]] const Real& operator()(int i, int j) const { return packed_[index(i, j)]; }
  void set(int i, int j, const Real& v) { packed_[index(i, j)] = v; }

  /// Row-major n x n copy.
  [[nodiscard]] std::vector<Real> to_full() const {
    std::vector<Real> full(static_cast<std::size_t>(n_ * n_));
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) full[static_cast<std::size_t>(i * n_ + j)] = (*this)(i, j);
    }
    return full;
  }

 private:
  [[nodiscard]] std::size_t index(int i, int j) const {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i * n_ - i * (i - 1) / 2 + (j - i));
  }
  int n_ = 0;
  std::vector<Real> packed_;
};

using DenseSym = DenseSymT<double>;
using DenseSymDD = DenseSymT<DoubleDouble>;

/// Symmetric tridiagonal matrix: n diagonal and n-1 off-diagonal entries.
struct TriDiagSym {
  std::vector<double> diag;
  std::vector<double> offdiag;

  [[nodiscard]] int size() const { return static_cast<int>(diag.size()); }
  [[nodiscard]] std::vector<double> to_full() const;
};

/// K_m assembled with one shared (L+1)-point Gauss-Legendre rule on
/// [cos Theta, 1]; exact since every integrand has degree <= 2L.
DenseSym assemble_K(const FixedOrderProblem& problem);

/// K_m in double-double arithmetic (extended-precision nodes, weights and
/// F_lm sweeps) for the same cos(Theta) value as assemble_K.
DenseSymDD assemble_K_dd(const FixedOrderProblem& problem);

/// Closed-form tridiagonal J_m:
///   J_ll     = -l(l+1) cos Theta + m [1 - (L(L+2)+1)/(l(l+1))]
///   J_l,l+1  = [l(l+2) - L(L+2)] zeta_{l+1,m}
TriDiagSym assemble_J(const FixedOrderProblem& problem);

/// Full J_m (row-major) from int_{-1}^{1} F_l (J F_l') dx, applying the
/// differential operator through the F recurrences; (L+2)-point rule.
std::vector<double> assemble_J_by_quadrature_full(const FixedOrderProblem& problem);

/// Tridiagonal part of assemble_J_by_quadrature_full.
TriDiagSym assemble_J_by_quadrature(const FixedOrderProblem& problem);

/// N_m = Tr K_m.
double partial_shannon(const FixedOrderProblem& problem);

/// N_m as int_{cos Theta}^{1} K_m(x, x) dx with the reproducing kernel.
double partial_shannon_by_kernel(const FixedOrderProblem& problem);

/// N = L(L+2) (1 - cos Theta) / 2.
double shannon(const CapProblem& cap);

/// Row-major product of two n x n matrices.
std::vector<double> matmul(std::span<const double> a, std::span<const double> b, int n);

/// max |K J - J K|.
double commutator_max(const DenseSym& k, const TriDiagSym& j);

namespace detail {

/// K_m accumulated in Real arithmetic over an arbitrary rule on [cos Theta, 1].
template <class Real>
DenseSymT<Real> assemble_K_with(const FixedOrderProblem& problem,
                                const quadrature::QuadRule<Real>& rule) {
  const int L = problem.cap().bandlimit();
  const int m = problem.order();
  const int n = problem.size();
  DenseSymT<Real> k(n);
  std::vector<Real> f(static_cast<std::size_t>(n));
  std::vector<Real> acc(static_cast<std::size_t>(n * (n + 1) / 2), Real(0.0));
  for (int q = 0; q < rule.size(); ++q) {
    flm::detail::f_column_sweep<Real>(m, L, rule.nodes[static_cast<std::size_t>(q)], f);
    const Real w = rule.weights[static_cast<std::size_t>(q)];
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) {
      const Real wf = w * f[static_cast<std::size_t>(i)];
      for (int j = i; j < n; ++j) acc[idx++] += wf * f[static_cast<std::size_t>(j)];
    }
  }
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) k.set(i, j, acc[idx++]);
  }
  return k;
}

}  // namespace detail

}  // namespace capslep::capop
