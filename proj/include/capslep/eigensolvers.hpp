#pragma once

// Symmetric eigensolvers: implicit-shift QL for tridiagonal matrices and
// cyclic Jacobi for dense matrices, the latter also in double-double
// arithmetic as a high-precision reference.
//
// Conventions shared by every solver: eigenvalues ascending; eigenvector i is
// paired with value i and scaled so its largest-magnitude component is
// positive (ties go to the lowest index).

#include <span>
#include <vector>

#include "capslep/capop.hpp"
#include "capslep/double_double.hpp"
#include "capslep/errors.hpp"

namespace capslep::eigen {

template <class Real>
struct EigenDecompositionT {
  std::vector<Real> values;
  std::vector<std::vector<Real>> vectors;  ///< vectors[i] pairs with values[i]

  [[nodiscard]] int size() const { return static_cast<int>(values.size()); }
};

using EigenDecomposition = EigenDecompositionT<double>;
using EigenDecompositionDD = EigenDecompositionT<DoubleDouble>;

/// Implicit Wilkinson-shift QL with eigenvector accumulation. Throws
/// ConvergenceError after 30 iterations on a single eigenvalue.
EigenDecomposition eigh_tridiag(const capop::TriDiagSym& t);

/// Cyclic Jacobi, iterated until the off-diagonal Frobenius norm is at most
/// eps * ||A||_F. Throws ConvergenceError after 50 sweeps.
EigenDecomposition eigh_dense(const capop::DenseSym& a);

/// Cyclic Jacobi carried out entirely in double-double arithmetic.
EigenDecompositionDD eigh_dense_dd(const capop::DenseSymDD& a);
EigenDecompositionDD eigh_dense_dd(const capop::DenseSym& a);

/// Rounds a double-double decomposition to double.
EigenDecomposition round_to_double(const EigenDecompositionDD& d);

/// gap_n = min_{j != n} |values[n] - values[j]|. Needs at least two values.
std::vector<double> eigval_gap(std::span<const double> values);

/// min(||v - ref||, ||v + ref||) for unit vectors of equal length. Throws
/// DomainError when a norm differs from one by more than 1e-12.
double vector_error(std::span<const double> v, std::span<const double> ref);

/// Applies the sign convention in place.
template <class Real>
void normalize_sign(std::vector<Real>& v) {
  std::size_t best = 0;
  Real best_abs(0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Real a = v[i] < Real(0.0) ? -v[i] : v[i];
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  if (!v.empty() && v[best] < Real(0.0)) {
    for (auto& x : v) x = -x;
  }
}

}  // namespace capslep::eigen
