#pragma once

// Cyclic Jacobi eigensolver generic in the scalar type. Shared by the double,
// double-double and high-precision entry points.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "capslep/eigensolvers.hpp"
#include "capslep/errors.hpp"

namespace capslep::eigen::detail {

template <class Real>
Real abs_of(const Real& v) {
  return v < Real(0.0) ? -v : v;
}

/// Sorts ascending (stable on ties) and applies the sign convention.
template <class Real>
EigenDecompositionT<Real> finalize(std::vector<Real> values, std::vector<std::vector<Real>> vectors) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  EigenDecompositionT<Real> out;
  for (std::size_t i : order) {
    out.values.push_back(values[i]);
    out.vectors.push_back(std::move(vectors[i]));
    normalize_sign(out.vectors.back());
  }
  return out;
}

/// Row-major n x n symmetric input. Iterates cyclic sweeps until the
/// off-diagonal Frobenius norm drops to rel_tol * ||A||_F.
template <class Real>
EigenDecompositionT<Real> jacobi(std::vector<Real> a, int n, const Real& rel_tol) {
  using std::sqrt;
  auto at = [&](int i, int j) -> Real& { return a[static_cast<std::size_t>(i * n + j)]; };
  std::vector<Real> v(static_cast<std::size_t>(n * n), Real(0.0));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i * n + i)] = Real(1.0);

  Real frob2(0.0);
  for (const auto& x : a) frob2 += x * x;
  const Real threshold2 = rel_tol * rel_tol * frob2;
  // Beyond this |tau| the rotation angle is t = 1/(2 tau) to full precision.
  const Real huge_tau = Real(1.0) / rel_tol;

  constexpr int kMaxSweeps = 50;
  bool converged = false;
  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    Real off2(0.0);
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off2 += Real(2.0) * at(p, q) * at(p, q);
    }
    if (!(off2 > threshold2)) {
      converged = true;
      break;
    }
    if (sweep == kMaxSweeps) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Real apq = at(p, q);
        if (apq == Real(0.0)) continue;
        const Real tau = (at(q, q) - at(p, p)) / (Real(2.0) * apq);
        Real t;
        if (abs_of(tau) > huge_tau) {
          t = Real(0.5) / tau;
        } else {
          const Real root = sqrt(Real(1.0) + tau * tau);
          t = tau < Real(0.0) ? Real(-1.0) / (abs_of(tau) + root) : Real(1.0) / (abs_of(tau) + root);
        }
        const Real c = Real(1.0) / sqrt(Real(1.0) + t * t);
        const Real s = t * c;
        // A <- G^T A G on rows/columns p and q.
        for (int k = 0; k < n; ++k) {
          const Real akp = at(k, p);
          const Real akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const Real apk = at(p, k);
          const Real aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = Real(0.0);
        at(q, p) = Real(0.0);
        for (int k = 0; k < n; ++k) {
          Real& vkp = v[static_cast<std::size_t>(k * n + p)];
          Real& vkq = v[static_cast<std::size_t>(k * n + q)];
          const Real tp = vkp;
          const Real tq = vkq;
          vkp = c * tp - s * tq;
          vkq = s * tp + c * tq;
        }
      }
    }
  }
  if (!converged) throw ConvergenceError("eigh_dense: Jacobi did not converge in 50 sweeps");

  std::vector<Real> values(static_cast<std::size_t>(n));
  std::vector<std::vector<Real>> vectors(static_cast<std::size_t>(n),
                                         std::vector<Real>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    values[static_cast<std::size_t>(i)] = at(i, i);
    for (int k = 0; k < n; ++k) {
      vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(k * n + i)];
    }
  }
  return finalize(std::move(values), std::move(vectors));
}

}  // namespace capslep::eigen::detail
