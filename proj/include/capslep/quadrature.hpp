#pragma once

// Gauss-Legendre quadrature rules on [-1, 1] and their affine images.

#include <cmath>
#include <numbers>
#include <vector>

#include "capslep/errors.hpp"

namespace capslep::quadrature {

/// Largest node count accepted by gauss_legendre.
inline constexpr int kMaxNodes = 1000000;

/// n-point rule: nodes strictly increasing, weights positive.
template <class Real = double>
struct QuadRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
  [[nodiscard]] int size() const { return static_cast<int>(nodes.size()); }
};

/// Standard n-point Gauss-Legendre rule, exact for polynomials of degree
/// <= 2n-1. Nodes are mirrored so that nodes[i] == -nodes[n-1-i] bitwise.
/// Throws DomainError for n < 1 and ResourceError for n > kMaxNodes.
QuadRule<double> gauss_legendre(int n);

/// Affine image of a rule on [a, b]; weights scaled by (b - a)/2.
QuadRule<double> map_interval(const QuadRule<double>& rule, double a, double b);

namespace detail {

/// P_n(x) and P_n'(x) by the three-term recurrence.
template <class Real>
void legendre_p(int n, const Real& x, Real& p, Real& dp) {
  Real p0(1.0);
  Real p1 = x;
  if (n == 0) {
    p = p0;
    dp = Real(0.0);
    return;
  }
  for (int k = 1; k < n; ++k) {
    const Real p2 = (Real(2 * k + 1) * x * p1 - Real(k) * p0) / Real(k + 1);
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = Real(n) * (x * p1 - p0) / (x * x - Real(1.0));
}

}  // namespace detail

/// Refines the double rule in extended precision (a few Newton steps per node)
/// and recomputes the weights there. Real must provide +,-,*,/ and comparison.
template <class Real>
QuadRule<Real> gauss_legendre_refined(int n, int newton_steps = 3) {
  const QuadRule<double> base = gauss_legendre(n);
  QuadRule<Real> r;
  r.nodes.resize(static_cast<std::size_t>(n));
  r.weights.resize(static_cast<std::size_t>(n));
  const int half = n / 2;
  for (int i = 0; i < half; ++i) {
    Real x(base.nodes[static_cast<std::size_t>(i)]);
    Real p, dp;
    for (int it = 0; it < newton_steps; ++it) {
      detail::legendre_p(n, x, p, dp);
      x = x - p / dp;
    }
    detail::legendre_p(n, x, p, dp);
    const Real w = Real(2.0) / ((Real(1.0) - x * x) * dp * dp);
    r.nodes[static_cast<std::size_t>(i)] = x;
    r.nodes[static_cast<std::size_t>(n - 1 - i)] = -x;
    r.weights[static_cast<std::size_t>(i)] = w;
    r.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) {
    Real p, dp;
    detail::legendre_p(n, Real(0.0), p, dp);
    r.nodes[static_cast<std::size_t>(half)] = Real(0.0);
    r.weights[static_cast<std::size_t>(half)] = Real(2.0) / (dp * dp);
  }
  return r;
}

/// Affine image of an extended-precision rule.
template <class Real>
QuadRule<Real> map_interval_refined(const QuadRule<Real>& rule, const Real& a, const Real& b) {
  if (!(a < b)) throw DomainError("map_interval: requires a < b");
  QuadRule<Real> out;
  const Real half = (b - a) / Real(2.0);
  const Real mid = (b + a) / Real(2.0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    out.nodes.push_back(mid + half * rule.nodes[i]);
    out.weights.push_back(half * rule.weights[i]);
  }
  return out;
}

}  // namespace capslep::quadrature
