#include "capslep/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace capslep::quadrature {

QuadRule<double> gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: n must be positive");
  if (n > kMaxNodes) {
    throw ResourceError("gauss_legendre: n = " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxNodes));
  }
  QuadRule<double> r;
  r.nodes.assign(static_cast<std::size_t>(n), 0.0);
  r.weights.assign(static_cast<std::size_t>(n), 0.0);
  const double eps = std::numeric_limits<double>::epsilon();
  const int half = n / 2;
  for (int i = 0; i < half; ++i) {
    // Negative root i (ascending), from the cosine asymptotic guess.
    double x = -std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double p = 0.0;
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      detail::legendre_p(n, x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= 4.0 * eps * std::abs(x)) break;
    }
    detail::legendre_p(n, x, p, dp);
    const double w = 2.0 / ((1.0 - x) * (1.0 + x) * dp * dp);
    r.nodes[static_cast<std::size_t>(i)] = x;
    r.nodes[static_cast<std::size_t>(n - 1 - i)] = -x;
    r.weights[static_cast<std::size_t>(i)] = w;
    r.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) {
    double p = 0.0;
    double dp = 0.0;
    detail::legendre_p(n, 0.0, p, dp);
    r.weights[static_cast<std::size_t>(half)] = 2.0 / (dp * dp);
  }
  return r;
}

QuadRule<double> map_interval(const QuadRule<double>& rule, double a, double b) {
  if (!(a < b)) throw DomainError("map_interval: requires a < b");
  QuadRule<double> out;
  out.nodes.reserve(rule.nodes.size());
  out.weights.reserve(rule.weights.size());
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    out.nodes.push_back(mid + half * rule.nodes[i]);
    out.weights.push_back(half * rule.weights[i]);
  }
  return out;
}

}  // namespace capslep::quadrature
