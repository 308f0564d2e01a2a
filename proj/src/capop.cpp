#include "capslep/capop.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace capslep::capop {

CapProblem::CapProblem(int L, double theta) : L_(L), theta_(theta) {
  if (L < 1) throw DomainError("CapProblem: bandlimit must be >= 1");
  if (!(theta > 0.0 && theta <= std::numbers::pi)) {
    throw DomainError("CapProblem: cap half-angle must lie in (0, pi]");
  }
  if (theta == std::numbers::pi) {
    cos_theta_ = -1.0;
  } else if (theta == std::numbers::pi / 2) {
    cos_theta_ = 0.0;
  } else {
    cos_theta_ = std::cos(theta);
  }
}

double CapProblem::area() const { return 2.0 * std::numbers::pi * (1.0 - cos_theta_); }

FixedOrderProblem::FixedOrderProblem(CapProblem cap, int m) : cap_(cap), m_(m) {
  if (std::abs(m) > cap.bandlimit()) {
    throw DomainError("FixedOrderProblem: |m| = " + std::to_string(std::abs(m)) +
                      " exceeds the bandlimit");
  }
}

std::vector<double> TriDiagSym::to_full() const {
  const int n = size();
  std::vector<double> full(static_cast<std::size_t>(n * n), 0.0);
  for (int i = 0; i < n; ++i) {
    full[static_cast<std::size_t>(i * n + i)] = diag[static_cast<std::size_t>(i)];
    if (i + 1 < n) {
      full[static_cast<std::size_t>(i * n + i + 1)] = offdiag[static_cast<std::size_t>(i)];
      full[static_cast<std::size_t>((i + 1) * n + i)] = offdiag[static_cast<std::size_t>(i)];
    }
  }
  return full;
}

DenseSym assemble_K(const FixedOrderProblem& problem) {
  const int L = problem.cap().bandlimit();
  const auto rule =
      quadrature::map_interval(quadrature::gauss_legendre(L + 1), problem.cap().cos_theta(), 1.0);
  return detail::assemble_K_with<double>(problem, rule);
}

DenseSymDD assemble_K_dd(const FixedOrderProblem& problem) {
  const int L = problem.cap().bandlimit();
  const auto base = quadrature::gauss_legendre_refined<DoubleDouble>(L + 1);
  const auto rule = quadrature::map_interval_refined<DoubleDouble>(
      base, DoubleDouble(problem.cap().cos_theta()), DoubleDouble(1.0));
  return detail::assemble_K_with<DoubleDouble>(problem, rule);
}

TriDiagSym assemble_J(const FixedOrderProblem& problem) {
  const int L = problem.cap().bandlimit();
  const int m = problem.order();
  const int lmin = problem.min_degree();
  const double c = problem.cap().cos_theta();
  const double big = double(L) * double(L + 2);
  TriDiagSym j;
  for (int l = lmin; l <= L; ++l) {
    const double ll = double(l) * double(l + 1);
    j.diag.push_back(-ll * c + m * (1.0 - (big + 1.0) / ll));
    if (l < L) j.offdiag.push_back((double(l) * double(l + 2) - big) * flm::zeta(l + 1, m));
  }
  return j;
}

std::vector<double> assemble_J_by_quadrature_full(const FixedOrderProblem& problem) {
  const int L = problem.cap().bandlimit();
  const int m = problem.order();
  const int lmin = problem.min_degree();
  const int n = problem.size();
  const double c = problem.cap().cos_theta();
  const double big = double(L) * double(L + 2);
  const auto rule = quadrature::gauss_legendre(L + 2);

  std::vector<double> full(static_cast<std::size_t>(n * n), 0.0);
  std::vector<double> applied(static_cast<std::size_t>(n));
  for (int q = 0; q < rule.size(); ++q) {
    const double x = rule.nodes[static_cast<std::size_t>(q)];
    const double w = rule.weights[static_cast<std::size_t>(q)];
    const auto f = flm::eval_F_column(m, L, x);
    for (int b = 0; b < n; ++b) {
      const int l = lmin + b;
      // J = (cos Theta - x) Delta_m - (1 - x^2) d/dx - L(L+2) x, with
      // Delta_m F_l = -l(l+1) F_l.
      const double fl = f[static_cast<std::size_t>(b)];
      applied[static_cast<std::size_t>(b)] = (c - x) * (-double(l) * double(l + 1)) * fl -
                                             flm::eval_F_deriv_combo(l, m, x) - big * x * fl;
    }
    for (int a = 0; a < n; ++a) {
      const double wf = w * f[static_cast<std::size_t>(a)];
      for (int b = 0; b < n; ++b) full[static_cast<std::size_t>(a * n + b)] += wf * applied[static_cast<std::size_t>(b)];
    }
  }
  return full;
}

TriDiagSym assemble_J_by_quadrature(const FixedOrderProblem& problem) {
  const auto full = assemble_J_by_quadrature_full(problem);
  const int n = problem.size();
  TriDiagSym j;
  for (int i = 0; i < n; ++i) {
    j.diag.push_back(full[static_cast<std::size_t>(i * n + i)]);
    if (i + 1 < n) j.offdiag.push_back(full[static_cast<std::size_t>(i * n + i + 1)]);
  }
  return j;
}

double partial_shannon(const FixedOrderProblem& problem) {
  const DenseSym k = assemble_K(problem);
  double trace = 0.0;
  for (int i = 0; i < k.size(); ++i) trace += k(i, i);
  return trace;
}

double partial_shannon_by_kernel(const FixedOrderProblem& problem) {
  const int L = problem.cap().bandlimit();
  const auto rule =
      quadrature::map_interval(quadrature::gauss_legendre(L + 1), problem.cap().cos_theta(), 1.0);
  double sum = 0.0;
  for (int q = 0; q < rule.size(); ++q) {
    const double x = rule.nodes[static_cast<std::size_t>(q)];
    sum += rule.weights[static_cast<std::size_t>(q)] * flm::kernel_K(problem.order(), L, x, x);
  }
  return sum;
}

double shannon(const CapProblem& cap) {
  const double L = cap.bandlimit();
  return L * (L + 2.0) * (1.0 - cap.cos_theta()) / 2.0;
}

std::vector<double> matmul(std::span<const double> a, std::span<const double> b, int n) {
  std::vector<double> c(static_cast<std::size_t>(n * n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double aik = a[static_cast<std::size_t>(i * n + k)];
      for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i * n + j)] += aik * b[static_cast<std::size_t>(k * n + j)];
    }
  }
  return c;
}

double commutator_max(const DenseSym& k, const TriDiagSym& j) {
  const int n = k.size();
  const auto kf = k.to_full();
  const auto jf = j.to_full();
  const auto kj = matmul(kf, jf, n);
  const auto jk = matmul(jf, kf, n);
  double worst = 0.0;
  for (std::size_t i = 0; i < kj.size(); ++i) worst = std::max(worst, std::abs(kj[i] - jk[i]));
  return worst;
}

}  // namespace capslep::capop
