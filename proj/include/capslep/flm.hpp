#pragma once

// Sheppard-Torok functions
//
//   F_lm(x) = [ sqrt(1-x^2) dU_lm/dx - m U_lm / sqrt(1-x^2) ] / sqrt(l(l+1)),
//
// defined for l >= lmin(m) = max(1, |m|). For fixed m they are orthonormal on
// [-1, 1] and are the eigenfunctions of the fixed-order diagonalized vector
// Laplacian. They satisfy the three-term recurrence
//
//   [x - m/(l(l+1))] F_lm = zeta_lm F_{l-1,m} + zeta_{l+1,m} F_{l+1,m},
//
// which is swept upward from the closed-form seed F_{lmin,m}.

#include <cmath>
#include <cstdlib>
#include <span>
#include <vector>

#include "capslep/errors.hpp"

namespace capslep::flm {

/// Minimal degree max(1, |m|).
constexpr int min_degree(int m) { return std::abs(m) > 1 ? std::abs(m) : 1; }

struct FlmIndex {
  int l = 1;
  int m = 0;
};

/// zeta_lm = sqrt((l+1)(l-1)(l+m)(l-m) / ((2l+1)(2l-1))) / l. Zero for |m| = l
/// and for l = 1.
double zeta(int l, int m);

/// F_lm(x), |x| <= 1. Endpoints use the closed forms
///   F_lm(1)  = c_{l,0} if m = 1, else 0;
///   F_lm(-1) = (-1)^{l-1} c_{l,0} if m = -1, else 0.
double eval_F(int l, int m, double x);

/// (F_{lmin,m}(x), ..., F_{L,m}(x)); empty when lmin(m) > L. Element k is
/// bitwise identical to eval_F(lmin + k, m, x).
std::vector<double> eval_F_column(int m, int L, double x);

/// F_lm through the singularity-free combination of U_{l,m+-1} and
/// U_{l-1,m+-1}. Independent of the F recurrence; used for cross-validation.
double eval_F_via_U(int l, int m, double x);

/// F_lm from its definition with the explicit 1/sqrt(1-x^2) factors. Only for
/// |x| < 1; loses accuracy near the endpoints.
double eval_F_direct(int l, int m, double x);

/// (1-x^2) dF_lm/dx = -l (x - m/l^2) F_lm + (2l+1) zeta_lm F_{l-1,m}, with
/// F_{lmin-1,m} := 0. Requires |x| < 1.
double eval_F_deriv_combo(int l, int m, double x);

/// d/dx[(1-x^2) dF_lm/dx], obtained by differentiating the derivative
/// recurrence and substituting it for F_lm and F_{l-1,m} again. Requires |x| < 1.
double eval_F_second_combo(int l, int m, double x);

/// Reproducing kernel sum_{l=lmin}^{L} F_lm(x) F_lm(x'). Zero when lmin > L.
double kernel_K(int m, int L, double x, double xp);

/// Right-hand side of the Christoffel-Darboux identity,
/// zeta_{L+1,m} [F_{L+1,m}(x) F_Lm(x') - F_Lm(x) F_{L+1,m}(x')].
double christoffel_darboux_rhs(int m, int L, double x, double xp);

namespace detail {

void check_index(int l, int m);

/// Raw sweep on [-1, 1] (no endpoint short-circuit) writing L - lmin + 1
/// values. Generic in the scalar type.
template <class Real>
void f_column_sweep(int m, int L, const Real& x, std::span<Real> out) {
  using std::sqrt;
  const int ma = std::abs(m);
  const int lmin = min_degree(m);
  if (lmin > L) return;
  const Real one(1.0);
  const Real s = sqrt((one - x) * (one + x));

  Real seed;
  if (m == 0) {
    seed = sqrt(Real(3.0)) / Real(2.0) * s;
  } else {
    // Phi_m = sqrt(m/(m+1)) c_mm (2m-1)!! s^{m-1}, with
    // c_mm (2m-1)!! = sqrt(1/2) prod_{k=1}^{m} sqrt((2k+1)/(2k)).
    Real t = sqrt(Real(0.5)) * sqrt(Real(1.5));
    for (int k = 2; k <= ma; ++k) t = t * sqrt(Real(2 * k + 1) / Real(2 * k)) * s;
    const Real phi = sqrt(Real(ma) / Real(ma + 1)) * t;
    if (m > 0) {
      seed = (one + x) * phi;
      if (ma % 2 == 0) seed = -seed;  // (-1)^{m+1}
    } else {
      seed = (one - x) * phi;
    }
  }

  out[0] = seed;
  Real prev(0.0);
  Real cur = seed;
  for (int l = lmin; l < L; ++l) {
    const Real zeta_l =
        l == lmin ? Real(0.0)
                  : sqrt(Real(double(l + 1) * double(l - 1) * double(l + m) * double(l - m)) /
                         Real(double(2 * l + 1) * double(2 * l - 1))) /
                        Real(l);
    const int n = l + 1;
    const Real zeta_next =
        sqrt(Real(double(n + 1) * double(n - 1) * double(n + m) * double(n - m)) /
             Real(double(2 * n + 1) * double(2 * n - 1))) /
        Real(n);
    const Real shift = x - Real(double(m)) / Real(double(l) * double(l + 1));
    const Real next = (shift * cur - zeta_l * prev) / zeta_next;
    prev = cur;
    cur = next;
    out[static_cast<std::size_t>(n - lmin)] = cur;
  }
}

}  // namespace detail
}  // namespace capslep::flm
