#pragma once

// Normalized associated Legendre functions
//
//   U_lm(x) = c_lm P_l^m(x),  c_lm = sqrt((2l+1)/2 (l-m)!/(l+m)!),
//
// with the Condon-Shortley phase (-1)^m included in P_l^m. The U_lm are
// orthonormal on [-1, 1] for fixed m. Evaluation seeds U_mm from an
// iteratively accumulated product and sweeps the three-term recurrence
// upward in l; negative orders follow from U_{l,-m} = (-1)^m U_lm.

#include <cmath>
#include <cstdlib>
#include <span>
#include <utility>
#include <vector>

#include "capslep/errors.hpp"

namespace capslep::legendre {

/// Degree/order pair with 0 <= |m| <= l.
struct DegreeOrder {
  int l = 0;
  int m = 0;
};

/// Coupling coefficients of the U_lm recurrences for one (l, m).
struct LegendreCoeffs {
  double c = 0.0;        ///< normalization c_lm
  double xi = 0.0;       ///< three-term coupling xi_lm
  double a_plus = 0.0;   ///< derivative coupling to U_{l,m+1}
  double a_minus = 0.0;  ///< derivative coupling to U_{l,m-1}
  double b_plus = 0.0;   ///< order coupling to U_{l-1,m+1}
  double b_minus = 0.0;  ///< order coupling to U_{l-1,m-1}
};

/// c_lm = sqrt((2l+1)/2 * (l-m)!/(l+m)!). Requires |m| <= l.
double norm_factor(int l, int m);

/// xi_lm = sqrt((l+m)(l-m) / ((2l+1)(2l-1))); zero for |m| = l.
double xi(int l, int m);

LegendreCoeffs coeffs(int l, int m);

/// U_lm(x). Throws DomainError if |m| > l, l < 0 or |x| > 1.
double eval_U(int l, int m, double x);

/// (U_{|m|,m}(x), ..., U_{L,m}(x)) from one recurrence sweep. Element k is
/// bitwise identical to eval_U(|m| + k, m, x).
std::vector<double> eval_U_column(int m, int L, double x);

/// The two singularity-free combinations
///   first  = -sqrt(1-x^2) dU_lm/dx = a+ U_{l,m+1} + a- U_{l,m-1}
///   second = m U_lm / sqrt(1-x^2)  = b+ U_{l-1,m+1} + b- U_{l-1,m-1}
/// Requires |x| < 1.
std::pair<double, double> eval_dU_and_ratio(int l, int m, double x);

/// (1-x^2) dU_lm/dx = -l x U_lm + (2l+1) xi_lm U_{l-1,m}. Requires |x| < 1.
double eval_U_deriv_combo(int l, int m, double x);

/// d/dx[(1-x^2) dU_lm/dx] by differentiating the relation above once more.
/// Requires |x| < 1.
double eval_U_second_combo(int l, int m, double x);

namespace detail {

void check_index(int l, int m);
void check_argument(double x);

/// U_{l,m} with the convention U := 0 whenever |m| > l or l < 0. No argument
/// check; used by the coupled forms that touch neighbouring orders.
double eval_U_or_zero(int l, int m, double x);

/// Raw recurrence sweep for |m| <= L, writing L - |m| + 1 values to out.
/// Valid on the closed interval [-1, 1] (no endpoint short-circuit); generic
/// in the scalar type so the same sweep runs in extended precision.
template <class Real>
void u_column_sweep(int m, int L, const Real& x, std::span<Real> out) {
  using std::sqrt;
  const int ma = std::abs(m);
  const Real one(1.0);
  const Real s = sqrt((one - x) * (one + x));
  // U_mm = (-1)^m sqrt(1/2) prod_{k=1}^{m} sqrt((2k+1)/(2k)) s^m,
  // accumulated as a running product to avoid factorial overflow.
  Real p = sqrt(Real(0.5));
  for (int k = 1; k <= ma; ++k) {
    p = -(p * sqrt(Real(2 * k + 1) / Real(2 * k)) * s);
  }
  out[0] = p;
  Real prev(0.0);
  Real cur = p;
  for (int l = ma; l < L; ++l) {
    // x U_l = xi_l U_{l-1} + xi_{l+1} U_{l+1}
    const Real xi_l = l == ma ? Real(0.0)
                              : sqrt(Real(double(l + ma) * double(l - ma)) /
                                     Real(double(2 * l + 1) * double(2 * l - 1)));
    const Real xi_next = sqrt(Real(double(l + 1 + ma) * double(l + 1 - ma)) /
                              Real(double(2 * l + 3) * double(2 * l + 1)));
    const Real next = (x * cur - xi_l * prev) / xi_next;
    prev = cur;
    cur = next;
    out[static_cast<std::size_t>(l + 1 - ma)] = cur;
  }
  if (m < 0 && (ma % 2 == 1)) {
    for (auto& v : out.first(static_cast<std::size_t>(L - ma + 1))) v = -v;
  }
}

}  // namespace detail
}  // namespace capslep::legendre
