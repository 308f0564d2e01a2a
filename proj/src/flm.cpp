#include "capslep/flm.hpp"

#include <cmath>
#include <string>

#include "capslep/legendre.hpp"

namespace capslep::flm {

namespace detail {

void check_index(int l, int m) {
  if (l < min_degree(m)) {
    throw DomainError("flm: invalid degree/order (l=" + std::to_string(l) +
                      ", m=" + std::to_string(m) + ")");
  }
}

}  // namespace detail

namespace {

void check_argument(double x) {
  if (!(std::abs(x) <= 1.0)) throw DomainError("flm: argument outside [-1, 1]");
}

void check_open(double x) {
  if (!(std::abs(x) < 1.0)) throw DomainError("flm: requires |x| < 1");
}

double c_l0(int l) { return std::sqrt((2.0 * l + 1.0) / 2.0); }

double endpoint_value(int l, int m, double x) {
  if (x > 0.0) return m == 1 ? c_l0(l) : 0.0;
  if (m != -1) return 0.0;
  return (l % 2 == 1) ? c_l0(l) : -c_l0(l);  // (-1)^{l-1}
}

}  // namespace

double zeta(int l, int m) {
  detail::check_index(l, m);
  if (l == 1 || std::abs(m) == l) return 0.0;
  return std::sqrt(double(l + 1) * double(l - 1) * double(l + m) * double(l - m) /
                   (double(2 * l + 1) * double(2 * l - 1))) /
         double(l);
}

std::vector<double> eval_F_column(int m, int L, double x) {
  check_argument(x);
  const int lmin = min_degree(m);
  if (lmin > L) return {};
  std::vector<double> out(static_cast<std::size_t>(L - lmin + 1), 0.0);
  if (std::abs(x) == 1.0) {
    for (int l = lmin; l <= L; ++l) out[static_cast<std::size_t>(l - lmin)] = endpoint_value(l, m, x);
    return out;
  }
  detail::f_column_sweep<double>(m, L, x, out);
  return out;
}

double eval_F(int l, int m, double x) {
  detail::check_index(l, m);
  check_argument(x);
  return eval_F_column(m, l, x).back();
}

double eval_F_via_U(int l, int m, double x) {
  detail::check_index(l, m);
  check_argument(x);
  const auto c = legendre::coeffs(l, m);
  using legendre::detail::eval_U_or_zero;
  const double sum = c.a_plus * eval_U_or_zero(l, m + 1, x) +
                     c.a_minus * eval_U_or_zero(l, m - 1, x) +
                     c.b_plus * eval_U_or_zero(l - 1, m + 1, x) +
                     c.b_minus * eval_U_or_zero(l - 1, m - 1, x);
  return -sum / std::sqrt(double(l) * double(l + 1));
}

double eval_F_direct(int l, int m, double x) {
  detail::check_index(l, m);
  check_open(x);
  // sqrt(1-x^2) dU/dx from (1-x^2) U' = -l x U_l + (2l+1) xi_l U_{l-1}.
  const double s = std::sqrt((1.0 - x) * (1.0 + x));
  const double u = legendre::eval_U(l, m, x);
  const double u_prev = legendre::detail::eval_U_or_zero(l - 1, m, x);
  const double xi = std::abs(m) == l ? 0.0 : legendre::xi(l, m);
  const double du = (-l * x * u + (2.0 * l + 1.0) * xi * u_prev) / s;
  return (du - m * u / s) / std::sqrt(double(l) * double(l + 1));
}

double eval_F_deriv_combo(int l, int m, double x) {
  detail::check_index(l, m);
  check_open(x);
  const auto col = eval_F_column(m, l, x);
  const double f = col.back();
  const double f_prev = col.size() >= 2 ? col[col.size() - 2] : 0.0;
  const double dl = l;
  return -dl * (x - m / (dl * dl)) * f + (2.0 * dl + 1.0) * zeta(l, m) * f_prev;
}

double eval_F_second_combo(int l, int m, double x) {
  detail::check_index(l, m);
  check_open(x);
  const auto col = eval_F_column(m, l, x);
  const double f = col.back();
  const double f_prev = col.size() >= 2 ? col[col.size() - 2] : 0.0;
  const double dl = l;
  const double z = zeta(l, m);
  const double w = (1.0 - x) * (1.0 + x);
  // (1-x^2) F_l' from the downward form, (1-x^2) F_{l-1}' from the upward form
  // written for degree l-1.
  const double d_l = -dl * (x - m / (dl * dl)) * f + (2.0 * dl + 1.0) * z * f_prev;
  const double d_prev = dl * (x - m / (dl * dl)) * f_prev - (2.0 * dl - 1.0) * z * f;
  return -dl * f - dl * (x - m / (dl * dl)) * (d_l / w) + (2.0 * dl + 1.0) * z * (d_prev / w);
}

double kernel_K(int m, int L, double x, double xp) {
  const auto a = eval_F_column(m, L, x);
  const auto b = eval_F_column(m, L, xp);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double christoffel_darboux_rhs(int m, int L, double x, double xp) {
  if (min_degree(m) > L) return 0.0;
  const auto a = eval_F_column(m, L + 1, x);
  const auto b = eval_F_column(m, L + 1, xp);
  const std::size_t n = a.size();
  return zeta(L + 1, m) * (a[n - 1] * b[n - 2] - a[n - 2] * b[n - 1]);
}

}  // namespace capslep::flm
