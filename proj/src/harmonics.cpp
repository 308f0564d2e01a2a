#include "capslep/harmonics.hpp"

#include <cmath>
#include <numbers>

#include "capslep/flm.hpp"
#include "capslep/legendre.hpp"
#include "capslep/quadrature.hpp"

namespace capslep::harmonics {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
const Complex kI{0.0, 1.0};

struct Frame {
  double cos_t, sin_t, cos_p, sin_p;
};

Frame frame(const SpherePoint& p) {
  Frame f{};
  if (p.theta == 0.0) {
    f.cos_t = 1.0;
    f.sin_t = 0.0;
  } else if (p.theta == kPi) {
    f.cos_t = -1.0;
    f.sin_t = 0.0;
  } else {
    f.cos_t = std::cos(p.theta);
    f.sin_t = std::sin(p.theta);
  }
  f.cos_p = std::cos(p.phi);
  f.sin_p = std::sin(p.phi);
  return f;
}

bool at_pole(const SpherePoint& p) { return p.theta == 0.0 || p.theta == kPi; }

void check_point(const SpherePoint& p) {
  if (!(p.theta >= 0.0 && p.theta <= kPi) || !std::isfinite(p.phi)) {
    throw DomainError("harmonics: colatitude outside [0, pi]");
  }
}

Complex azimuthal(int m, double phi) {
  return std::polar(1.0 / std::sqrt(2.0 * kPi), m * phi);
}

}  // namespace

double TangentValue::norm2() const {
  return std::norm(components[0]) + std::norm(components[1]) + std::norm(components[2]);
}

TangentValue to_polar(const TangentValue& v, const SpherePoint& p) {
  switch (v.basis) {
    case Basis::polar:
      return v;
    case Basis::tau: {
      const Complex vp = v.components[0];
      const Complex vm = v.components[1];
      return TangentValue::polar((vp + vm) * kInvSqrt2, kI * (vp - vm) * kInvSqrt2);
    }
    case Basis::cartesian: {
      const Frame f = frame(p);
      const auto& c = v.components;
      const Complex vt = f.cos_t * f.cos_p * c[0] + f.cos_t * f.sin_p * c[1] - f.sin_t * c[2];
      const Complex vf = -f.sin_p * c[0] + f.cos_p * c[1];
      return TangentValue::polar(vt, vf);
    }
  }
  return v;
}

TangentValue to_tau(const TangentValue& v, const SpherePoint& p) {
  if (v.basis == Basis::tau) return v;
  const TangentValue pol = to_polar(v, p);
  const Complex vt = pol.components[0];
  const Complex vf = pol.components[1];
  return TangentValue::tau((vt - kI * vf) * kInvSqrt2, (vt + kI * vf) * kInvSqrt2);
}

TangentValue to_cartesian(const TangentValue& v, const SpherePoint& p) {
  if (v.basis == Basis::cartesian) return v;
  const TangentValue pol = to_polar(v, p);
  const Frame f = frame(p);
  const Complex vt = pol.components[0];
  const Complex vf = pol.components[1];
  return TangentValue::cartesian(vt * (f.cos_t * f.cos_p) - vf * f.sin_p,
                                 vt * (f.cos_t * f.sin_p) + vf * f.cos_p, -vt * f.sin_t);
}

Complex dot(const TangentValue& a, const TangentValue& b, const SpherePoint& p) {
  TangentValue bb = b;
  if (b.basis != a.basis) {
    switch (a.basis) {
      case Basis::tau: bb = to_tau(b, p); break;
      case Basis::polar: bb = to_polar(b, p); break;
      case Basis::cartesian: bb = to_cartesian(b, p); break;
    }
  }
  Complex sum{};
  for (std::size_t i = 0; i < 3; ++i) sum += std::conj(a.components[i]) * bb.components[i];
  return sum;
}

Complex eval_Y(int l, int m, const SpherePoint& p) {
  check_point(p);
  const Frame f = frame(p);
  return legendre::eval_U(l, m, f.cos_t) * azimuthal(m, p.phi);
}

TangentValue eval_Q(int l, int m, Sign sign, const SpherePoint& p) {
  flm::detail::check_index(l, m);
  check_point(p);
  const bool plus = sign == Sign::plus;
  if (at_pole(p)) {
    const double c = std::sqrt((2.0 * l + 1.0) / 2.0) / (2.0 * std::sqrt(kPi));
    if (p.theta == 0.0) {
      if ((plus && m == 1) || (!plus && m == -1)) {
        return TangentValue::cartesian(c, plus ? kI * c : -kI * c, 0.0);
      }
    } else if ((plus && m == -1) || (!plus && m == 1)) {
      const double cs = (l % 2 == 0) ? c : -c;
      return TangentValue::cartesian(cs, plus ? -kI * cs : kI * cs, 0.0);
    }
    return TangentValue::cartesian(0.0, 0.0, 0.0);
  }
  const double x = std::cos(p.theta);
  const Complex value = flm::eval_F(l, plus ? m : -m, x) * azimuthal(m, p.phi);
  return plus ? TangentValue::tau(value, 0.0) : TangentValue::tau(0.0, value);
}

std::pair<TangentValue, TangentValue> eval_YZ(int l, int m, const SpherePoint& p) {
  if (l < 1 || std::abs(m) > l) throw DomainError("eval_YZ: requires l >= 1, |m| <= l");
  check_point(p);
  if (at_pole(p)) throw DomainError("eval_YZ: poles are not supported; use eval_Q");
  const auto [dtheta, ratio] = legendre::eval_dU_and_ratio(l, m, std::cos(p.theta));
  const Complex e = azimuthal(m, p.phi) / std::sqrt(double(l) * double(l + 1));
  const TangentValue y = TangentValue::polar(-ratio * e, -kI * dtheta * e);
  const TangentValue z = TangentValue::polar(kI * dtheta * e, -ratio * e);
  return {y, z};
}

CoefficientTable::CoefficientTable(int L) : L_(L) {
  if (L < 1) throw DomainError("CoefficientTable: bandlimit must be >= 1");
  values_.assign(static_cast<std::size_t>(2 * L * (L + 2)), Complex{});
}

std::size_t CoefficientTable::index(int l, int m, Sign sign) const {
  if (l < 1 || l > L_ || std::abs(m) > l) throw IndexError("CoefficientTable: bad (l, m)");
  const std::size_t base = static_cast<std::size_t>(l * l - 1 + m + l);
  return sign == Sign::plus ? base : base + static_cast<std::size_t>(L_ * (L_ + 2));
}

Complex& CoefficientTable::at(int l, int m, Sign sign) { return values_[index(l, m, sign)]; }

const Complex& CoefficientTable::at(int l, int m, Sign sign) const {
  return values_[index(l, m, sign)];
}

CoefficientTable expand_tangent_field(const FieldSampler& field, int L) {
  CoefficientTable table(L);
  const auto rule = quadrature::gauss_legendre(L + 1);
  const int nphi = 2 * L + 2;
  const double dphi = 2.0 * kPi / nphi;
  const double norm = 1.0 / std::sqrt(2.0 * kPi);

  std::vector<Complex> plus(static_cast<std::size_t>(nphi));
  std::vector<Complex> minus(static_cast<std::size_t>(nphi));
  for (int j = 0; j < rule.size(); ++j) {
    const double x = rule.nodes[static_cast<std::size_t>(j)];
    const double w = rule.weights[static_cast<std::size_t>(j)];
    const double theta = std::acos(x);
    for (int k = 0; k < nphi; ++k) {
      const SpherePoint p{theta, k * dphi};
      const TangentValue v = to_tau(field(p), p);
      plus[static_cast<std::size_t>(k)] = v.components[0];
      minus[static_cast<std::size_t>(k)] = v.components[1];
    }
    for (int m = -L; m <= L; ++m) {
      Complex sp{};
      Complex sm{};
      for (int k = 0; k < nphi; ++k) {
        const Complex e = std::polar(dphi, -m * k * dphi);
        sp += e * plus[static_cast<std::size_t>(k)];
        sm += e * minus[static_cast<std::size_t>(k)];
      }
      const auto fp = flm::eval_F_column(m, L, x);
      const auto fm = flm::eval_F_column(-m, L, x);
      const int lmin = flm::min_degree(m);
      for (int l = lmin; l <= L; ++l) {
        const std::size_t i = static_cast<std::size_t>(l - lmin);
        table.at(l, m, Sign::plus) += w * norm * fp[i] * sp;
        table.at(l, m, Sign::minus) += w * norm * fm[i] * sm;
      }
    }
  }
  return table;
}

TangentValue synthesize(const CoefficientTable& table, const SpherePoint& p) {
  check_point(p);
  const int L = table.bandlimit();
  if (at_pole(p)) {
    TangentValue sum = TangentValue::cartesian(0.0, 0.0, 0.0);
    for (int l = 1; l <= L; ++l) {
      for (int m = -1; m <= 1; m += 2) {
        for (Sign s : {Sign::plus, Sign::minus}) {
          const TangentValue q = eval_Q(l, m, s, p);
          for (std::size_t i = 0; i < 3; ++i) sum.components[i] += table.at(l, m, s) * q.components[i];
        }
      }
    }
    return sum;
  }
  const double x = std::cos(p.theta);
  Complex plus{};
  Complex minus{};
  for (int m = -L; m <= L; ++m) {
    const auto fp = flm::eval_F_column(m, L, x);
    const auto fm = flm::eval_F_column(-m, L, x);
    const int lmin = flm::min_degree(m);
    const Complex e = azimuthal(m, p.phi);
    for (int l = lmin; l <= L; ++l) {
      const std::size_t i = static_cast<std::size_t>(l - lmin);
      plus += table.at(l, m, Sign::plus) * fp[i] * e;
      minus += table.at(l, m, Sign::minus) * fm[i] * e;
    }
  }
  return TangentValue::tau(plus, minus);
}

}  // namespace capslep::harmonics
