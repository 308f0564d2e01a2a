#pragma once

// Scalar spherical harmonics, the classical tangential vector harmonics
// Y_lm / Z_lm, and the mixed vector harmonics
//
//   Q+-_lm(theta, phi) = F_{l,+-m}(cos theta) exp(i m phi) / sqrt(2 pi) tau+-,
//   tau+- = (theta_hat +- i phi_hat) / sqrt(2),
//
// which are locally orthogonal (tau+ and tau- never mix) and orthonormal on
// the sphere.

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "capslep/errors.hpp"

namespace capslep::harmonics {

using Complex = std::complex<double>;

/// Colatitude theta in [0, pi], azimuth phi (any real; taken mod 2 pi).
struct SpherePoint {
  double theta = 0.0;
  double phi = 0.0;
};

enum class Basis {
  tau,        ///< (tau+, tau-) components
  polar,      ///< (theta_hat, phi_hat) components
  cartesian,  ///< (x_hat, y_hat, z_hat) components
};

enum class Sign { plus, minus };

/// A tangential vector value together with the basis it is expressed in.
/// Tau and polar values use components[0..1]; components[2] is zero.
struct TangentValue {
  Basis basis = Basis::polar;
  std::array<Complex, 3> components{};

  static TangentValue tau(Complex plus, Complex minus) {
    return {Basis::tau, {plus, minus, Complex{}}};
  }
  static TangentValue polar(Complex theta, Complex phi) {
    return {Basis::polar, {theta, phi, Complex{}}};
  }
  static TangentValue cartesian(Complex x, Complex y, Complex z) {
    return {Basis::cartesian, {x, y, z}};
  }

  /// Squared norm sum |c_i|^2 (all three bases are orthonormal).
  [[nodiscard]] double norm2() const;
};

/// Basis conversions. Polar <-> cartesian needs the point; at the poles the
/// polar frame is the limit along the meridian phi.
TangentValue to_tau(const TangentValue& v, const SpherePoint& p);
TangentValue to_polar(const TangentValue& v, const SpherePoint& p);
TangentValue to_cartesian(const TangentValue& v, const SpherePoint& p);

/// Hermitian dot product a* . b (converted to a common basis first).
Complex dot(const TangentValue& a, const TangentValue& b, const SpherePoint& p);

/// Y_lm(theta, phi) = U_lm(cos theta) exp(i m phi) / sqrt(2 pi).
Complex eval_Y(int l, int m, const SpherePoint& p);

/// Q+-_lm at p. Interior points return a tau-basis value with one non-zero
/// component; the poles (theta == 0 or pi) return the cartesian closed forms.
TangentValue eval_Q(int l, int m, Sign sign, const SpherePoint& p);

/// The classical tangential harmonics (Y_lm, Z_lm) in the polar basis,
/// built from the singularity-free U_lm derivative combinations. Rejects poles.
std::pair<TangentValue, TangentValue> eval_YZ(int l, int m, const SpherePoint& p);

/// Expansion coefficients v+-_lm for 1 <= l <= L, |m| <= l.
class CoefficientTable {
 public:
  explicit CoefficientTable(int L);

  [[nodiscard]] int bandlimit() const { return L_; }
  /// Number of stored coefficients, 2 L (L + 2).
  [[nodiscard]] std::size_t size() const { return values_.size(); }

  Complex& at(int l, int m, Sign sign);
  [[nodiscard]] const Complex& at(int l, int m, Sign sign) const;

  [[nodiscard]] const std::vector<Complex>& values() const { return values_; }

 private:
  [[nodiscard]] std::size_t index(int l, int m, Sign sign) const;
  int L_;
  std::vector<Complex> values_;
};

using FieldSampler = std::function<TangentValue(const SpherePoint&)>;

/// Sphere inner products <Q+-_lm, v> by product quadrature: (L+1)-point
/// Gauss-Legendre in cos(theta) and a uniform (2L+2)-point rule in phi. Exact
/// for tangential fields bandlimited to L; higher degrees alias silently.
CoefficientTable expand_tangent_field(const FieldSampler& field, int L);

/// sum v+-_lm Q+-_lm(p), returned in the tau basis (cartesian at the poles).
TangentValue synthesize(const CoefficientTable& table, const SpherePoint& p);

}  // namespace capslep::harmonics
