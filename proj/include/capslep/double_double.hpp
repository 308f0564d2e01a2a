#pragma once

// Double-double arithmetic: an unevaluated sum hi + lo of two binary64 values
// with |lo| <= ulp(hi)/2, giving a ~106-bit significand. Algorithms follow the
// classic error-free transformations (Dekker, Knuth) as used in the QD library.

#include <cmath>
#include <compare>
#include <ostream>
#include <string>

namespace capslep {

class DoubleDouble {
 public:
  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double v) : hi_(v) {}  // NOLINT(google-explicit-constructor)
  constexpr DoubleDouble(int v) : hi_(static_cast<double>(v)) {}  // NOLINT
  constexpr DoubleDouble(double hi, double lo) : hi_(hi), lo_(lo) {}

  [[nodiscard]] constexpr double hi() const { return hi_; }
  [[nodiscard]] constexpr double lo() const { return lo_; }
  [[nodiscard]] explicit constexpr operator double() const { return hi_ + lo_; }
  [[nodiscard]] double to_double() const { return hi_ + lo_; }

  // Error-free transformations.
  static DoubleDouble two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
  }
  static DoubleDouble quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
  }
  static DoubleDouble two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
  }

  friend DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b) {
    DoubleDouble s = two_sum(a.hi_, b.hi_);
    DoubleDouble t = two_sum(a.lo_, b.lo_);
    s.lo_ += t.hi_;
    s = quick_two_sum(s.hi_, s.lo_);
    s.lo_ += t.lo_;
    return quick_two_sum(s.hi_, s.lo_);
  }
  friend DoubleDouble operator-(const DoubleDouble& a) { return {-a.hi_, -a.lo_}; }
  friend DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b) { return a + (-b); }

  friend DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) {
    DoubleDouble p = two_prod(a.hi_, b.hi_);
    p.lo_ += a.hi_ * b.lo_ + a.lo_ * b.hi_;
    return quick_two_sum(p.hi_, p.lo_);
  }

  friend DoubleDouble operator/(const DoubleDouble& a, const DoubleDouble& b) {
    // Long division: three correction steps.
    const double q1 = a.hi_ / b.hi_;
    DoubleDouble r = a - b * DoubleDouble(q1);
    const double q2 = r.hi_ / b.hi_;
    r = r - b * DoubleDouble(q2);
    const double q3 = r.hi_ / b.hi_;
    DoubleDouble q = quick_two_sum(q1, q2);
    return q + DoubleDouble(q3);
  }

  DoubleDouble& operator+=(const DoubleDouble& o) { return *this = *this + o; }
  DoubleDouble& operator-=(const DoubleDouble& o) { return *this = *this - o; }
  DoubleDouble& operator*=(const DoubleDouble& o) { return *this = *this * o; }
  DoubleDouble& operator/=(const DoubleDouble& o) { return *this = *this / o; }

  friend bool operator==(const DoubleDouble& a, const DoubleDouble& b) {
    return a.hi_ == b.hi_ && a.lo_ == b.lo_;
  }
  friend std::partial_ordering operator<=>(const DoubleDouble& a, const DoubleDouble& b) {
    if (auto c = a.hi_ <=> b.hi_; c != 0) return c;
    return a.lo_ <=> b.lo_;
  }

  friend DoubleDouble abs(const DoubleDouble& a) { return a.hi_ < 0.0 ? -a : a; }

  friend DoubleDouble sqrt(const DoubleDouble& a) {
    if (a.hi_ <= 0.0) return {std::sqrt(a.hi_), 0.0};
    // One Newton step on the double approximation doubles the precision.
    const double x = 1.0 / std::sqrt(a.hi_);
    const double ax = a.hi_ * x;
    const DoubleDouble diff = a - two_prod(ax, ax);
    return two_sum(ax, diff.hi_ * (x * 0.5));
  }

  friend std::ostream& operator<<(std::ostream& os, const DoubleDouble& a) {
    return os << a.hi_ << (a.lo_ < 0 ? " - " : " + ") << std::abs(a.lo_);
  }

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

/// Unit roundoff of double-double arithmetic, 2^-104.
inline constexpr double kDoubleDoubleEps = 4.930380657631324e-32;

namespace detail {
// Uniform conversion helpers so numerical templates compile for both double
// and DoubleDouble.
inline double to_double(double v) { return v; }
inline double to_double(const DoubleDouble& v) { return v.to_double(); }
}  // namespace detail

}  // namespace capslep
