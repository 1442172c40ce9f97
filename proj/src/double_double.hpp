#pragma once

#include <cmath>

namespace hypsum::detail {

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2, built on error-free
/// transformations (TwoSum, FMA-based TwoProd). About 106 bits.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  DoubleDouble() = default;
  DoubleDouble(double x) : hi(x) {}  // NOLINT(google-explicit-constructor)
  DoubleDouble(double h, double l) : hi(h), lo(l) {}

  double value() const { return hi + lo; }

  static DoubleDouble renormalize(double s, double e) {
    const double h = s + e;
    return {h, e - (h - s)};
  }

  friend DoubleDouble operator+(DoubleDouble x, DoubleDouble y) {
    const double s = x.hi + y.hi;
    const double bb = s - x.hi;
    double e = (x.hi - (s - bb)) + (y.hi - bb);
    e += x.lo + y.lo;
    return renormalize(s, e);
  }

  friend DoubleDouble operator-(DoubleDouble x) { return {-x.hi, -x.lo}; }
  friend DoubleDouble operator-(DoubleDouble x, DoubleDouble y) { return x + (-y); }

  friend DoubleDouble operator*(DoubleDouble x, DoubleDouble y) {
    const double p = x.hi * y.hi;
    double e = std::fma(x.hi, y.hi, -p);
    e += x.hi * y.lo + x.lo * y.hi;
    return renormalize(p, e);
  }

  friend DoubleDouble operator/(DoubleDouble x, DoubleDouble y) {
    const double q1 = x.hi / y.hi;
    const DoubleDouble r = x - y * DoubleDouble(q1);
    const double q2 = r.hi / y.hi;
    const DoubleDouble r2 = r - y * DoubleDouble(q2);
    const double q3 = r2.hi / y.hi;
    return DoubleDouble::renormalize(q1, q2) + DoubleDouble(q3);
  }

  DoubleDouble& operator+=(DoubleDouble y) { return *this = *this + y; }
  DoubleDouble& operator*=(DoubleDouble y) { return *this = *this * y; }
};

}  // namespace hypsum::detail
