#pragma once

// Test-only reference computations. Each takes a different route from the
// library code it is used to check.

#include <cmath>
#include <complex>
#include <numbers>

namespace hapol::oracle {

// Hyperbolic angle at p between geodesics toward q1 and q2, computed by the
// Cayley map w = (z - p) / (z - conj p) that sends p to the centre of the
// Poincare disk, where geodesics through the centre are diameters.
inline double disk_angle(std::complex<double> p, std::complex<double> q1, std::complex<double> q2) {
  const auto w1 = (q1 - p) / (q1 - std::conj(p));
  const auto w2 = (q2 - p) / (q2 - std::conj(p));
  double d = std::abs(std::arg(w1) - std::arg(w2));
  if (d > std::numbers::pi) d = 2.0 * std::numbers::pi - d;
  return d;
}

// The locus condition before the common factor (a^2 - c^2) is cancelled:
// (r^4 + 2a^2 r^2 cos 2t + a^4)(b^2-c^2)^2 - (r^4 + 2c^2 r^2 cos 2t + c^4)(a^2-b^2)^2.
inline double unsimplified_quartic(double a, double b, double c, double r, double t) {
  const double a2 = a * a, b2 = b * b, c2 = c * c, r2 = r * r, k = std::cos(2.0 * t);
  const double lhs = (r2 * r2 + 2.0 * a2 * r2 * k + a2 * a2) * (b2 - c2) * (b2 - c2);
  const double rhs = (r2 * r2 + 2.0 * c2 * r2 * k + c2 * c2) * (a2 - b2) * (a2 - b2);
  return lhs - rhs;
}

// Euclidean cross-ratio (BC/BA) / (DC/DA) from distances.
inline double cross_ratio_by_distances(double a, double b, double c, double d) {
  const double bc = std::abs(b - c), ba = std::abs(b - a), dc = std::abs(d - c), da = std::abs(d - a);
  return (bc / ba) / (dc / da);
}

// Independently computed reference values (mpmath, 30 digits) of the
// hyperbolic success probability as a function of the endpoint ratio.
struct RatioValue {
  double ratio;
  double probability;
};
inline constexpr RatioValue kHyperProbability[] = {
    {1.5, 0.43040793008798415},  {2.0, 0.4229943807202507},   {10.0, 0.34144242289298772},
    {32.0, 0.27950927560599631}, {1000.0, 0.17011275854032254}, {1e6, 0.092699725472593854},
};
// Ratio at which that probability equals (2 sqrt5 ln(2+sqrt5) - 5) / (5 ln 2).
inline constexpr double kCalibratedRatio = 2.1776504042297172;
// (15 - 16 ln 2) / 9 to 20 digits.
inline constexpr double kPeValue = 0.43440501233787500548;
// (2 sqrt5 ln(2+sqrt5) - 5) / (5 ln 2) to 20 digits.
inline constexpr double kPhClosedForm = 0.42015149316015432513;

}  // namespace hapol::oracle
