#pragma once

// Primitives of the upper half-plane model of the hyperbolic plane.

#include <variant>

namespace hapol {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// A point of the upper half-plane. Construction validates y > 0 and
/// finiteness.
class HPoint {
 public:
  HPoint(double x, double y);

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  Vec2 vec() const noexcept { return {x_, y_}; }

  friend bool operator==(const HPoint&, const HPoint&) = default;

 private:
  double x_;
  double y_;
};

/// Point (0, h) on the y-axis, h > 0.
class AxisPoint {
 public:
  explicit AxisPoint(double h);

  double h() const noexcept { return h_; }
  HPoint point() const { return HPoint(0.0, h_); }

 private:
  double h_;
};

struct VerticalRay {
  double x0 = 0.0;
};

struct Arc {
  double center = 0.0;  // on the boundary axis
  double radius = 0.0;
};

using Geodesic = std::variant<VerticalRay, Arc>;

/// Signed difference of two unsigned hyperbolic angles, |value| < pi.
struct AngleResidual {
  double value = 0.0;
};

Geodesic geodesic_through(const HPoint& p, const HPoint& q);

/// Unit tangent of `g` at `p`. Throws OffCurve when p is not on g within
/// 1e-9 relative.
Vec2 tangent_direction(const Geodesic& g, const HPoint& p);

/// Hyperbolic angle at p between the geodesic rays toward q1 and q2, in
/// [0, pi].
double hyp_angle(const HPoint& p, const HPoint& q1, const HPoint& q2);

/// angle(APB) - angle(BPC). Requires a > b > c and p.x != 0.
AngleResidual equal_angle_residual(const HPoint& p, AxisPoint a, AxisPoint b,
                                   AxisPoint c);

double hyp_distance(const HPoint& p, const HPoint& q);

/// Relative on-curve residual of p with respect to g (0 when exactly on it).
double on_geodesic_residual(const Geodesic& g, const HPoint& p);

}  // namespace hapol
