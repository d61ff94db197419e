#include "hapol/geom_halfplane.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hapol/error.hpp"

namespace hapol {

namespace {

constexpr double kVerticalTol = 1e-12;
constexpr double kOnCurveTol = 1e-9;

double cross(Vec2 u, Vec2 v) { return u.x * v.y - u.y * v.x; }
double dot(Vec2 u, Vec2 v) { return u.x * v.x + u.y * v.y; }

Vec2 normalized(Vec2 v) {
  const double n = std::hypot(v.x, v.y);
  return {v.x / n, v.y / n};
}

// Tangent at p oriented toward q along the geodesic through both.
Vec2 oriented_tangent(const HPoint& p, const HPoint& q) {
  const Geodesic g = geodesic_through(p, q);
  Vec2 t = tangent_direction(g, p);
  const Vec2 chord{q.x() - p.x(), q.y() - p.y()};
  if (dot(t, chord) < 0.0) t = {-t.x, -t.y};
  return t;
}

}  // namespace

HPoint::HPoint(double x, double y) : x_(x), y_(y) {
  if (!std::isfinite(x) || !std::isfinite(y))
    throw Error(ErrorKind::InvalidArgument, "HPoint coordinates must be finite");
  if (!(y > 0.0))
    throw Error(ErrorKind::InvalidArgument,
                "HPoint requires y > 0, got y = " + std::to_string(y));
}

AxisPoint::AxisPoint(double h) : h_(h) {
  if (!std::isfinite(h) || !(h > 0.0))
    throw Error(ErrorKind::InvalidArgument, "axis point height must be finite and > 0");
}

Geodesic geodesic_through(const HPoint& p, const HPoint& q) {
  if (p == q) throw Error(ErrorKind::Degenerate, "geodesic_through: coincident points");
  const double dx = q.x() - p.x();
  const double scale = std::max({1.0, std::abs(p.x()), std::abs(q.x())});
  if (std::abs(dx) < kVerticalTol * scale) return VerticalRay{p.x()};
  const double center =
      (q.x() * q.x() + q.y() * q.y() - p.x() * p.x() - p.y() * p.y()) / (2.0 * dx);
  return Arc{center, std::hypot(p.x() - center, p.y())};
}

double on_geodesic_residual(const Geodesic& g, const HPoint& p) {
  if (const auto* ray = std::get_if<VerticalRay>(&g))
    return std::abs(p.x() - ray->x0) / std::max(1.0, std::abs(ray->x0));
  const auto& arc = std::get<Arc>(g);
  const double r = std::hypot(p.x() - arc.center, p.y());
  return std::abs(r - arc.radius) / std::max(1.0, arc.radius);
}

Vec2 tangent_direction(const Geodesic& g, const HPoint& p) {
  if (on_geodesic_residual(g, p) > kOnCurveTol)
    throw Error(ErrorKind::OffCurve, "tangent_direction: point is not on the geodesic");
  if (std::holds_alternative<VerticalRay>(g)) return {0.0, 1.0};
  const auto& arc = std::get<Arc>(g);
  return normalized({-p.y(), p.x() - arc.center});
}

double hyp_angle(const HPoint& p, const HPoint& q1, const HPoint& q2) {
  if (p == q1 || p == q2)
    throw Error(ErrorKind::Degenerate, "hyp_angle: vertex coincides with an endpoint");
  if (q1 == q2) throw Error(ErrorKind::Degenerate, "hyp_angle: endpoints coincide");
  const Vec2 t1 = oriented_tangent(p, q1);
  const Vec2 t2 = oriented_tangent(p, q2);
  return std::atan2(std::abs(cross(t1, t2)), dot(t1, t2));
}

AngleResidual equal_angle_residual(const HPoint& p, AxisPoint a, AxisPoint b,
                                   AxisPoint c) {
  if (!(a.h() > b.h() && b.h() > c.h()))
    throw Error(ErrorKind::InvalidArgument,
                "equal_angle_residual: heights must satisfy a > b > c");
  if (p.x() == 0.0)
    throw Error(ErrorKind::OnAxis, "equal_angle_residual: point lies on the y-axis");
  const HPoint pa = a.point(), pb = b.point(), pc = c.point();
  return {hyp_angle(p, pa, pb) - hyp_angle(p, pb, pc)};
}

double hyp_distance(const HPoint& p, const HPoint& q) {
  // arccosh(1 + d^2 / (2 y1 y2)) written as 2 asinh(d / (2 sqrt(y1 y2)))
  const double d = std::hypot(q.x() - p.x(), q.y() - p.y());
  return 2.0 * std::asinh(d / (2.0 * std::sqrt(p.y() * q.y())));
}

}  // namespace hapol
