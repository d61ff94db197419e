#include "hapol/locus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hapol/error.hpp"

namespace hapol {

namespace {

constexpr double kTinyRoot = 1e-300;
constexpr double kSnapTol = 1e-12;

bool strictly_decreasing(double a, double b, double c) { return a > b && b > c; }

}  // namespace

TripleConfig::TripleConfig(double a, double b, double c) : a_(a), b_(b), c_(c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
    throw Error(ErrorKind::InvalidArgument, "triple heights must be finite");
  if (!strictly_decreasing(a, b, c) || !(c > 0.0))
    throw Error(ErrorKind::InvalidArgument, "triple heights must satisfy a > b > c > 0");
}

std::string_view to_string(LocusClass cls) {
  switch (cls) {
    case LocusClass::AboveQuadratic: return "AboveQuadratic";
    case LocusClass::QuadraticHyperbola: return "QuadraticHyperbola";
    case LocusClass::BetweenGeometricAndQuadratic: return "BetweenGeometricAndQuadratic";
    case LocusClass::GeometricCircle: return "GeometricCircle";
    case LocusClass::BetweenHarmonicAndGeometric: return "BetweenHarmonicAndGeometric";
    case LocusClass::HarmonicLemniscate: return "HarmonicLemniscate";
    case LocusClass::BelowHarmonic: return "BelowHarmonic";
  }
  return "Unknown";
}

QuarticCoeffs coefficients(const TripleConfig& cfg) {
  const double a2 = cfg.a() * cfg.a();
  const double b2 = cfg.b() * cfg.b();
  const double c2 = cfg.c() * cfg.c();
  return {2.0 * b2 - a2 - c2, a2 * c2 - b2 * b2, b2 * (2.0 * a2 * c2 - a2 * b2 - c2 * b2)};
}

double eval_quartic(const TripleConfig& cfg, double r, double theta) {
  const auto [alpha, beta, gamma] = coefficients(cfg);
  const double r2 = r * r;
  return r2 * r2 * alpha - 2.0 * r2 * beta * std::cos(2.0 * theta) - gamma;
}

LocusClass classify(const TripleConfig& cfg, double eps) {
  if (!(eps >= 0.0)) throw Error(ErrorKind::InvalidArgument, "classify: eps must be >= 0");
  const double a2 = cfg.a() * cfg.a();
  const double b2 = cfg.b() * cfg.b();
  const double c2 = cfg.c() * cfg.c();
  const double q2 = (a2 + c2) / 2.0;
  const double g2 = cfg.a() * cfg.c();
  const double h2 = 2.0 * a2 * c2 / (a2 + c2);
  auto near = [&](double m2) { return std::abs(b2 - m2) <= eps * m2; };

  if (near(q2)) return LocusClass::QuadraticHyperbola;
  if (b2 > q2) return LocusClass::AboveQuadratic;
  if (near(g2)) return LocusClass::GeometricCircle;
  if (b2 > g2) return LocusClass::BetweenGeometricAndQuadratic;
  if (near(h2)) return LocusClass::HarmonicLemniscate;
  if (b2 > h2) return LocusClass::BetweenHarmonicAndGeometric;
  return LocusClass::BelowHarmonic;
}

LocusClass classify_exact(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
  if (!(a > b && b > c && c > 0))
    throw Error(ErrorKind::InvalidArgument, "classify_exact: heights must satisfy a > b > c > 0");
  const mpz_class a2 = a * a, b2 = b * b, c2 = c * c;
  // b^2 against (a^2+c^2)/2, ac and 2a^2c^2/(a^2+c^2), all cleared of denominators
  const int vs_q = sgn(mpz_class(2 * b2 - a2 - c2));
  if (vs_q == 0) return LocusClass::QuadraticHyperbola;
  if (vs_q > 0) return LocusClass::AboveQuadratic;
  const int vs_g = sgn(mpz_class(b2 - a * c));
  if (vs_g == 0) return LocusClass::GeometricCircle;
  if (vs_g > 0) return LocusClass::BetweenGeometricAndQuadratic;
  const int vs_h = sgn(mpz_class(b2 * (a2 + c2) - 2 * a2 * c2));
  if (vs_h == 0) return LocusClass::HarmonicLemniscate;
  if (vs_h > 0) return LocusClass::BetweenHarmonicAndGeometric;
  return LocusClass::BelowHarmonic;
}

std::vector<double> solve_r2(const TripleConfig& cfg, double theta) {
  auto [alpha, beta, gamma] = coefficients(cfg);
  const double a2 = cfg.a() * cfg.a();
  const double b2 = cfg.b() * cfg.b();
  const double c2 = cfg.c() * cfg.c();
  // Near the hyperbola and lemniscate boundaries the rounded coefficient is
  // noise; treat it as the exact zero of the boundary case.
  if (std::abs(alpha) <= kSnapTol * (a2 + c2)) alpha = 0.0;
  if (std::abs(gamma) <= kSnapTol * 2.0 * a2 * c2 * b2) gamma = 0.0;

  const double lin = -2.0 * beta * std::cos(2.0 * theta);
  const double cst = -gamma;
  std::vector<double> roots;
  auto keep = [&](double s) {
    if (std::isfinite(s) && s > kTinyRoot) roots.push_back(s);
  };

  if (alpha == 0.0) {
    if (lin != 0.0) keep(-cst / lin);
  } else {
    const double disc = lin * lin - 4.0 * alpha * cst;
    if (disc < 0.0) return roots;
    const double q = -0.5 * (lin + std::copysign(std::sqrt(disc), lin));
    if (q != 0.0) {
      keep(q / alpha);
      keep(cst / q);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<CurveSample> sample_curve(const TripleConfig& cfg, int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "sample_curve: n must be >= 2");
  const double pi = std::numbers::pi;
  const double margin = pi / (4.0 * n);
  const double step = (pi - 2.0 * margin) / (n - 1);
  std::vector<CurveSample> out;
  out.reserve(2 * static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double theta = margin + k * step;
    for (double s : solve_r2(cfg, theta)) {
      const double r = std::sqrt(s);
      out.push_back({theta, r, HPoint(r * std::cos(theta), r * std::sin(theta))});
    }
  }
  std::sort(out.begin(), out.end(), [](const CurveSample& l, const CurveSample& r) {
    return l.theta < r.theta || (l.theta == r.theta && l.r < r.r);
  });
  return out;
}

EuclideanLocus euclidean_locus(double a, double b, double c) {
  if (!strictly_decreasing(a, b, c))
    throw Error(ErrorKind::InvalidArgument, "euclidean_locus: heights must satisfy a > b > c");
  const double denom = a + c - 2.0 * b;
  const double scale = std::max({1.0, std::abs(a), std::abs(b), std::abs(c)});
  if (std::abs(denom) <= 1e-12 * scale) return HorizontalLine{(a + c) / 2.0};
  const double y_d = (2.0 * a * c - b * c - a * b) / denom;
  return Circle{(b + y_d) / 2.0, std::abs(b - y_d) / 2.0};
}

double euclidean_angle(Vec2 p, Vec2 q1, Vec2 q2) {
  const Vec2 u{q1.x - p.x, q1.y - p.y};
  const Vec2 v{q2.x - p.x, q2.y - p.y};
  return std::atan2(std::abs(u.x * v.y - u.y * v.x), u.x * v.x + u.y * v.y);
}

double euclidean_equal_angle_residual(Vec2 p, double a, double b, double c) {
  if (!strictly_decreasing(a, b, c))
    throw Error(ErrorKind::InvalidArgument,
                "euclidean_equal_angle_residual: heights must satisfy a > b > c");
  if (p.x == 0.0)
    throw Error(ErrorKind::OnAxis, "euclidean_equal_angle_residual: point lies on the y-axis");
  const Vec2 pa{0.0, a}, pb{0.0, b}, pc{0.0, c};
  return euclidean_angle(p, pa, pb) - euclidean_angle(p, pb, pc);
}

}  // namespace hapol
