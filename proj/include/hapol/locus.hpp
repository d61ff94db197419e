#pragma once

// The hyperbolic Apollonius locus in polar form
//
//   r^4 alpha = 2 r^2 beta cos(2 theta) + gamma,
//   alpha = 2b^2 - a^2 - c^2,  beta = a^2 c^2 - b^4,
//   gamma = b^2 (2 a^2 c^2 - a^2 b^2 - c^2 b^2),
//
// together with its Euclidean counterpart (the classical Apollonius circle).

#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "hapol/geom_halfplane.hpp"

namespace hapol {

/// Heights a > b > c > 0 of three points on the y-axis.
class TripleConfig {
 public:
  TripleConfig(double a, double b, double c);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }

  TripleConfig scaled(double lambda) const {
    return {lambda * a_, lambda * b_, lambda * c_};
  }

 private:
  double a_, b_, c_;
};

struct QuarticCoeffs {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

enum class LocusClass {
  AboveQuadratic,
  QuadraticHyperbola,
  BetweenGeometricAndQuadratic,
  GeometricCircle,
  BetweenHarmonicAndGeometric,
  HarmonicLemniscate,
  BelowHarmonic,
};

std::string_view to_string(LocusClass cls);

struct CurveSample {
  double theta;
  double r;
  HPoint point;
};

struct HorizontalLine {
  double height = 0.0;
};

struct Circle {
  double center_y = 0.0;
  double radius = 0.0;
};

using EuclideanLocus = std::variant<HorizontalLine, Circle>;

inline constexpr double kDefaultClassifyEps = 1e-12;

QuarticCoeffs coefficients(const TripleConfig& cfg);

/// r^4 alpha - 2 r^2 beta cos(2 theta) - gamma.
double eval_quartic(const TripleConfig& cfg, double r, double theta);

LocusClass classify(const TripleConfig& cfg, double eps = kDefaultClassifyEps);

/// Exact classification for integer heights a > b > c > 0.
LocusClass classify_exact(const mpz_class& a, const mpz_class& b, const mpz_class& c);

/// Positive roots s = r^2 of alpha s^2 - 2 beta cos(2 theta) s - gamma = 0,
/// ascending.
std::vector<double> solve_r2(const TripleConfig& cfg, double theta);

/// Polar sweep over n angles in (0, pi), sorted by (theta, r).
std::vector<CurveSample> sample_curve(const TripleConfig& cfg, int n);

/// Locus of equal Euclidean angles for heights a > b > c (any sign).
EuclideanLocus euclidean_locus(double a, double b, double c);
inline EuclideanLocus euclidean_locus(const TripleConfig& cfg) {
  return euclidean_locus(cfg.a(), cfg.b(), cfg.c());
}

/// Euclidean angle(APB) - angle(BPC) at p. Throws OnAxis when p.x == 0.
double euclidean_equal_angle_residual(Vec2 p, double a, double b, double c);
inline double euclidean_equal_angle_residual(Vec2 p, const TripleConfig& cfg) {
  return euclidean_equal_angle_residual(p, cfg.a(), cfg.b(), cfg.c());
}

/// Unsigned Euclidean angle at p between the rays toward q1 and q2.
double euclidean_angle(Vec2 p, Vec2 q1, Vec2 q2);

}  // namespace hapol
