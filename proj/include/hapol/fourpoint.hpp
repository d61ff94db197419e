#pragma once

// Four collinear points A, B, C, D on the y-axis and the question whether
// some point P off the axis sees AB, BC and CD under equal angles.

#include <optional>

#include "hapol/geom_halfplane.hpp"

namespace hapol {

enum class Geometry { Euclidean, Hyperbolic };

/// Heights a > b > c > d. Hyperbolic configs additionally require d > 0.
class FourConfig {
 public:
  FourConfig(Geometry geometry, double a, double b, double c, double d);

  Geometry geometry() const noexcept { return geometry_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }

 private:
  Geometry geometry_;
  double a_, b_, c_, d_;
};

struct Witness {
  Vec2 point;
  double residual_ab_bc = 0.0;  // angle(APB) - angle(BPC)
  double residual_bc_cd = 0.0;  // angle(BPC) - angle(CPD)
};

/// Grid resolution of the first witness-search pass.
inline constexpr int kWitnessGrid = 4096;

double cross_ratio_euclid(const FourConfig& cfg);
bool exists_euclid(const FourConfig& cfg);

double cross_ratio_hyper(const FourConfig& cfg);
bool exists_hyper(const FourConfig& cfg);

/// Equal-angle point with x > 0, or nullopt when the cross-ratio test
/// fails. Throws SearchFailed if the test passes but no point is found.
std::optional<Witness> find_witness_hyper(const FourConfig& cfg);

std::optional<Witness> find_witness_euclid(const FourConfig& cfg);

}  // namespace hapol
