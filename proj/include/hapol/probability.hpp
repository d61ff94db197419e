#pragma once

// Probability that two random interior points B, C of a segment AD admit an
// equal-angle witness, in the Euclidean plane (uniform measure) and in the
// hyperbolic half-plane (log-uniform measure dy/y on the y-axis).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hapol/error.hpp"
#include "hapol/fourpoint.hpp"

namespace hapol {

struct ProbEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sqrt(mean (1 - mean) / n)
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
};

/// Endpoint ratio a/d of the hyperbolic segment; the log-length is ln(ratio).
class HyperProbSetup {
 public:
  explicit HyperProbSetup(double ratio);

  double ratio() const noexcept { return ratio_; }
  double log_length() const noexcept { return std::log(ratio_); }

 private:
  double ratio_;
};

/// Euclidean segment [d_end, a_end] the two interior points are drawn from.
struct Segment {
  double a_end = 1.0;
  double d_end = 0.0;
};

/// (15 - 16 ln 2) / 9.
double pe_closed_form();

/// (2 sqrt 5 ln(2 + sqrt 5) - 5) / (5 ln 2).
double ph_closed_form_paper();

/// Draws two points uniformly in the segment; redraws on ties or endpoint
/// hits. `next` yields uniforms in [0, 1). b is the point nearer a_end. A
/// segment with a_end < d_end is mirrored through 0 so heights decrease.
template <class Source>
FourConfig sample_config_euclid(Source&& next, Segment seg = {}) {
  if (!std::isfinite(seg.a_end) || !std::isfinite(seg.d_end) || seg.a_end == seg.d_end)
    throw Error(ErrorKind::InvalidArgument, "segment endpoints must be finite and distinct");
  const double sign = seg.a_end > seg.d_end ? 1.0 : -1.0;
  const double top = sign * seg.a_end, bottom = sign * seg.d_end;
  const double len = seg.a_end - seg.d_end;
  for (;;) {
    const double u = next(), v = next();
    const double b = sign * (seg.d_end + len * std::max(u, v));
    const double c = sign * (seg.d_end + len * std::min(u, v));
    if (top > b && b > c && c > bottom) return FourConfig(Geometry::Euclidean, top, b, c, bottom);
  }
}

/// Height base * exp(u * ln ratio): u in [0, 1] mapped log-uniformly.
inline double log_uniform_height(double u, const HyperProbSetup& setup, double base = 1.0) {
  return base * std::exp(u * setup.log_length());
}

/// Log-uniform draw of two heights between base and base * ratio.
template <class Source>
FourConfig sample_config_hyper(Source&& next, const HyperProbSetup& setup, double base = 1.0) {
  const double top = base * setup.ratio();
  for (;;) {
    const double u = next(), v = next();
    const double b = log_uniform_height(std::max(u, v), setup, base);
    const double c = log_uniform_height(std::min(u, v), setup, base);
    if (top > b && b > c && c > base) return FourConfig(Geometry::Hyperbolic, top, b, c, base);
  }
}

/// Per-sample success flags; sample i is a pure function of (seed, i).
std::vector<bool> indicator_stream_euclid(std::uint64_t n, std::uint64_t seed, Segment seg = {},
                                          unsigned threads = 1);
std::vector<bool> indicator_stream_hyper(std::uint64_t n, std::uint64_t seed,
                                         const HyperProbSetup& setup, double base = 1.0,
                                         unsigned threads = 1);

ProbEstimate estimate_pe(std::uint64_t n, std::uint64_t seed, unsigned threads = 1);
ProbEstimate estimate_ph(std::uint64_t n, std::uint64_t seed, const HyperProbSetup& setup,
                         unsigned threads = 1);

/// 2 * integral over [0,1] of max(0, 4c/(1+3c) - c).
double pe_quadrature(double tol);

/// Exact probability for the given ratio, integrated to absolute tolerance tol.
double ph_quadrature(const HyperProbSetup& setup, double tol);

/// Ratio whose probability equals target, or nullopt when the bracket does
/// not straddle it. `tol` bounds the bracket width relative to the ratio.
std::optional<double> calibrate_ratio(double target, std::pair<double, double> bracket,
                                      double tol);

}  // namespace hapol
