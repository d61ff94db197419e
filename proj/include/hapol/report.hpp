#pragma once

// Text serializations shared by the C API and the command-line tool.
// Reals are written with 17 significant digits.

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "hapol/diophantine.hpp"
#include "hapol/fourpoint.hpp"
#include "hapol/locus.hpp"
#include "hapol/probability.hpp"

namespace hapol {

std::string format_real(double v);

/// CSV with header `theta,r,x,y`.
std::string samples_csv(std::span<const CurveSample> samples);

std::string classification_json(const TripleConfig& cfg, LocusClass cls);

std::string euclidean_locus_json(const TripleConfig& cfg, const EuclideanLocus& locus);

struct FourPointReport {
  FourConfig config;
  double cross_ratio;
  bool exists;
  std::optional<Witness> witness;
};

std::string fourpoint_json(const FourPointReport& report);

struct ProbReport {
  std::string_view kind;  // "pe" or "ph"
  ProbEstimate estimate;
  std::optional<double> ratio;
  double closed_form = 0.0;
  std::optional<double> quadrature;
};

std::string prob_json(const ProbReport& report);

struct CalibrationReport {
  double target = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double tol = 0.0;
  std::optional<double> ratio;
  std::optional<double> probability_at_ratio;
};

std::string calibration_json(const CalibrationReport& report);

/// CSV with header `m,n,a,b,c,kind,verified`.
std::string family_csv(std::span<const FamilyRow> rows);

struct Viewport {
  int width = 800;
  int height = 600;
};

/// SVG plot of the samples: one polyline per root branch, broken where the
/// spacing jumps above ten times the median, plus the boundary axis y = 0.
std::string render_svg(std::span<const CurveSample> samples, Viewport viewport = {});

}  // namespace hapol
