#include "hapol/fourpoint.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "hapol/error.hpp"
#include "hapol/locus.hpp"

namespace hapol {

namespace {

constexpr double kCrossRatioBound = 3.0;
constexpr double kBisectResidual = 1e-10;
constexpr double kBisectWidth = 1e-13;
constexpr double kWitnessTol = 1e-8;
constexpr int kRefineLevels = 60;

void require_geometry(const FourConfig& cfg, Geometry expected, const char* op) {
  if (cfg.geometry() != expected)
    throw Error(ErrorKind::InvalidArgument,
                std::string(op) + ": configuration has the wrong geometry tag");
}

// (b-c)(a-d) / ((a-b)(c-d)) on arbitrary ordered reals.
double cross_ratio(double a, double b, double c, double d) {
  return ((b - c) * (a - d)) / ((a - b) * (c - d));
}

// One-parameter chart of the (a,b,c) locus restricted to x > 0.
struct Branch {
  double lo = 0.0;
  double hi = 0.0;
  std::function<std::optional<HPoint>(double)> at;
};

std::optional<HPoint> polar_point(double s, double theta) {
  const double r = std::sqrt(s);
  const double x = r * std::cos(theta), y = r * std::sin(theta);
  if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) return std::nullopt;
  return HPoint(x, y);
}

Branch make_branch(const TripleConfig& locus, double max_radius) {
  const double pi = std::numbers::pi;
  const LocusClass cls = classify(locus);
  if (cls == LocusClass::AboveQuadratic || cls == LocusClass::BelowHarmonic) {
    // Closed oval: each half is a graph over s = r^2 between the two axis
    // crossings, with cos(2 theta) = (alpha s^2 - gamma) / (2 beta s).
    const auto axis = solve_r2(locus, pi / 2.0);
    if (axis.size() != 2) return {};
    const QuarticCoeffs k = coefficients(locus);
    const double ls_lo = std::log(axis[0]), ls_hi = std::log(axis[1]);
    return {0.0, 1.0, [=](double t) -> std::optional<HPoint> {
              const double s = std::exp(ls_lo + t * (ls_hi - ls_lo));
              const double f = (k.alpha * s * s - k.gamma) / (2.0 * k.beta * s);
              const double theta = 0.5 * std::acos(std::clamp(f, -1.0, 1.0));
              if (std::sqrt(s) > max_radius) return std::nullopt;
              return polar_point(s, theta);
            }};
  }
  const bool through_quarter =
      cls == LocusClass::QuadraticHyperbola || cls == LocusClass::HarmonicLemniscate;
  return {through_quarter ? pi / 4.0 : 0.0, pi / 2.0,
          [=](double theta) -> std::optional<HPoint> {
            const auto roots = solve_r2(locus, theta);
            if (roots.size() != 1 || std::sqrt(roots[0]) > max_radius) return std::nullopt;
            return polar_point(roots[0], theta);
          }};
}

// Parameters: uniform interior grid plus geometric grading toward both ends.
std::vector<double> search_grid(double lo, double hi) {
  std::vector<double> grid;
  const double step = (hi - lo) / (kWitnessGrid + 1);
  for (int j = kRefineLevels; j >= 1; --j) grid.push_back(lo + step * std::ldexp(1.0, -j));
  for (int k = 1; k <= kWitnessGrid; ++k) grid.push_back(lo + k * step);
  for (int j = 1; j <= kRefineLevels; ++j) grid.push_back(hi - step * std::ldexp(1.0, -j));
  return grid;
}

Witness make_witness(const HPoint& p, const FourConfig& cfg) {
  const HPoint pa(0.0, cfg.a()), pb(0.0, cfg.b()), pc(0.0, cfg.c()), pd(0.0, cfg.d());
  const double bc = hyp_angle(p, pb, pc);
  return {p.vec(), hyp_angle(p, pa, pb) - bc, bc - hyp_angle(p, pc, pd)};
}

// Snap a point back onto the locus by re-solving r^2 at its polar angle.
std::optional<HPoint> polish(const TripleConfig& locus, const HPoint& p) {
  const double theta = std::atan2(p.y(), p.x());
  const double s0 = p.x() * p.x() + p.y() * p.y();
  const auto roots = solve_r2(locus, theta);
  if (roots.empty()) return std::nullopt;
  const double s = *std::min_element(roots.begin(), roots.end(), [&](double l, double r) {
    return std::abs(l - s0) < std::abs(r - s0);
  });
  return polar_point(s, theta);
}

}  // namespace

FourConfig::FourConfig(Geometry geometry, double a, double b, double c, double d)
    : geometry_(geometry), a_(a), b_(b), c_(c), d_(d) {
  for (double h : {a, b, c, d})
    if (!std::isfinite(h)) throw Error(ErrorKind::InvalidArgument, "four-point heights must be finite");
  if (!(a > b && b > c && c > d))
    throw Error(ErrorKind::InvalidArgument, "four-point heights must satisfy a > b > c > d");
  if (geometry == Geometry::Hyperbolic && !(d > 0.0))
    throw Error(ErrorKind::InvalidArgument, "hyperbolic four-point heights must be positive (d > 0)");
}

double cross_ratio_euclid(const FourConfig& cfg) {
  require_geometry(cfg, Geometry::Euclidean, "cross_ratio_euclid");
  return cross_ratio(cfg.a(), cfg.b(), cfg.c(), cfg.d());
}

bool exists_euclid(const FourConfig& cfg) { return cross_ratio_euclid(cfg) < kCrossRatioBound; }

double cross_ratio_hyper(const FourConfig& cfg) {
  require_geometry(cfg, Geometry::Hyperbolic, "cross_ratio_hyper");
  return cross_ratio(cfg.a() * cfg.a(), cfg.b() * cfg.b(), cfg.c() * cfg.c(), cfg.d() * cfg.d());
}

bool exists_hyper(const FourConfig& cfg) { return cross_ratio_hyper(cfg) < kCrossRatioBound; }

std::optional<Witness> find_witness_hyper(const FourConfig& cfg) {
  if (!exists_hyper(cfg)) return std::nullopt;

  const TripleConfig locus(cfg.a(), cfg.b(), cfg.c());
  const HPoint pb(0.0, cfg.b()), pc(0.0, cfg.c()), pd(0.0, cfg.d());
  const Branch branch = make_branch(locus, 1e6 * cfg.a());
  if (!branch.at)
    throw Error(ErrorKind::SearchFailed, "find_witness_hyper: locus has no x > 0 branch");

  auto g = [&](const HPoint& p) { return hyp_angle(p, pb, pc) - hyp_angle(p, pc, pd); };

  struct Node {
    double t;
    HPoint p;
    double g;
  };
  std::vector<Node> nodes;
  for (double t : search_grid(branch.lo, branch.hi)) {
    if (auto p = branch.at(t)) nodes.push_back({t, *p, g(*p)});
  }

  for (std::size_t i = 1; i < nodes.size(); ++i) {
    Node lo = nodes[i - 1], hi = nodes[i];
    if ((lo.g < 0.0) == (hi.g < 0.0)) continue;
    Node best = std::abs(lo.g) < std::abs(hi.g) ? lo : hi;
    bool broken = false;
    while (std::abs(best.g) > kBisectResidual && hi.t - lo.t > kBisectWidth) {
      const double mid = 0.5 * (lo.t + hi.t);
      const auto p = branch.at(mid);
      if (!p) {
        broken = true;
        break;
      }
      const Node m{mid, *p, g(*p)};
      if ((m.g < 0.0) == (lo.g < 0.0)) lo = m;
      else hi = m;
      if (std::abs(m.g) < std::abs(best.g)) best = m;
    }
    if (broken) continue;
    const auto polished = polish(locus, best.p);
    for (const auto& candidate : {polished, std::optional<HPoint>(best.p)}) {
      if (!candidate) continue;
      const Witness w = make_witness(*candidate, cfg);
      if (std::abs(w.residual_ab_bc) <= kWitnessTol && std::abs(w.residual_bc_cd) <= kWitnessTol)
        return w;
    }
  }
  throw Error(ErrorKind::SearchFailed,
              "find_witness_hyper: cross-ratio test passes but no equal-angle point was located");
}

std::optional<Witness> find_witness_euclid(const FourConfig& cfg) {
  if (!exists_euclid(cfg)) return std::nullopt;

  const EuclideanLocus first = euclidean_locus(cfg.a(), cfg.b(), cfg.c());
  const EuclideanLocus second = euclidean_locus(cfg.b(), cfg.c(), cfg.d());

  std::optional<Vec2> hit;
  auto meet_line = [](const Circle& circ, double h) -> std::optional<Vec2> {
    const double x2 = circ.radius * circ.radius - (h - circ.center_y) * (h - circ.center_y);
    if (x2 <= 1e-12 * circ.radius * circ.radius) return std::nullopt;  // tangent point is on the axis
    return Vec2{std::sqrt(x2), h};
  };
  const auto* c1 = std::get_if<Circle>(&first);
  const auto* c2 = std::get_if<Circle>(&second);
  if (c1 && c2) {
    if (c1->center_y != c2->center_y) {
      const double y = (c1->radius * c1->radius - c2->radius * c2->radius -
                        c1->center_y * c1->center_y + c2->center_y * c2->center_y) /
                       (2.0 * (c2->center_y - c1->center_y));
      hit = meet_line(*c1, y);
    }
  } else if (c1) {
    hit = meet_line(*c1, std::get<HorizontalLine>(second).height);
  } else if (c2) {
    hit = meet_line(*c2, std::get<HorizontalLine>(first).height);
  }
  if (!hit) return std::nullopt;

  const Vec2 pa{0.0, cfg.a()}, pb{0.0, cfg.b()}, pc{0.0, cfg.c()}, pd{0.0, cfg.d()};
  auto residuals = [&](Vec2 p) -> std::array<double, 2> {
    const double bc = euclidean_angle(p, pb, pc);
    return {euclidean_angle(p, pa, pb) - bc, bc - euclidean_angle(p, pc, pd)};
  };
  auto size = [](const std::array<double, 2>& r) { return std::max(std::abs(r[0]), std::abs(r[1])); };

  // Newton polish; the analytic intersection loses digits when the loci are nearly tangent
  Vec2 best = *hit;
  auto best_r = residuals(best);
  for (int iter = 0; iter < 8 && size(best_r) > 0.0; ++iter) {
    const double h = 1e-7 * std::max(best.x, std::abs(best.y - cfg.c()));
    const auto rx = residuals({best.x + h, best.y});
    const auto ry = residuals({best.x, best.y + h});
    const double j00 = (rx[0] - best_r[0]) / h, j01 = (ry[0] - best_r[0]) / h;
    const double j10 = (rx[1] - best_r[1]) / h, j11 = (ry[1] - best_r[1]) / h;
    const double det = j00 * j11 - j01 * j10;
    if (!std::isfinite(det) || det == 0.0) break;
    const Vec2 next{best.x - (j11 * best_r[0] - j01 * best_r[1]) / det,
                    best.y - (j00 * best_r[1] - j10 * best_r[0]) / det};
    if (!(next.x > 0.0)) break;
    const auto next_r = residuals(next);
    if (!(size(next_r) < size(best_r))) break;
    best = next;
    best_r = next_r;
  }
  return Witness{best, best_r[0], best_r[1]};
}

}  // namespace hapol
