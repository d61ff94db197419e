#include "hapol/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include "hapol/error.hpp"

namespace hapol {

namespace {

std::string format_with(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

// Minimal writer for flat JSON objects with a fixed key order.
class JsonObject {
 public:
  JsonObject& raw(std::string_view key, std::string_view value) {
    out_ += first_ ? "{" : ",";
    first_ = false;
    out_ += '"';
    out_ += key;
    out_ += "\":";
    out_ += value;
    return *this;
  }
  JsonObject& num(std::string_view key, double v) { return raw(key, json_real(v)); }
  JsonObject& num(std::string_view key, std::optional<double> v) {
    return raw(key, v ? json_real(*v) : "null");
  }
  JsonObject& uint(std::string_view key, std::uint64_t v) { return raw(key, std::to_string(v)); }
  JsonObject& boolean(std::string_view key, bool v) { return raw(key, v ? "true" : "false"); }
  JsonObject& str(std::string_view key, std::string_view v) {
    return raw(key, "\"" + std::string(v) + "\"");
  }
  std::string done() { return (first_ ? "{" : out_) + "}"; }

  static std::string json_real(double v) { return std::isfinite(v) ? format_real(v) : "null"; }

 private:
  std::string out_;
  bool first_ = true;
};

std::string svg_num(double v) { return format_with("%.9g", v); }

}  // namespace

std::string format_real(double v) { return format_with("%.17g", v); }

std::string samples_csv(std::span<const CurveSample> samples) {
  std::string out = "theta,r,x,y\n";
  for (const auto& s : samples) {
    out += format_real(s.theta) + "," + format_real(s.r) + "," + format_real(s.point.x()) + "," +
           format_real(s.point.y()) + "\n";
  }
  return out;
}

std::string classification_json(const TripleConfig& cfg, LocusClass cls) {
  const QuarticCoeffs k = coefficients(cfg);
  return JsonObject()
      .num("a", cfg.a())
      .num("b", cfg.b())
      .num("c", cfg.c())
      .num("alpha", k.alpha)
      .num("beta", k.beta)
      .num("gamma", k.gamma)
      .str("class", to_string(cls))
      .done();
}

std::string euclidean_locus_json(const TripleConfig& cfg, const EuclideanLocus& locus) {
  JsonObject obj;
  obj.num("a", cfg.a()).num("b", cfg.b()).num("c", cfg.c());
  if (const auto* line = std::get_if<HorizontalLine>(&locus)) {
    obj.str("kind", "line").num("height", line->height);
  } else {
    const auto& circle = std::get<Circle>(locus);
    obj.str("kind", "circle").num("center_y", circle.center_y).num("radius", circle.radius);
  }
  return obj.done();
}

std::string fourpoint_json(const FourPointReport& report) {
  const FourConfig& cfg = report.config;
  std::string witness = "null";
  if (report.witness) {
    witness = JsonObject()
                  .num("x", report.witness->point.x)
                  .num("y", report.witness->point.y)
                  .done();
  }
  return JsonObject()
      .str("geometry", cfg.geometry() == Geometry::Hyperbolic ? "hyperbolic" : "euclidean")
      .num("a", cfg.a())
      .num("b", cfg.b())
      .num("c", cfg.c())
      .num("d", cfg.d())
      .num("cross_ratio", report.cross_ratio)
      .boolean("exists", report.exists)
      .raw("witness", witness)
      .done();
}

std::string prob_json(const ProbReport& report) {
  return JsonObject()
      .str("kind", report.kind)
      .uint("n", report.estimate.n)
      .uint("seed", report.estimate.seed)
      .num("ratio", report.ratio)
      .num("mean", report.estimate.mean)
      .num("stderr", report.estimate.std_error)
      .num("closed_form", report.closed_form)
      .num("quadrature", report.quadrature)
      .done();
}

std::string calibration_json(const CalibrationReport& report) {
  std::string bracket =
      "[" + format_real(report.bracket_lo) + "," + format_real(report.bracket_hi) + "]";
  return JsonObject()
      .str("kind", "ph-calibration")
      .num("target", report.target)
      .raw("bracket", bracket)
      .num("tol", report.tol)
      .boolean("found", report.ratio.has_value())
      .num("ratio", report.ratio)
      .num("probability_at_ratio", report.probability_at_ratio)
      .done();
}

std::string family_csv(std::span<const FamilyRow> rows) {
  std::string out = "m,n,a,b,c,kind,verified\n";
  for (const auto& row : rows) {
    out += std::to_string(row.m) + "," + std::to_string(row.n) + "," + row.triple.a.get_str() +
           "," + row.triple.b.get_str() + "," + row.triple.c.get_str() + "," +
           std::string(to_string(row.kind)) + "," + (row.verified ? "true" : "false") + "\n";
  }
  return out;
}

std::string render_svg(std::span<const CurveSample> samples, Viewport viewport) {
  if (samples.empty()) throw Error(ErrorKind::InvalidArgument, "render_svg: no samples");

  // Samples arrive sorted by (theta, r); the k-th root at each angle joins
  // branch k.
  std::vector<std::vector<Vec2>> branches;
  for (std::size_t i = 0; i < samples.size();) {
    std::size_t j = i;
    for (; j < samples.size() && samples[j].theta == samples[i].theta; ++j) {
      const std::size_t k = j - i;
      if (branches.size() <= k) branches.emplace_back();
      branches[k].push_back(samples[j].point.vec());
    }
    i = j;
  }

  std::vector<double> gaps;
  for (const auto& br : branches)
    for (std::size_t i = 1; i < br.size(); ++i)
      gaps.push_back(std::hypot(br[i].x - br[i - 1].x, br[i].y - br[i - 1].y));
  double median = 0.0;
  if (!gaps.empty()) {
    std::vector<double> sorted = gaps;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    median = sorted[sorted.size() / 2];
  }
  const double max_gap = 10.0 * median;

  std::vector<std::vector<Vec2>> polylines;
  for (const auto& br : branches) {
    polylines.emplace_back();
    for (std::size_t i = 0; i < br.size(); ++i) {
      if (i > 0 && std::hypot(br[i].x - br[i - 1].x, br[i].y - br[i - 1].y) > max_gap)
        polylines.emplace_back();
      polylines.back().push_back(br[i]);
    }
  }

  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = 0.0, y_hi = 0.0;  // keep the axis in view
  for (const auto& s : samples) {
    x_lo = std::min(x_lo, s.point.x());
    x_hi = std::max(x_hi, s.point.x());
    y_lo = std::min(y_lo, s.point.y());
    y_hi = std::max(y_hi, s.point.y());
  }
  double w = x_hi - x_lo, h = y_hi - y_lo;
  if (w <= 0.0) w = std::max(h, 1.0);
  if (h <= 0.0) h = std::max(w, 1.0);
  const double mx = 0.05 * w, my = 0.05 * h;
  const double vx = x_lo - mx, vw = w + 2.0 * mx;
  const double vy = -(y_hi + my), vh = h + 2.0 * my;  // SVG y grows downward

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(viewport.width) +
         "\" height=\"" + std::to_string(viewport.height) + "\" viewBox=\"" + svg_num(vx) + " " +
         svg_num(vy) + " " + svg_num(vw) + " " + svg_num(vh) +
         "\" preserveAspectRatio=\"xMidYMid meet\">\n";
  out += "  <line x1=\"" + svg_num(vx) + "\" y1=\"0\" x2=\"" + svg_num(vx + vw) +
         "\" y2=\"0\" stroke=\"#888888\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\"/>\n";
  for (const auto& line : polylines) {
    if (line.empty()) continue;
    out += "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" "
           "vector-effect=\"non-scaling-stroke\" points=\"";
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out += ' ';
      out += svg_num(line[i].x) + "," + svg_num(-line[i].y);
    }
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace hapol
