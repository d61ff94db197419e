#include "hapol/hapol.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "hapol/diophantine.hpp"
#include "hapol/error.hpp"
#include "hapol/fourpoint.hpp"
#include "hapol/geom_halfplane.hpp"
#include "hapol/locus.hpp"
#include "hapol/probability.hpp"
#include "hapol/report.hpp"

struct hapol_text {
  std::string body;
};

struct hapol_curve {
  std::vector<hapol::CurveSample> samples;
};

struct hapol_family_table {
  std::vector<hapol::FamilyRow> rows;
};

namespace {

constexpr double kReportPeTol = 1e-12;
constexpr double kReportPhTol = 1e-10;

thread_local std::string last_error;

hapol_status to_status(hapol::ErrorKind kind) {
  switch (kind) {
    case hapol::ErrorKind::InvalidArgument: return HAPOL_ERR_INVALID_ARGUMENT;
    case hapol::ErrorKind::Degenerate: return HAPOL_ERR_DEGENERATE;
    case hapol::ErrorKind::OffCurve: return HAPOL_ERR_OFF_CURVE;
    case hapol::ErrorKind::OnAxis: return HAPOL_ERR_ON_AXIS;
    case hapol::ErrorKind::SearchFailed: return HAPOL_ERR_SEARCH_FAILED;
    case hapol::ErrorKind::NoStraddle: return HAPOL_ERR_NO_STRADDLE;
  }
  return HAPOL_ERR_INTERNAL;
}

hapol_status fail(hapol_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <class Body>
hapol_status guarded(Body&& body) noexcept {
  try {
    last_error.clear();
    return body();
  } catch (const hapol::Error& e) {
    return fail(to_status(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HAPOL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HAPOL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HAPOL_ERR_INTERNAL, "unknown exception");
  }
}

#define HAPOL_REQUIRE_OUT(ptr) \
  if (!(ptr)) return fail(HAPOL_ERR_INVALID_ARGUMENT, "null output pointer: " #ptr)

hapol::HPoint to_hpoint(hapol_point p) { return {p.x, p.y}; }

hapol::TripleConfig to_triple(hapol_triple t) { return {t.a, t.b, t.c}; }

hapol::FourConfig to_four(const hapol_four& f) {
  return {f.geometry == HAPOL_HYPERBOLIC ? hapol::Geometry::Hyperbolic : hapol::Geometry::Euclidean,
          f.a, f.b, f.c, f.d};
}

hapol::Geodesic to_geodesic(const hapol_geodesic& g) {
  if (g.kind == HAPOL_GEODESIC_VERTICAL) return hapol::VerticalRay{g.x0};
  return hapol::Arc{g.center, g.radius};
}

hapol::FamilyKind to_family(hapol_family f) {
  switch (f) {
    case HAPOL_QUADRATIC_MEAN: return hapol::FamilyKind::QuadraticMean;
    case HAPOL_GEOMETRIC_MEAN: return hapol::FamilyKind::GeometricMean;
    case HAPOL_HARMONIC_QUADRATIC: return hapol::FamilyKind::HarmonicQuadratic;
  }
  throw hapol::Error(hapol::ErrorKind::InvalidArgument, "unknown family");
}

mpz_class parse_integer(const char* s, const char* what) {
  if (!s) throw hapol::Error(hapol::ErrorKind::InvalidArgument, std::string("null ") + what);
  mpz_class v;
  if (v.set_str(s, 10) != 0)
    throw hapol::Error(hapol::ErrorKind::InvalidArgument,
                       std::string(what) + " is not a decimal integer: " + s);
  return v;
}

hapol_status emit(std::string body, hapol_text** out) {
  *out = new hapol_text{std::move(body)};
  return HAPOL_OK;
}

std::optional<hapol::Witness> find_witness(const hapol::FourConfig& cfg) {
  return cfg.geometry() == hapol::Geometry::Hyperbolic ? hapol::find_witness_hyper(cfg)
                                                       : hapol::find_witness_euclid(cfg);
}

double cross_ratio(const hapol::FourConfig& cfg) {
  return cfg.geometry() == hapol::Geometry::Hyperbolic ? hapol::cross_ratio_hyper(cfg)
                                                       : hapol::cross_ratio_euclid(cfg);
}

}  // namespace

extern "C" {

const char* hapol_status_string(hapol_status status) {
  switch (status) {
    case HAPOL_OK: return "ok";
    case HAPOL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HAPOL_ERR_DEGENERATE: return "degenerate input";
    case HAPOL_ERR_OFF_CURVE: return "point not on curve";
    case HAPOL_ERR_ON_AXIS: return "point on the y-axis";
    case HAPOL_ERR_SEARCH_FAILED: return "search failed";
    case HAPOL_ERR_NO_STRADDLE: return "bracket does not straddle target";
    case HAPOL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* hapol_last_error(void) { return last_error.c_str(); }

const char* hapol_version(void) { return "1.0.0"; }

const char* hapol_text_data(const hapol_text* text) { return text ? text->body.c_str() : ""; }
size_t hapol_text_size(const hapol_text* text) { return text ? text->body.size() : 0; }
void hapol_text_free(hapol_text* text) { delete text; }

hapol_status hapol_geodesic_through(hapol_point p, hapol_point q, hapol_geodesic* out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    const auto g = hapol::geodesic_through(to_hpoint(p), to_hpoint(q));
    if (const auto* ray = std::get_if<hapol::VerticalRay>(&g)) {
      *out = {HAPOL_GEODESIC_VERTICAL, ray->x0, 0.0, 0.0};
    } else {
      const auto& arc = std::get<hapol::Arc>(g);
      *out = {HAPOL_GEODESIC_ARC, 0.0, arc.center, arc.radius};
    }
    return HAPOL_OK;
  });
}

hapol_status hapol_tangent_direction(const hapol_geodesic* g, hapol_point p, hapol_point* out) {
  HAPOL_REQUIRE_OUT(g);
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    const hapol::Vec2 t = hapol::tangent_direction(to_geodesic(*g), to_hpoint(p));
    *out = {t.x, t.y};
    return HAPOL_OK;
  });
}

hapol_status hapol_hyp_angle(hapol_point p, hapol_point q1, hapol_point q2, double* out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    *out = hapol::hyp_angle(to_hpoint(p), to_hpoint(q1), to_hpoint(q2));
    return HAPOL_OK;
  });
}

hapol_status hapol_hyp_distance(hapol_point p, hapol_point q, double* out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    *out = hapol::hyp_distance(to_hpoint(p), to_hpoint(q));
    return HAPOL_OK;
  });
}

hapol_status hapol_equal_angle_residual(hapol_point p, double a, double b, double c, double* out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    *out = hapol::equal_angle_residual(to_hpoint(p), hapol::AxisPoint(a), hapol::AxisPoint(b),
                                       hapol::AxisPoint(c))
               .value;
    return HAPOL_OK;
  });
}

const char* hapol_locus_class_name(hapol_locus_class cls) {
  if (cls < HAPOL_ABOVE_QUADRATIC || cls > HAPOL_BELOW_HARMONIC) return "Unknown";
  return hapol::to_string(static_cast<hapol::LocusClass>(cls)).data();
}

hapol_status hapol_coefficients(hapol_triple cfg, hapol_coeffs* out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    const auto k = hapol::coefficients(to_triple(cfg));
    *out = {k.alpha, k.beta, k.gamma};
    return HAPOL_OK;
  });
}

hapol_status hapol_eval_quartic(hapol_triple cfg, double r, double theta, double* out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    *out = hapol::eval_quartic(to_triple(cfg), r, theta);
    return HAPOL_OK;
  });
}

hapol_status hapol_classify(hapol_triple cfg, double eps, hapol_locus_class* out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    *out = static_cast<hapol_locus_class>(hapol::classify(to_triple(cfg), eps));
    return HAPOL_OK;
  });
}

hapol_status hapol_classify_exact(const char* a, const char* b, const char* c,
                                  hapol_locus_class* out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    *out = static_cast<hapol_locus_class>(hapol::classify_exact(
        parse_integer(a, "a"), parse_integer(b, "b"), parse_integer(c, "c")));
    return HAPOL_OK;
  });
}

hapol_status hapol_solve_r2(hapol_triple cfg, double theta, double roots[2], size_t* count) {
  HAPOL_REQUIRE_OUT(roots);
  HAPOL_REQUIRE_OUT(count);
  return guarded([&] {
    const auto found = hapol::solve_r2(to_triple(cfg), theta);
    *count = found.size();
    for (size_t i = 0; i < found.size() && i < 2; ++i) roots[i] = found[i];
    return HAPOL_OK;
  });
}

hapol_status hapol_sample_curve(hapol_triple cfg, int n, hapol_curve** out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    *out = new hapol_curve{hapol::sample_curve(to_triple(cfg), n)};
    return HAPOL_OK;
  });
}

size_t hapol_curve_size(const hapol_curve* curve) { return curve ? curve->samples.size() : 0; }

hapol_status hapol_curve_get(const hapol_curve* curve, size_t index, hapol_curve_sample* out) {
  HAPOL_REQUIRE_OUT(curve);
  HAPOL_REQUIRE_OUT(out);
  if (index >= curve->samples.size()) return fail(HAPOL_ERR_INVALID_ARGUMENT, "sample index out of range");
  const auto& s = curve->samples[index];
  *out = {s.theta, s.r, s.point.x(), s.point.y()};
  return HAPOL_OK;
}

void hapol_curve_free(hapol_curve* curve) { delete curve; }

hapol_status hapol_euclidean_locus(double a, double b, double c, hapol_euclid_locus* out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    const auto locus = hapol::euclidean_locus(a, b, c);
    if (const auto* line = std::get_if<hapol::HorizontalLine>(&locus)) {
      *out = {HAPOL_EUCLID_LINE, line->height, 0.0, 0.0};
    } else {
      const auto& circle = std::get<hapol::Circle>(locus);
      *out = {HAPOL_EUCLID_CIRCLE, 0.0, circle.center_y, circle.radius};
    }
    return HAPOL_OK;
  });
}

hapol_status hapol_euclidean_equal_angle_residual(hapol_point p, double a, double b, double c,
                                                  double* out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    *out = hapol::euclidean_equal_angle_residual({p.x, p.y}, a, b, c);
    return HAPOL_OK;
  });
}

hapol_status hapol_cross_ratio(const hapol_four* cfg, double* out) {
  HAPOL_REQUIRE_OUT(cfg);
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    *out = cross_ratio(to_four(*cfg));
    return HAPOL_OK;
  });
}

hapol_status hapol_exists(const hapol_four* cfg, int* out) {
  HAPOL_REQUIRE_OUT(cfg);
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    const auto four = to_four(*cfg);
    *out = four.geometry() == hapol::Geometry::Hyperbolic ? hapol::exists_hyper(four)
                                                          : hapol::exists_euclid(four);
    return HAPOL_OK;
  });
}

hapol_status hapol_find_witness(const hapol_four* cfg, int* found, hapol_witness* out) {
  HAPOL_REQUIRE_OUT(cfg);
  HAPOL_REQUIRE_OUT(found);
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    const auto w = find_witness(to_four(*cfg));
    *found = w.has_value();
    if (w) *out = {w->point.x, w->point.y, w->residual_ab_bc, w->residual_bc_cd};
    return HAPOL_OK;
  });
}

double hapol_pe_closed_form(void) { return hapol::pe_closed_form(); }
double hapol_ph_closed_form_paper(void) { return hapol::ph_closed_form_paper(); }

hapol_status hapol_estimate_pe(uint64_t n, uint64_t seed, unsigned threads,
                               hapol_prob_estimate* out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    const auto e = hapol::estimate_pe(n, seed, threads);
    *out = {e.mean, e.std_error, e.n, e.seed};
    return HAPOL_OK;
  });
}

hapol_status hapol_estimate_ph(uint64_t n, uint64_t seed, double ratio, unsigned threads,
                               hapol_prob_estimate* out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    const auto e = hapol::estimate_ph(n, seed, hapol::HyperProbSetup(ratio), threads);
    *out = {e.mean, e.std_error, e.n, e.seed};
    return HAPOL_OK;
  });
}

hapol_status hapol_pe_quadrature(double tol, double* out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    *out = hapol::pe_quadrature(tol);
    return HAPOL_OK;
  });
}

hapol_status hapol_ph_quadrature(double ratio, double tol, double* out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    *out = hapol::ph_quadrature(hapol::HyperProbSetup(ratio), tol);
    return HAPOL_OK;
  });
}

hapol_status hapol_calibrate_ratio(double target, double lo, double hi, double tol, double* out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    const auto ratio = hapol::calibrate_ratio(target, {lo, hi}, tol);
    if (!ratio) return fail(HAPOL_ERR_NO_STRADDLE, "probability does not cross the target inside the bracket");
    *out = *ratio;
    return HAPOL_OK;
  });
}

hapol_status hapol_family_generate(hapol_family family, long m_lo, long m_hi, long n_lo, long n_hi,
                                   long k, hapol_family_table** out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    *out = new hapol_family_table{hapol::family_table(to_family(family), m_lo, m_hi, n_lo, n_hi, k)};
    return HAPOL_OK;
  });
}

size_t hapol_family_table_size(const hapol_family_table* table) {
  return table ? table->rows.size() : 0;
}

hapol_status hapol_family_row_verified(const hapol_family_table* table, size_t index, int* out) {
  HAPOL_REQUIRE_OUT(table);
  HAPOL_REQUIRE_OUT(out);
  if (index >= table->rows.size()) return fail(HAPOL_ERR_INVALID_ARGUMENT, "row index out of range");
  *out = table->rows[index].verified;
  return HAPOL_OK;
}

void hapol_family_table_free(hapol_family_table* table) { delete table; }

hapol_status hapol_verify_identity(const char* a, const char* b, const char* c,
                                   hapol_family family, int* out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    const hapol::IntTriple t{parse_integer(a, "a"), parse_integer(b, "b"), parse_integer(c, "c")};
    *out = hapol::verify_identity(t, to_family(family));
    return HAPOL_OK;
  });
}

hapol_status hapol_curve_csv(const hapol_curve* curve, hapol_text** out) {
  HAPOL_REQUIRE_OUT(curve);
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] { return emit(hapol::samples_csv(curve->samples), out); });
}

hapol_status hapol_curve_svg(const hapol_curve* curve, int width, int height, hapol_text** out) {
  HAPOL_REQUIRE_OUT(curve);
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    if (width <= 0 || height <= 0) return fail(HAPOL_ERR_INVALID_ARGUMENT, "viewport must be positive");
    return emit(hapol::render_svg(curve->samples, {width, height}), out);
  });
}

hapol_status hapol_classify_json(hapol_triple cfg, double eps, hapol_text** out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    const auto triple = to_triple(cfg);
    return emit(hapol::classification_json(triple, hapol::classify(triple, eps)), out);
  });
}

hapol_status hapol_classify_exact_json(const char* a, const char* b, const char* c,
                                       hapol_text** out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    const mpz_class ia = parse_integer(a, "a"), ib = parse_integer(b, "b"), ic = parse_integer(c, "c");
    const auto cls = hapol::classify_exact(ia, ib, ic);
    const hapol::TripleConfig triple(ia.get_d(), ib.get_d(), ic.get_d());
    return emit(hapol::classification_json(triple, cls), out);
  });
}

hapol_status hapol_euclidean_locus_json(hapol_triple cfg, hapol_text** out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    const auto triple = to_triple(cfg);
    return emit(hapol::euclidean_locus_json(triple, hapol::euclidean_locus(triple)), out);
  });
}

hapol_status hapol_fourpoint_json(const hapol_four* cfg, int with_witness, hapol_text** out) {
  HAPOL_REQUIRE_OUT(cfg);
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    const auto four = to_four(*cfg);
    const double cr = cross_ratio(four);
    std::optional<hapol::Witness> w;
    if (with_witness) w = find_witness(four);
    return emit(hapol::fourpoint_json({four, cr, cr < 3.0, w}), out);
  });
}

hapol_status hapol_pe_json(uint64_t n, uint64_t seed, unsigned threads, int with_quadrature,
                           hapol_text** out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    hapol::ProbReport report{"pe", hapol::estimate_pe(n, seed, threads), std::nullopt,
                             hapol::pe_closed_form(), std::nullopt};
    if (with_quadrature) report.quadrature = hapol::pe_quadrature(kReportPeTol);
    return emit(hapol::prob_json(report), out);
  });
}

hapol_status hapol_ph_json(uint64_t n, uint64_t seed, double ratio, unsigned threads,
                           int with_quadrature, hapol_text** out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    const hapol::HyperProbSetup setup(ratio);
    hapol::ProbReport report{"ph", hapol::estimate_ph(n, seed, setup, threads), ratio,
                             hapol::ph_closed_form_paper(), std::nullopt};
    if (with_quadrature) report.quadrature = hapol::ph_quadrature(setup, kReportPhTol);
    return emit(hapol::prob_json(report), out);
  });
}

hapol_status hapol_calibration_json(double target, double lo, double hi, double tol,
                                    hapol_text** out) {
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] {
    hapol::CalibrationReport report{target, lo, hi, tol, std::nullopt, std::nullopt};
    report.ratio = hapol::calibrate_ratio(target, {lo, hi}, tol);
    if (report.ratio)
      report.probability_at_ratio =
          hapol::ph_quadrature(hapol::HyperProbSetup(*report.ratio), kReportPhTol);
    emit(hapol::calibration_json(report), out);
    if (!report.ratio)
      return fail(HAPOL_ERR_NO_STRADDLE, "probability does not cross the target inside the bracket");
    return HAPOL_OK;
  });
}

hapol_status hapol_family_csv(const hapol_family_table* table, hapol_text** out) {
  HAPOL_REQUIRE_OUT(table);
  HAPOL_REQUIRE_OUT(out);
  return guarded([&] { return emit(hapol::family_csv(table->rows), out); });
}

}  // extern "C"
