/*
 * C interface to the hapol library: the hyperbolic Apollonius locus in the
 * half-plane model, equal-angle tests for four collinear points, the
 * associated geometric probabilities and the integer boundary families.
 *
 * Every fallible call returns a hapol_status. On failure the message of the
 * last error on the calling thread is available from hapol_last_error().
 * Objects returned through `**out` parameters are owned by the caller and
 * released with the matching *_free function.
 */
#ifndef HAPOL_H
#define HAPOL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HAPOL_BUILDING_LIBRARY)
#    define HAPOL_API __declspec(dllexport)
#  else
#    define HAPOL_API __declspec(dllimport)
#  endif
#else
#  define HAPOL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hapol_status {
  HAPOL_OK = 0,
  HAPOL_ERR_INVALID_ARGUMENT = 1,
  HAPOL_ERR_DEGENERATE = 2,
  HAPOL_ERR_OFF_CURVE = 3,
  HAPOL_ERR_ON_AXIS = 4,
  HAPOL_ERR_SEARCH_FAILED = 5,
  HAPOL_ERR_NO_STRADDLE = 6,
  HAPOL_ERR_INTERNAL = 7
} hapol_status;

HAPOL_API const char* hapol_status_string(hapol_status status);
HAPOL_API const char* hapol_last_error(void);
HAPOL_API const char* hapol_version(void);

/* ---- text results ------------------------------------------------------ */

typedef struct hapol_text hapol_text;

HAPOL_API const char* hapol_text_data(const hapol_text* text);
HAPOL_API size_t hapol_text_size(const hapol_text* text);
HAPOL_API void hapol_text_free(hapol_text* text);

/* ---- half-plane primitives --------------------------------------------- */

typedef struct hapol_point {
  double x;
  double y;
} hapol_point;

typedef enum hapol_geodesic_kind {
  HAPOL_GEODESIC_VERTICAL = 0,
  HAPOL_GEODESIC_ARC = 1
} hapol_geodesic_kind;

typedef struct hapol_geodesic {
  hapol_geodesic_kind kind;
  double x0;     /* vertical ray abscissa */
  double center; /* arc center on the boundary axis */
  double radius; /* arc radius */
} hapol_geodesic;

HAPOL_API hapol_status hapol_geodesic_through(hapol_point p, hapol_point q, hapol_geodesic* out);
HAPOL_API hapol_status hapol_tangent_direction(const hapol_geodesic* g, hapol_point p,
                                               hapol_point* out);
HAPOL_API hapol_status hapol_hyp_angle(hapol_point p, hapol_point q1, hapol_point q2, double* out);
HAPOL_API hapol_status hapol_hyp_distance(hapol_point p, hapol_point q, double* out);
HAPOL_API hapol_status hapol_equal_angle_residual(hapol_point p, double a, double b, double c,
                                                  double* out);

/* ---- locus ------------------------------------------------------------- */

typedef struct hapol_triple {
  double a;
  double b;
  double c;
} hapol_triple;

typedef struct hapol_coeffs {
  double alpha;
  double beta;
  double gamma;
} hapol_coeffs;

typedef enum hapol_locus_class {
  HAPOL_ABOVE_QUADRATIC = 0,
  HAPOL_QUADRATIC_HYPERBOLA = 1,
  HAPOL_BETWEEN_GEOMETRIC_AND_QUADRATIC = 2,
  HAPOL_GEOMETRIC_CIRCLE = 3,
  HAPOL_BETWEEN_HARMONIC_AND_GEOMETRIC = 4,
  HAPOL_HARMONIC_LEMNISCATE = 5,
  HAPOL_BELOW_HARMONIC = 6
} hapol_locus_class;

typedef struct hapol_curve_sample {
  double theta;
  double r;
  double x;
  double y;
} hapol_curve_sample;

typedef struct hapol_curve hapol_curve;

HAPOL_API const char* hapol_locus_class_name(hapol_locus_class cls);
HAPOL_API hapol_status hapol_coefficients(hapol_triple cfg, hapol_coeffs* out);
HAPOL_API hapol_status hapol_eval_quartic(hapol_triple cfg, double r, double theta, double* out);
HAPOL_API hapol_status hapol_classify(hapol_triple cfg, double eps, hapol_locus_class* out);
/* Exact classification of decimal integer heights. */
HAPOL_API hapol_status hapol_classify_exact(const char* a, const char* b, const char* c,
                                            hapol_locus_class* out);
/* Writes up to two ascending roots s = r^2 to roots[]. */
HAPOL_API hapol_status hapol_solve_r2(hapol_triple cfg, double theta, double roots[2],
                                      size_t* count);

HAPOL_API hapol_status hapol_sample_curve(hapol_triple cfg, int n, hapol_curve** out);
HAPOL_API size_t hapol_curve_size(const hapol_curve* curve);
HAPOL_API hapol_status hapol_curve_get(const hapol_curve* curve, size_t index,
                                       hapol_curve_sample* out);
HAPOL_API void hapol_curve_free(hapol_curve* curve);

typedef enum hapol_euclid_kind {
  HAPOL_EUCLID_LINE = 0,
  HAPOL_EUCLID_CIRCLE = 1
} hapol_euclid_kind;

typedef struct hapol_euclid_locus {
  hapol_euclid_kind kind;
  double height;   /* line */
  double center_y; /* circle */
  double radius;   /* circle */
} hapol_euclid_locus;

HAPOL_API hapol_status hapol_euclidean_locus(double a, double b, double c, hapol_euclid_locus* out);
HAPOL_API hapol_status hapol_euclidean_equal_angle_residual(hapol_point p, double a, double b,
                                                            double c, double* out);

/* ---- four points ------------------------------------------------------- */

typedef enum hapol_geometry {
  HAPOL_EUCLIDEAN = 0,
  HAPOL_HYPERBOLIC = 1
} hapol_geometry;

typedef struct hapol_four {
  hapol_geometry geometry;
  double a;
  double b;
  double c;
  double d;
} hapol_four;

typedef struct hapol_witness {
  double x;
  double y;
  double residual_ab_bc;
  double residual_bc_cd;
} hapol_witness;

HAPOL_API hapol_status hapol_cross_ratio(const hapol_four* cfg, double* out);
HAPOL_API hapol_status hapol_exists(const hapol_four* cfg, int* out);
/* *found is 0 when no witness exists; HAPOL_ERR_SEARCH_FAILED is returned
 * when one should exist but the search could not locate it. */
HAPOL_API hapol_status hapol_find_witness(const hapol_four* cfg, int* found, hapol_witness* out);

/* ---- probability ------------------------------------------------------- */

typedef struct hapol_prob_estimate {
  double mean;
  double std_error;
  uint64_t n;
  uint64_t seed;
} hapol_prob_estimate;

HAPOL_API double hapol_pe_closed_form(void);
HAPOL_API double hapol_ph_closed_form_paper(void);
HAPOL_API hapol_status hapol_estimate_pe(uint64_t n, uint64_t seed, unsigned threads,
                                         hapol_prob_estimate* out);
HAPOL_API hapol_status hapol_estimate_ph(uint64_t n, uint64_t seed, double ratio,
                                         unsigned threads, hapol_prob_estimate* out);
HAPOL_API hapol_status hapol_pe_quadrature(double tol, double* out);
HAPOL_API hapol_status hapol_ph_quadrature(double ratio, double tol, double* out);
HAPOL_API hapol_status hapol_calibrate_ratio(double target, double lo, double hi, double tol,
                                             double* out);

/* ---- integer families -------------------------------------------------- */

typedef enum hapol_family {
  HAPOL_QUADRATIC_MEAN = 0,
  HAPOL_GEOMETRIC_MEAN = 1,
  HAPOL_HARMONIC_QUADRATIC = 2
} hapol_family;

typedef struct hapol_family_table hapol_family_table;

HAPOL_API hapol_status hapol_family_generate(hapol_family family, long m_lo, long m_hi, long n_lo,
                                             long n_hi, long k, hapol_family_table** out);
HAPOL_API size_t hapol_family_table_size(const hapol_family_table* table);
HAPOL_API hapol_status hapol_family_row_verified(const hapol_family_table* table, size_t index,
                                                 int* out);
HAPOL_API void hapol_family_table_free(hapol_family_table* table);
HAPOL_API hapol_status hapol_verify_identity(const char* a, const char* b, const char* c,
                                             hapol_family family, int* out);

/* ---- reports ----------------------------------------------------------- */

HAPOL_API hapol_status hapol_curve_csv(const hapol_curve* curve, hapol_text** out);
HAPOL_API hapol_status hapol_curve_svg(const hapol_curve* curve, int width, int height,
                                       hapol_text** out);
HAPOL_API hapol_status hapol_classify_json(hapol_triple cfg, double eps, hapol_text** out);
HAPOL_API hapol_status hapol_classify_exact_json(const char* a, const char* b, const char* c,
                                                 hapol_text** out);
HAPOL_API hapol_status hapol_euclidean_locus_json(hapol_triple cfg, hapol_text** out);
HAPOL_API hapol_status hapol_fourpoint_json(const hapol_four* cfg, int with_witness,
                                            hapol_text** out);
HAPOL_API hapol_status hapol_pe_json(uint64_t n, uint64_t seed, unsigned threads,
                                     int with_quadrature, hapol_text** out);
HAPOL_API hapol_status hapol_ph_json(uint64_t n, uint64_t seed, double ratio, unsigned threads,
                                     int with_quadrature, hapol_text** out);
/* On HAPOL_ERR_NO_STRADDLE the report (with "found": false) is still
 * written to *out. */
HAPOL_API hapol_status hapol_calibration_json(double target, double lo, double hi, double tol,
                                              hapol_text** out);
HAPOL_API hapol_status hapol_family_csv(const hapol_family_table* table, hapol_text** out);

#ifdef __cplusplus
}
#endif

#endif /* HAPOL_H */
