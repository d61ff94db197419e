#include "hapol/hapol.h"

#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <string>

namespace {

struct TextDeleter {
  void operator()(hapol_text* t) const { hapol_text_free(t); }
};
using Text = std::unique_ptr<hapol_text, TextDeleter>;

std::string take(hapol_text* raw) {
  Text t(raw);
  return std::string(hapol_text_data(t.get()), hapol_text_size(t.get()));
}

TEST(CApi, StatusStringsAndVersion) {
  EXPECT_STREQ(hapol_status_string(HAPOL_OK), "ok");
  EXPECT_STRNE(hapol_status_string(HAPOL_ERR_NO_STRADDLE), "ok");
  EXPECT_STREQ(hapol_version(), "1.0.0");
  EXPECT_STREQ(hapol_locus_class_name(HAPOL_HARMONIC_LEMNISCATE), "HarmonicLemniscate");
}

TEST(CApi, InvalidArgumentsSetLastError) {
  hapol_locus_class cls;
  EXPECT_EQ(hapol_classify({1, 2, 3}, 1e-12, &cls), HAPOL_ERR_INVALID_ARGUMENT);
  EXPECT_STRNE(hapol_last_error(), "");
  EXPECT_EQ(hapol_classify({35, 25, 5}, 1e-12, nullptr), HAPOL_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(hapol_classify({35, 25, 5}, 1e-12, &cls), HAPOL_OK);
  EXPECT_STREQ(hapol_last_error(), "");
  EXPECT_EQ(cls, HAPOL_QUADRATIC_HYPERBOLA);
}

TEST(CApi, GeometryPrimitives) {
  hapol_geodesic g;
  ASSERT_EQ(hapol_geodesic_through({-1, 1}, {1, 1}, &g), HAPOL_OK);
  EXPECT_EQ(g.kind, HAPOL_GEODESIC_ARC);
  EXPECT_NEAR(g.center, 0.0, 1e-15);
  EXPECT_NEAR(g.radius, std::sqrt(2.0), 1e-15);
  EXPECT_EQ(hapol_geodesic_through({0, 1}, {0, 1}, &g), HAPOL_ERR_DEGENERATE);
  EXPECT_EQ(hapol_geodesic_through({0, -1}, {0, 1}, &g), HAPOL_ERR_INVALID_ARGUMENT);
  double r;
  EXPECT_EQ(hapol_equal_angle_residual({0, 3}, 4, 2, 1, &r), HAPOL_ERR_ON_AXIS);

  hapol_point t;
  hapol_geodesic vertical{HAPOL_GEODESIC_VERTICAL, 0.0, 0.0, 0.0};
  EXPECT_EQ(hapol_tangent_direction(&vertical, {1, 1}, &t), HAPOL_ERR_OFF_CURVE);

  double d;
  ASSERT_EQ(hapol_hyp_distance({0, 1}, {0, std::exp(1.0)}, &d), HAPOL_OK);
  EXPECT_NEAR(d, 1.0, 1e-14);
  double angle;
  ASSERT_EQ(hapol_hyp_angle({0, 1}, {0, 2}, {1, 1}, &angle), HAPOL_OK);
  EXPECT_GT(angle, 0.0);
}

TEST(CApi, LocusAndCurve) {
  hapol_coeffs k;
  ASSERT_EQ(hapol_coefficients({4, 2, 1}, &k), HAPOL_OK);
  EXPECT_EQ(k.alpha, -9.0);
  EXPECT_EQ(k.beta, 0.0);

  hapol_locus_class cls;
  ASSERT_EQ(hapol_classify_exact("35", "7", "5", &cls), HAPOL_OK);
  EXPECT_EQ(cls, HAPOL_HARMONIC_LEMNISCATE);
  EXPECT_EQ(hapol_classify_exact("35", "x", "5", &cls), HAPOL_ERR_INVALID_ARGUMENT);

  double roots[2];
  size_t count = 0;
  ASSERT_EQ(hapol_solve_r2({4, 2, 1}, 1.0, roots, &count), HAPOL_OK);
  ASSERT_EQ(count, 1u);
  EXPECT_NEAR(roots[0], 4.0, 1e-12);

  hapol_curve* curve = nullptr;
  ASSERT_EQ(hapol_sample_curve({4, 2, 1}, 16, &curve), HAPOL_OK);
  ASSERT_EQ(hapol_curve_size(curve), 16u);
  hapol_curve_sample s;
  ASSERT_EQ(hapol_curve_get(curve, 3, &s), HAPOL_OK);
  EXPECT_NEAR(std::hypot(s.x, s.y), 2.0, 1e-12);
  EXPECT_EQ(hapol_curve_get(curve, 16, &s), HAPOL_ERR_INVALID_ARGUMENT);

  hapol_text* text = nullptr;
  ASSERT_EQ(hapol_curve_csv(curve, &text), HAPOL_OK);
  EXPECT_EQ(take(text).rfind("theta,r,x,y\n", 0), 0u);
  ASSERT_EQ(hapol_curve_svg(curve, 400, 300, &text), HAPOL_OK);
  EXPECT_NE(take(text).find("<polyline"), std::string::npos);
  hapol_curve_free(curve);
  EXPECT_EQ(hapol_sample_curve({4, 2, 1}, 1, &curve), HAPOL_ERR_INVALID_ARGUMENT);

  hapol_euclid_locus el;
  ASSERT_EQ(hapol_euclidean_locus(9, 4, 1, &el), HAPOL_OK);
  EXPECT_EQ(el.kind, HAPOL_EUCLID_CIRCLE);
  EXPECT_NEAR(el.center_y, -3.5, 1e-14);
  EXPECT_NEAR(el.radius, 7.5, 1e-14);
}

TEST(CApi, FourPoints) {
  const hapol_four boundary{HAPOL_EUCLIDEAN, 3, 2, 1, 0};
  double cr;
  ASSERT_EQ(hapol_cross_ratio(&boundary, &cr), HAPOL_OK);
  EXPECT_EQ(cr, 3.0);
  int exists = 1;
  ASSERT_EQ(hapol_exists(&boundary, &exists), HAPOL_OK);
  EXPECT_EQ(exists, 0);

  const hapol_four hyper{HAPOL_HYPERBOLIC, 10, 6, 5, 1};
  int found = 0;
  hapol_witness w;
  ASSERT_EQ(hapol_find_witness(&hyper, &found, &w), HAPOL_OK);
  ASSERT_EQ(found, 1);
  EXPECT_LE(std::abs(w.residual_ab_bc), 1e-8);
  EXPECT_LE(std::abs(w.residual_bc_cd), 1e-8);

  const hapol_four bad{HAPOL_HYPERBOLIC, 3, 2, 1, 0};
  EXPECT_EQ(hapol_cross_ratio(&bad, &cr), HAPOL_ERR_INVALID_ARGUMENT);

  hapol_text* text = nullptr;
  ASSERT_EQ(hapol_fourpoint_json(&boundary, 1, &text), HAPOL_OK);
  EXPECT_EQ(take(text),
            R"({"geometry":"euclidean","a":3,"b":2,"c":1,"d":0,"cross_ratio":3,"exists":false,"witness":null})");
}

TEST(CApi, Probability) {
  EXPECT_NEAR(hapol_pe_closed_form(), 0.434405012337875, 1e-15);
  hapol_prob_estimate one, eight;
  ASSERT_EQ(hapol_estimate_ph(100000, 4, 2.0, 1, &one), HAPOL_OK);
  ASSERT_EQ(hapol_estimate_ph(100000, 4, 2.0, 8, &eight), HAPOL_OK);
  EXPECT_EQ(one.mean, eight.mean);
  EXPECT_EQ(hapol_estimate_ph(10, 4, 1.0, 1, &one), HAPOL_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(hapol_estimate_pe(0, 4, 1, &one), HAPOL_ERR_INVALID_ARGUMENT);

  double ratio = 0.0;
  EXPECT_EQ(hapol_calibrate_ratio(1.5, 1.01, 1000, 1e-10, &ratio), HAPOL_ERR_NO_STRADDLE);
  hapol_text* text = nullptr;
  ASSERT_EQ(hapol_calibration_json(1.5, 1.01, 1000, 1e-10, &text), HAPOL_ERR_NO_STRADDLE);
  EXPECT_NE(take(text).find("\"found\":false"), std::string::npos);

  ASSERT_EQ(hapol_pe_json(1000, 1, 2, 1, &text), HAPOL_OK);
  const std::string a = take(text);
  ASSERT_EQ(hapol_pe_json(1000, 1, 7, 1, &text), HAPOL_OK);
  EXPECT_EQ(take(text), a);
}

TEST(CApi, Families) {
  hapol_family_table* table = nullptr;
  ASSERT_EQ(hapol_family_generate(HAPOL_GEOMETRIC_MEAN, 1, 2, 1, 2, 1, &table), HAPOL_OK);
  ASSERT_EQ(hapol_family_table_size(table), 2u);
  int verified = 0;
  ASSERT_EQ(hapol_family_row_verified(table, 1, &verified), HAPOL_OK);
  EXPECT_EQ(verified, 1);
  hapol_text* text = nullptr;
  ASSERT_EQ(hapol_family_csv(table, &text), HAPOL_OK);
  EXPECT_EQ(take(text),
            "m,n,a,b,c,kind,verified\n1,2,1,2,4,GeometricMean,true\n2,1,4,2,1,GeometricMean,true\n");
  hapol_family_table_free(table);

  int ok = 0;
  ASSERT_EQ(hapol_verify_identity("6035", "6887", "8245", HAPOL_HARMONIC_QUADRATIC, &ok), HAPOL_OK);
  EXPECT_EQ(ok, 1);
  ASSERT_EQ(hapol_verify_identity("4", "3", "1", HAPOL_GEOMETRIC_MEAN, &ok), HAPOL_OK);
  EXPECT_EQ(ok, 0);
}

TEST(CApi, NullHandlesAreSafe) {
  hapol_text_free(nullptr);
  hapol_curve_free(nullptr);
  hapol_family_table_free(nullptr);
  EXPECT_EQ(hapol_curve_size(nullptr), 0u);
  EXPECT_EQ(hapol_curve_csv(nullptr, nullptr), HAPOL_ERR_INVALID_ARGUMENT);
}

}  // namespace
