#include <cmath>
#include <vector>

#include <doctest.h>

#include "affcurve/curve.hpp"
#include "affcurve/errors.hpp"

#include "analytic_curves.hpp"

using namespace affcurve;
namespace tc = testcurves;

TEST_CASE("curve validation") {
  std::vector<double> params{0, 1, 2, 3, 4, 5, 6, 7};
  std::vector<Vec3> points(8);
  CHECK_THROWS_AS(SampledCurve::make(params, points), GridTooShort);

  params.push_back(7.0);  // not strictly increasing
  points.emplace_back();
  CHECK_THROWS_AS(SampledCurve::make(params, points), Error);

  params.back() = 8.0;
  SampledCurve ok = SampledCurve::make(params, points);
  REQUIRE(ok.uniform_step.has_value());
  CHECK(*ok.uniform_step == doctest::Approx(1.0));

  // geometric spacing is flagged as nonuniform
  std::vector<double> geo(12);
  double t = 0.0, step = 0.1;
  for (auto& v : geo) {
    v = t;
    t += step;
    step *= 1.25;
  }
  SampledCurve g = SampledCurve::make(geo, std::vector<Vec3>(12));
  CHECK_FALSE(g.uniform_step.has_value());
  CHECK_THROWS_AS(estimate_jet(g), NonUniformGrid);
}

TEST_CASE("jet of the twisted cubic") {
  SampledCurve c = tc::twisted_cubic_curve(0.0, 1.0, 101);  // h = 0.01
  CurveJet jet = estimate_jet(c);
  double worst1 = 0.0, worst4 = 0.0;
  for (std::size_t i = 3; i + 3 < c.size(); ++i) {
    tc::JetSample ref = tc::twisted_cubic(c.params[i]);
    worst1 = std::max(worst1, norm(jet.d1[i] - ref.d1));
    worst4 = std::max(worst4, norm(jet.d4[i]));
  }
  CHECK(worst1 < 1e-6);
  CHECK(worst4 < 1e-6);
}

TEST_CASE("jet of a straight line vanishes beyond first order") {
  SampledCurve c = tc::sample([](double t) { return Vec3{t, 0.0, 0.0}; }, 0.0, 1.0, 51);
  CurveJet jet = estimate_jet(c);
  for (std::size_t i = 0; i < c.size(); ++i) {
    // the x data cancels to stencil rounding, the zero data exactly
    CHECK(norm(jet.d2[i]) < 1e-7);
    CHECK(norm(jet.d3[i]) < 1e-7);
    CHECK(norm(jet.d4[i]) < 1e-7);
    CHECK(jet.d2[i].y == 0.0);
    CHECK(jet.d4[i].z == 0.0);
  }
}

TEST_CASE("third derivative of the helix") {
  // h = 0.005 over one turn
  const std::size_t n = 1257;
  SampledCurve c = tc::sample([](double t) { return tc::helix(t).p; }, 0.0, 6.28, n);
  CurveJet jet = estimate_jet(c);
  double worst = 0.0;
  for (std::size_t i = 3; i + 3 < n; ++i) {
    tc::JetSample ref = tc::helix(c.params[i]);
    worst = std::max(worst, norm(jet.d3[i] - ref.d3));
  }
  CHECK(worst < 1e-4);
}

TEST_CASE("stencils are exact on low-degree polynomials") {
  // cubic data: d1..d3 exact; quartic data: d4 exact (interior)
  SampledCurve cubic = tc::sample(
      [](double t) {
        return Vec3{1.0 + 2.0 * t - t * t * t, 0.5 * t * t + t * t * t, 2.0 - t + 0.25 * t * t * t};
      },
      0.0, 1.0, 17);
  CurveJet jc = estimate_jet(cubic);
  for (std::size_t i = 3; i + 3 < cubic.size(); ++i) {
    double t = cubic.params[i];
    CHECK(norm(jc.d1[i] - Vec3{2.0 - 3.0 * t * t, t + 3.0 * t * t, -1.0 + 0.75 * t * t}) < 1e-10);
    CHECK(norm(jc.d2[i] - Vec3{-6.0 * t, 1.0 + 6.0 * t, 1.5 * t}) < 1e-10);
    CHECK(norm(jc.d3[i] - Vec3{-6.0, 6.0, 1.5}) < 1e-10);
  }

  SampledCurve quartic = tc::sample(
      [](double t) {
        double t4 = t * t * t * t;
        return Vec3{t4, 1.0 + 0.5 * t4, t - t4};
      },
      0.0, 1.0, 17);
  CurveJet jq = estimate_jet(quartic);
  for (std::size_t i = 3; i + 3 < quartic.size(); ++i) {
    CHECK(norm(jq.d4[i] - Vec3{24.0, 12.0, -24.0}) < 1e-10);
  }
  // boundary windows stay exact through degree six, at looser rounding
  CHECK(norm(jq.d4[0] - Vec3{24.0, 12.0, -24.0}) < 1e-8);
  CHECK(norm(jq.d4[quartic.size() - 1] - Vec3{24.0, 12.0, -24.0}) < 1e-8);
}

TEST_CASE("resampling a uniform curve reproduces it") {
  SampledCurve c = tc::twisted_cubic_curve(0.0, 2.0, 64);
  SampledCurve r = resample_uniform(c, 64);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(norm(r.points[i] - c.points[i]) < 1e-12);
  }
}

TEST_CASE("resampling a geometric grid") {
  // geometric spacing on [0,1]
  const std::size_t n = 120;
  double ratio = 1.02;
  std::vector<double> params(n);
  std::vector<Vec3> points(n);
  double step = (ratio - 1.0) / (std::pow(ratio, n - 1) - 1.0);
  double t = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    params[i] = t;
    points[i] = tc::twisted_cubic(t).p;
    t += step;
    step *= ratio;
  }
  params.back() = 1.0;
  points.back() = tc::twisted_cubic(1.0).p;
  SampledCurve c = SampledCurve::make(std::move(params), std::move(points));
  REQUIRE_FALSE(c.uniform_step.has_value());

  SampledCurve r = resample_uniform(c, 200);
  CHECK(norm(r.points.front() - c.points.front()) == 0.0);
  CHECK(norm(r.points.back() - c.points.back()) == 0.0);
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < r.size(); ++i) {
    worst = std::max(worst, norm(r.points[i] - tc::twisted_cubic(r.params[i]).p));
  }
  CHECK(worst < 1e-6);

  CHECK_THROWS_AS(resample_uniform(c, 8), GridTooShort);
}

TEST_CASE("resampling is idempotent on uniform grids") {
  SampledCurve c = tc::helix_curve(80);
  SampledCurve once = resample_uniform(c, 80);
  SampledCurve twice = resample_uniform(once, 80);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(norm(twice.points[i] - once.points[i]) < 1e-12);
  }
}

TEST_CASE("nondegeneracy check") {
  SampledCurve cubic = tc::twisted_cubic_curve(0.0, 1.0, 64);
  auto dets = check_nondegenerate(estimate_jet(cubic));
  for (double d : dets) CHECK(d == doctest::Approx(1.0).epsilon(1e-9));

  SampledCurve helix = tc::helix_curve(400);
  for (double d : check_nondegenerate(estimate_jet(helix))) {
    CHECK(d == doctest::Approx(1.0).epsilon(1e-6));
  }

  SampledCurve planar =
      tc::sample([](double t) { return Vec3{t, t * t, 0.0}; }, 0.0, 1.0, 64);
  CHECK_THROWS_AS(check_nondegenerate(estimate_jet(planar)), DegenerateCurve);
  try {
    check_nondegenerate(estimate_jet(planar));
  } catch (const DegenerateCurve& e) {
    CHECK(e.index() == 0);
    CHECK(std::abs(e.value()) < 1e-12);
  }
}
