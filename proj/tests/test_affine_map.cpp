#include <cmath>

#include <doctest.h>

#include "affcurve/affine_map.hpp"
#include "affcurve/curve.hpp"
#include "affcurve/errors.hpp"
#include "affcurve/invariants.hpp"

#include "analytic_curves.hpp"

using namespace affcurve;
namespace tc = testcurves;

namespace {

double map_distance(const SpecialAffineMap& a, const SpecialAffineMap& b) {
  double worst = 0.0;
  for (int i = 0; i < 9; ++i) worst = std::max(worst, std::abs(a.B.m[i] - b.B.m[i]));
  worst = std::max(worst, norm(a.tau - b.tau));
  return worst;
}

}  // namespace

TEST_CASE("apply leaves the grid unchanged") {
  SampledCurve c = tc::twisted_cubic_curve(0.0, 1.0, 32);
  SampledCurve img = apply(SpecialAffineMap::identity(), c);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(img.params[i] == c.params[i]);
    CHECK(norm(img.points[i] - c.points[i]) == 0.0);
  }

  SpecialAffineMap shift{Mat3::identity(), {1.0, 2.0, 3.0}};
  SampledCurve moved = apply(shift, c);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(norm(moved.points[i] - c.points[i] - Vec3{1.0, 2.0, 3.0}) < 1e-15);
  }
}

TEST_CASE("group axioms") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    SpecialAffineMap m = random_map(seed);
    SpecialAffineMap n = random_map(seed + 1000);

    CHECK(map_distance(compose(m, SpecialAffineMap::identity()), m) < 1e-15);
    CHECK(map_distance(compose(SpecialAffineMap::identity(), m), m) < 1e-15);
    CHECK(map_distance(compose(m, invert(m)), SpecialAffineMap::identity()) < 1e-12);
    CHECK(map_distance(compose(invert(m), m), SpecialAffineMap::identity()) < 1e-12);

    // composition agrees with sequential application
    Vec3 p{0.3, -1.2, 0.7};
    CHECK(norm(apply(compose(m, n), p) - apply(m, apply(n, p))) < 1e-12);
  }
}

TEST_CASE("composition on curves") {
  SampledCurve c = tc::helix_curve(64);
  SpecialAffineMap a = random_map(7);
  SpecialAffineMap b = random_map(8);
  SampledCurve lhs = apply(compose(a, b), c);
  SampledCurve rhs = apply(a, apply(b, c));
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(norm(lhs.points[i] - rhs.points[i]) < 1e-12);
  }
}

TEST_CASE("inverting a pure translation negates it") {
  SpecialAffineMap shift{Mat3::identity(), {1.0, -2.0, 0.5}};
  SpecialAffineMap inv = invert(shift);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(inv.B(r, c) == (r == c ? 1.0 : 0.0));
  CHECK(inv.tau.x == -1.0);
  CHECK(inv.tau.y == 2.0);
  CHECK(inv.tau.z == -0.5);

  SpecialAffineMap ident = invert(SpecialAffineMap::identity());
  CHECK(norm(ident.tau) == 0.0);
  CHECK(ident.B.det() == 1.0);
}

TEST_CASE("shear leaves the helix signature unchanged") {
  SpecialAffineMap shear;
  shear.B(0, 1) = 1.0;  // unit shear, det = 1
  SampledCurve helix = tc::helix_curve(400);
  AffineSignature base = signature(helix, 400);
  AffineSignature sheared = signature(apply(shear, helix), 400);
  for (std::size_t i = 0; i < base.size(); ++i) {
    CHECK(std::abs(base.chi1[i] - sheared.chi1[i]) < 1e-3);
    CHECK(std::abs(base.chi2[i] - sheared.chi2[i]) < 1e-3);
  }
}

TEST_CASE("random maps are deterministic and unimodular") {
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 123456789ULL}) {
    SpecialAffineMap a = random_map(seed);
    SpecialAffineMap b = random_map(seed);
    CHECK(map_distance(a, b) == 0.0);
    CHECK(a.B.det() == doctest::Approx(1.0).epsilon(1e-12));
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CHECK(random_map(seed, 3.0).B.det() == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(random_map(1, -2.0), Error);
}

TEST_CASE("applying a map preserves the jet determinant") {
  SampledCurve c = tc::helix_curve(200);
  auto base = check_nondegenerate(estimate_jet(c));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto mapped = check_nondegenerate(estimate_jet(apply(random_map(seed), c)));
    for (std::size_t i = 0; i < base.size(); ++i) {
      CHECK(mapped[i] == doctest::Approx(base[i]).epsilon(1e-6));
    }
  }
}

TEST_CASE("signature of the twisted cubic is invariant and zero") {
  SampledCurve c = tc::twisted_cubic_curve(0.0, 3.0, 400);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    SampledCurve img = apply(random_map(seed), c);
    AffineSignature sig = signature(img, img.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      worst = std::max({worst, std::abs(sig.chi1[i]), std::abs(sig.chi2[i])});
    }
    CHECK(worst < 1e-3);
  }
}
