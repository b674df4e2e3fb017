#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "affcurve/affine_map.hpp"
#include "affcurve/canonical.hpp"
#include "affcurve/errors.hpp"
#include "affcurve/linalg.hpp"

#include "analytic_curves.hpp"

using namespace affcurve;
namespace tc = testcurves;

TEST_CASE("structure matrix layout and spectrum") {
  FrenetMatrix k = FrenetMatrix::make(1.5, -0.5);
  CHECK(k.matrix(0, 2) == 1.5);
  CHECK(k.matrix(1, 2) == 0.5);
  CHECK(k.matrix(1, 0) == 1.0);
  CHECK(k.matrix(2, 1) == 1.0);
  CHECK(k.matrix.trace() == 0.0);

  // roots of x^3 + chi2 x - chi1 match the spectrum recovered from the
  // matrix itself (coefficients via trace/minor identities)
  Lcg64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    double chi1 = rng.next_symmetric(3.0);
    double chi2 = rng.next_symmetric(3.0);
    Mat3 m = FrenetMatrix::make(chi1, chi2).matrix;

    Mat3 m2 = m * m;
    double c1 = 0.5 * (m.trace() * m.trace() - m2.trace());  // sum of 2x2 principal minors
    double c0 = -m.det();
    auto direct = cubic_roots(chi2, -chi1);
    auto via_matrix = cubic_roots(c1, c0);

    auto key = [](const std::complex<double>& z) {
      return std::pair<double, double>{z.real(), z.imag()};
    };
    std::sort(direct.begin(), direct.end(),
              [&](auto a, auto b) { return key(a) < key(b); });
    std::sort(via_matrix.begin(), via_matrix.end(),
              [&](auto a, auto b) { return key(a) < key(b); });
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(direct[i] - via_matrix[i]) < 1e-8);
    }
  }
}

TEST_CASE("case classification") {
  CHECK(classify_case(0.0, 0.0) == CaseLabel::kI);
  CHECK(classify_case(0.0, 2.5) == CaseLabel::kII);
  CHECK(classify_case(0.0, -1.0) == CaseLabel::kIII);
  CHECK(classify_case(1.0, 0.0) == CaseLabel::kIV);
  CHECK(classify_case(-1.0, 0.0) == CaseLabel::kV);
  CHECK(classify_case(1.0, 3.0) == CaseLabel::kVIpp);
  CHECK(classify_case(-1.0, 3.0) == CaseLabel::kVInp);
  CHECK(classify_case(1.0, -3.0) == CaseLabel::kVIpn);
  CHECK(classify_case(-1.0, -3.0) == CaseLabel::kVInn);
  // values inside the zero threshold collapse to zero
  CHECK(classify_case(5e-7, -5e-7) == CaseLabel::kI);
  CHECK(classify_case(5e-7, 1.0) == CaseLabel::kII);
  CHECK(to_string(CaseLabel::kVInp) == "VI-np");
  CHECK_THROWS_AS(classify_case(0.0, 0.0, -1.0), Error);
}

TEST_CASE("closed forms agree with the exponential") {
  for (double sigma = 0.0; sigma <= 3.0; sigma += 0.1) {
    Mat3 e1 = expm(sigma * FrenetMatrix::make(0.0, 0.0).matrix);
    Mat3 w1 = closed_form_frame_case1(sigma);
    for (int k = 0; k < 9; ++k) CHECK(std::abs(e1.m[k] - w1.m[k]) < 1e-9);

    for (double chi2 : {0.5, 1.0, 2.5}) {
      Mat3 e2 = expm(sigma * FrenetMatrix::make(0.0, chi2).matrix);
      Mat3 w2 = closed_form_frame_case2(chi2, sigma);
      for (int k = 0; k < 9; ++k) CHECK(std::abs(e2.m[k] - w2.m[k]) < 1e-9);
    }
    for (double chi2 : {-0.5, -1.0}) {
      Mat3 e3 = expm(sigma * FrenetMatrix::make(0.0, chi2).matrix);
      Mat3 w3 = closed_form_frame_case3(chi2, sigma);
      for (int k = 0; k < 9; ++k) CHECK(std::abs(e3.m[k] - w3.m[k]) < 1e-9 * std::max(1.0, std::abs(w3.m[k])));
    }
  }
}

TEST_CASE("canonical curve of each closed-form family") {
  SampledCurve c1 = generate_canonical(0.0, 0.0, 1.0, 101);
  for (std::size_t i = 0; i < c1.size(); ++i) {
    double s = c1.params[i];
    CHECK(norm(c1.points[i] - Vec3{s, s * s / 2.0, s * s * s / 6.0}) < 1e-12);
  }

  SampledCurve c2 = generate_canonical(0.0, 1.0, 3.0, 101);
  for (std::size_t i = 0; i < c2.size(); ++i) {
    double s = c2.params[i];
    CHECK(norm(c2.points[i] - Vec3{s, 1.0 - std::cos(s), s - std::sin(s)}) < 1e-9);
  }

  SampledCurve c3 = generate_canonical(0.0, -1.0, 3.0, 101);
  for (std::size_t i = 0; i < c3.size(); ++i) {
    double s = c3.params[i];
    CHECK(norm(c3.points[i] - Vec3{s, std::cosh(s) - 1.0, std::sinh(s) - s}) < 1e-9);
  }
}

TEST_CASE("frame columns satisfy the shift structure") {
  // column 2 = d/дsigma column 1, column 3 = d/dsigma column 2
  const double h = 1e-3;
  for (auto [chi1, chi2] : {std::pair{0.0, 1.0}, {1.0, -1.0}, {-2.0, 0.5}}) {
    Mat3 k = FrenetMatrix::make(chi1, chi2).matrix;
    for (double sigma : {0.2, 1.0, 2.4}) {
      Mat3 fp = expm((sigma + h) * k);
      Mat3 fm = expm((sigma - h) * k);
      Mat3 f = expm(sigma * k);
      for (int col : {0, 1}) {
        Vec3 fd = (fp.column(col) - fm.column(col)) / (2.0 * h);
        CHECK(norm(fd - f.column(col + 1)) < 1e-6 * std::max(1.0, norm(f.column(col + 1))));
      }
    }
  }
}

TEST_CASE("first frame column solves the natural equation") {
  // Y'''' + chi2 Y'' - chi1 Y' = 0 for Y = first column of exp(sigma K)
  const double chi1 = 1.0, chi2 = -1.0;
  Mat3 k = FrenetMatrix::make(chi1, chi2).matrix;
  const std::size_t n = 201;
  SampledCurve col1 = tc::sample(
      [&](double s) { return expm(s * k).column(0); }, 0.0, 3.0, n);
  CurveJet jet = estimate_jet(col1);
  double worst = 0.0;
  for (std::size_t i = 3; i + 3 < n; ++i) {
    Vec3 res = jet.d4[i] + chi2 * jet.d2[i] - chi1 * jet.d1[i];
    worst = std::max(worst, norm(res));
  }
  CHECK(worst < 1e-4);
}

TEST_CASE("roundtrip of the generating constants") {
  auto [a1, a2] = roundtrip_constants(0.0, 0.0, 2.5, 400);
  CHECK(std::abs(a1) < 1e-3);
  CHECK(std::abs(a2) < 1e-3);

  auto [b1, b2] = roundtrip_constants(0.0, 1.0, 2.5, 400);
  CHECK(std::abs(b1) < 1e-3);
  CHECK(b2 == doctest::Approx(1.0).epsilon(1e-3));

  auto [c1, c2] = roundtrip_constants(2.0, -1.0, 2.5, 400);
  CHECK(c1 == doctest::Approx(2.0).epsilon(1e-2));
  CHECK(c2 == doctest::Approx(-1.0).epsilon(1e-2));
}

TEST_CASE("canonical generation rejects bad arguments and overflow") {
  CHECK_THROWS_AS(generate_canonical(0.0, 0.0, -1.0, 100), Error);
  CHECK_THROWS_AS(generate_canonical(0.0, 0.0, 1.0, 8), GridTooShort);
  CHECK_THROWS_AS(generate_canonical(5.0, -5.0, 400.0, 16), Overflow);
}
