#include "affcurve/canonical.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "affcurve/errors.hpp"
#include "affcurve/invariants.hpp"

namespace affcurve {

namespace {

// 4x4 helpers for the augmented exponential
//   M = [[K, e1], [0, 0]],  exp(sigma M) = [[exp(sigma K), integral]],
// whose top-right column is the integral of the first column of exp(u K)
// over [0, sigma]. This gives the curve points without quadrature error.
using Mat4 = std::array<double, 16>;

Mat4 mat4_identity() {
  Mat4 r{};
  r[0] = r[5] = r[10] = r[15] = 1.0;
  return r;
}

Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      double aik = a[4 * i + k];
      if (aik == 0.0) continue;
      for (int j = 0; j < 4; ++j) r[4 * i + j] += aik * b[4 * k + j];
    }
  return r;
}

Mat4 mat4_expm(const Mat4& a) {
  double nrm = 0.0;
  for (double v : a) {
    if (!std::isfinite(v)) throw Overflow();
    nrm += v * v;
  }
  nrm = std::sqrt(nrm);
  if (!std::isfinite(nrm)) {
    double peak = 0.0;
    for (double v : a) peak = std::max(peak, std::abs(v));
    nrm = 4.0 * peak;
  }

  int squarings = nrm > 0.5 ? static_cast<int>(std::ceil(std::log2(nrm / 0.5))) : 0;
  double scale = std::ldexp(1.0, -squarings);
  Mat4 s{};
  for (int i = 0; i < 16; ++i) s[i] = a[i] * scale;

  Mat4 sum = mat4_identity();
  Mat4 term = mat4_identity();
  for (int k = 1; k <= 16; ++k) {
    term = mat4_mul(term, s);
    for (double& v : term) v *= 1.0 / k;
    for (int i = 0; i < 16; ++i) sum[i] += term[i];
  }
  for (int i = 0; i < squarings; ++i) sum = mat4_mul(sum, sum);
  for (double v : sum) {
    if (!std::isfinite(v)) throw Overflow();
  }
  return sum;
}

double max_abs_diff(const Mat3& a, const Mat3& b) {
  double worst = 0.0;
  for (int i = 0; i < 9; ++i) worst = std::max(worst, std::abs(a.m[i] - b.m[i]));
  return worst;
}

}  // namespace

FrenetMatrix FrenetMatrix::make(double chi1, double chi2) {
  FrenetMatrix k{chi1, chi2, Mat3{}};
  k.matrix(0, 2) = chi1;
  k.matrix(1, 0) = 1.0;
  k.matrix(1, 2) = -chi2;
  k.matrix(2, 1) = 1.0;
  return k;
}

std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::kI: return "I";
    case CaseLabel::kII: return "II";
    case CaseLabel::kIII: return "III";
    case CaseLabel::kIV: return "IV";
    case CaseLabel::kV: return "V";
    case CaseLabel::kVIpp: return "VI-pp";
    case CaseLabel::kVInn: return "VI-nn";
    case CaseLabel::kVInp: return "VI-np";
    case CaseLabel::kVIpn: return "VI-pn";
  }
  return "?";
}

CaseLabel classify_case(double chi1, double chi2, double eps) {
  if (eps < 0.0) throw Error("classification threshold must be nonnegative");
  bool z1 = std::abs(chi1) <= eps;
  bool z2 = std::abs(chi2) <= eps;
  if (z1 && z2) return CaseLabel::kI;
  if (z1) return chi2 > 0.0 ? CaseLabel::kII : CaseLabel::kIII;
  if (z2) return chi1 > 0.0 ? CaseLabel::kIV : CaseLabel::kV;
  if (chi1 > 0.0) return chi2 > 0.0 ? CaseLabel::kVIpp : CaseLabel::kVIpn;
  return chi2 > 0.0 ? CaseLabel::kVInp : CaseLabel::kVInn;
}

Mat3 closed_form_frame_case1(double sigma) {
  Mat3 f = Mat3::identity();
  f(1, 0) = sigma;
  f(2, 0) = 0.5 * sigma * sigma;
  f(2, 1) = sigma;
  return f;
}

Mat3 closed_form_frame_case2(double chi2, double sigma) {
  if (!(chi2 > 0.0)) throw Error("case II needs chi2 > 0");
  double w = std::sqrt(chi2);
  double s = std::sin(w * sigma);
  double c = std::cos(w * sigma);
  Mat3 f;
  f(0, 0) = 1.0;
  f(1, 0) = s / w;
  f(2, 0) = (1.0 - c) / chi2;
  f(1, 1) = c;
  f(2, 1) = s / w;
  f(1, 2) = -w * s;
  f(2, 2) = c;
  return f;
}

Mat3 closed_form_frame_case3(double chi2, double sigma) {
  if (!(chi2 < 0.0)) throw Error("case III needs chi2 < 0");
  double a = -chi2;  // |chi2|
  double w = std::sqrt(a);
  double s = std::sinh(w * sigma);
  double c = std::cosh(w * sigma);
  Mat3 f;
  f(0, 0) = 1.0;
  f(1, 0) = s / w;
  f(2, 0) = (c - 1.0) / a;
  f(1, 1) = c;
  f(2, 1) = s / w;
  f(1, 2) = w * s;
  f(2, 2) = c;
  return f;
}

SampledCurve generate_canonical(double chi1, double chi2, double sigma_max, std::size_t n) {
  if (!(sigma_max > 0.0)) throw Error("sigma_max must be positive");
  if (n < kMinSamples) throw GridTooShort(n, kMinSamples);

  FrenetMatrix k = FrenetMatrix::make(chi1, chi2);
  Mat4 gen{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) gen[4 * r + c] = k.matrix(r, c);
  gen[3] = 1.0;  // (0,3): picks out the first frame column in the integral block

  std::vector<double> params(n);
  std::vector<Vec3> points(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sigma = sigma_max * static_cast<double>(i) / static_cast<double>(n - 1);
    params[i] = sigma;

    Mat4 scaled{};
    for (int j = 0; j < 16; ++j) scaled[j] = gen[j] * sigma;
    Mat4 e = mat4_expm(scaled);
    points[i] = {e[3], e[7], e[11]};

    if (chi1 == 0.0) {
      // frame cross-check for the closed-form families
      Mat3 frame;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) frame(r, c) = e[4 * r + c];
      Mat3 ref = chi2 == 0.0   ? closed_form_frame_case1(sigma)
                 : chi2 > 0.0  ? closed_form_frame_case2(chi2, sigma)
                               : closed_form_frame_case3(chi2, sigma);
      double scale = std::max(1.0, frobenius_norm(ref));
      if (max_abs_diff(frame, ref) > 1e-9 * scale) {
        throw std::logic_error("exponential disagrees with the closed-form frame");
      }
    }
  }
  params.back() = sigma_max;
  return SampledCurve::make(std::move(params), std::move(points));
}

std::pair<double, double> roundtrip_constants(double chi1, double chi2, double sigma_max,
                                              std::size_t n) {
  SampledCurve curve = generate_canonical(chi1, chi2, sigma_max, n);
  AffineSignature sig = signature(curve, n);
  double m1 = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    m1 += sig.chi1[i];
    m2 += sig.chi2[i];
  }
  return {m1 / static_cast<double>(sig.size()), m2 / static_cast<double>(sig.size())};
}

}  // namespace affcurve
