#pragma once

#include <cstddef>
#include <string_view>
#include <utility>

#include "affcurve/curve.hpp"
#include "affcurve/linalg.hpp"

namespace affcurve {

/// Constant-coefficient structure matrix K = [[0,0,chi1],[1,0,-chi2],[0,1,0]].
/// Its eigenvalues solve x^3 + chi2 x - chi1 = 0.
struct FrenetMatrix {
  double chi1 = 0.0;
  double chi2 = 0.0;
  Mat3 matrix;

  static FrenetMatrix make(double chi1, double chi2);
};

/// The six constant-curvature families, keyed by the sign pattern of
/// (chi1, chi2). The mixed family carries its sign pattern in the label.
enum class CaseLabel {
  kI,     // chi1 = chi2 = 0
  kII,    // chi1 = 0, chi2 > 0
  kIII,   // chi1 = 0, chi2 < 0
  kIV,    // chi1 > 0, chi2 = 0
  kV,     // chi1 < 0, chi2 = 0
  kVIpp,  // chi1 > 0, chi2 > 0
  kVInn,  // chi1 < 0, chi2 < 0
  kVInp,  // chi1 < 0, chi2 > 0
  kVIpn,  // chi1 > 0, chi2 < 0
};

std::string_view to_string(CaseLabel label);

/// Sign classification with zero threshold eps (|chi| <= eps counts as zero).
CaseLabel classify_case(double chi1, double chi2, double eps = 1e-6);

/// Closed-form frames exp(sigma K) for the first three families; used as an
/// independent algebraic route against the exponential.
Mat3 closed_form_frame_case1(double sigma);
Mat3 closed_form_frame_case2(double chi2, double sigma);  // chi2 > 0
Mat3 closed_form_frame_case3(double chi2, double sigma);  // chi2 < 0

/// Constant-curvature canonical curve: c'(sigma) is the first column of
/// exp(sigma K) and c(0) = 0, sampled on a uniform n-point grid over
/// [0, sigma_max]. The point integral is evaluated exactly through an
/// augmented 4x4 exponential. For the first three families the frame is
/// cross-checked against the closed forms to 1e-9.
SampledCurve generate_canonical(double chi1, double chi2, double sigma_max, std::size_t n);

/// generate_canonical followed by signature; returns the mean of the
/// recovered chi arrays.
std::pair<double, double> roundtrip_constants(double chi1, double chi2, double sigma_max,
                                              std::size_t n);

}  // namespace affcurve
