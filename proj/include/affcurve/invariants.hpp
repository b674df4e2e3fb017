#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "affcurve/curve.hpp"
#include "affcurve/linalg.hpp"

namespace affcurve {

/// Default arc-length grid length for the signature pipeline.
inline constexpr std::size_t kDefaultSignatureSamples = 200;

/// Frame (c', c'', c''') / det(c', c'', c''')^(1/3), an element of the
/// determinant-one matrix group.
struct UnimodularFrame {
  Mat3 matrix;
};

/// Coefficient of dt in the pullback of the Maurer-Cartan form along the
/// unimodular frame. Trace-free, with ones on the subdiagonal.
struct PullbackMatrix {
  Mat3 matrix;
};

/// Cumulative special affine arc length sigma(t) over the curve's grid.
struct ArcLengthProfile {
  std::vector<double> params;
  std::vector<double> sigma;
  double total = 0.0;
};

/// The invariant pair (chi1, chi2) sampled on a uniform arc-length grid.
struct AffineSignature {
  std::vector<double> sigma;
  std::vector<double> chi1;
  std::vector<double> chi2;

  std::size_t size() const { return sigma.size(); }
  double total() const { return sigma.empty() ? 0.0 : sigma.back(); }
};

UnimodularFrame unimodular_frame(const CurveJet& jet, std::size_t index,
                                 double eps_det = kDefaultEpsDet);

/// Entries are determinant ratios of the jet:
///   diag(-D4/3D, -D4/3D, 2 D4/3D) plus det(c'',c''',c'''')/D at (0,2),
///   -det(c',c''',c'''')/D at (1,2) and ones at (1,0), (2,1),
/// where D = det(c',c'',c''') and D4 = det(c',c'',c'''').
PullbackMatrix maurer_cartan_pullback(const CurveJet& jet, std::size_t index,
                                      double eps_det = kDefaultEpsDet);

/// Cumulative integral of det(c',c'',c''')^(1/6); strictly increasing,
/// sigma[0] = 0.
ArcLengthProfile arc_length_profile(const CurveJet& jet, double eps_det = kDefaultEpsDet);

/// Resample the curve at n uniform arc-length values on [0, total]: invert
/// sigma(t) by monotone cubic interpolation, then evaluate the coordinates the
/// same way. When the requested grid already coincides with the profile's
/// grid to fp noise the samples are passed through unchanged. The output
/// satisfies det(g', g'', g''') = 1 up to pipeline noise.
SampledCurve reparametrize(const SampledCurve& curve, const ArcLengthProfile& profile,
                           std::size_t n);

/// Full pipeline: jet, arc length, reparametrize to n samples, jet again,
/// then chi1 = det(d2,d3,d4) and chi2 = det(d1,d3,d4) per sample.
AffineSignature signature(const SampledCurve& curve, std::size_t n,
                          double eps_det = kDefaultEpsDet);

/// Same with n = max(200, curve length).
AffineSignature signature(const SampledCurve& curve);

/// The two conserved quantities of a trajectory of mass m, evaluated on an
/// arc-length jet: (m^3 det(d2,d3,d4), m^3 det(d1,d3,d4)). With m = 1 these
/// are (chi1, chi2) at the sample.
std::pair<double, double> conservation_laws(const CurveJet& jet, std::size_t index, double mass);

}  // namespace affcurve
