#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "affcurve/linalg.hpp"

namespace affcurve {

/// Default absolute threshold below which det(c',c'',c''') counts as
/// degenerate.
inline constexpr double kDefaultEpsDet = 1e-9;

/// Minimum grid length: the differentiation stencils need nine samples.
inline constexpr std::size_t kMinSamples = 9;

/// Discretely sampled parametrized space curve. params is strictly
/// increasing; uniform_step is set iff the grid is uniform to fp noise.
struct SampledCurve {
  std::vector<double> params;
  std::vector<Vec3> points;
  std::optional<double> uniform_step;

  /// Validates lengths, monotonicity and finiteness; detects uniformity.
  static SampledCurve make(std::vector<double> params, std::vector<Vec3> points);

  std::size_t size() const { return params.size(); }
  double front_param() const { return params.front(); }
  double back_param() const { return params.back(); }
};

/// Per-sample derivative estimates c', c'', c''', c'''' on the curve's grid.
struct CurveJet {
  std::vector<double> params;
  std::vector<Vec3> d1, d2, d3, d4;

  std::size_t size() const { return params.size(); }
};

/// Finite-difference jet on a uniform grid: 7-point central stencils in the
/// interior, 9-point minimum-norm stencils (exact through degree six) within
/// three samples of each boundary.
CurveJet estimate_jet(const SampledCurve& curve);

/// Resample onto a uniform n-point grid over the same parameter range by
/// monotone cubic Hermite interpolation per coordinate. Endpoints are
/// reproduced exactly.
SampledCurve resample_uniform(const SampledCurve& curve, std::size_t n);

/// det(c',c'',c''') at every sample. Throws DegenerateCurve at the first
/// sample where the value is <= eps (the positive convention is enforced,
/// not the absolute value).
std::vector<double> check_nondegenerate(const CurveJet& jet, double eps = kDefaultEpsDet);

}  // namespace affcurve
