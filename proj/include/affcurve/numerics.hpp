#pragma once

#include <span>
#include <vector>

#include "affcurve/linalg.hpp"

namespace affcurve {

/// Cubic Hermite interpolant with caller-supplied node slopes. Queries
/// outside the node range clamp to the end values.
class CubicHermite {
 public:
  CubicHermite(std::vector<double> x, std::vector<double> y, std::vector<double> slope);

  double operator()(double xq) const;

 protected:
  CubicHermite() = default;
  std::vector<double> x_, y_, slope_;
};

/// Monotone cubic Hermite interpolant (Fritsch-Carlson slopes). Shape
/// preserving on monotone data, C1 everywhere.
class MonotoneCubic : public CubicHermite {
 public:
  MonotoneCubic(std::vector<double> x, std::vector<double> y);
};

/// Cumulative integral of uniformly sampled values, one value per sample,
/// starting at 0. Interior intervals use the symmetric four-point rule
/// (the average of the two local Simpson parabolas); the end intervals use
/// the one-sided four-point rule. Exact through cubics, and the error
/// carries no odd/even parity artifacts.
std::vector<double> cumulative_simpson(std::span<const double> f, double step);
std::vector<Vec3> cumulative_simpson(std::span<const Vec3> f, double step, const Vec3& start);

}  // namespace affcurve
