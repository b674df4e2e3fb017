#include "affcurve/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "affcurve/errors.hpp"

namespace affcurve {

namespace {

double sign(double v) { return (v > 0.0) - (v < 0.0); }

// One-sided slope estimate at an end node, with the Fritsch-Carlson clamp.
double edge_slope(double h0, double h1, double d0, double d1) {
  double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
  if (sign(m) != sign(d0)) {
    m = 0.0;
  } else if (sign(d0) != sign(d1) && std::abs(m) > 3.0 * std::abs(d0)) {
    m = 3.0 * d0;
  }
  return m;
}

}  // namespace

CubicHermite::CubicHermite(std::vector<double> x, std::vector<double> y,
                           std::vector<double> slope)
    : x_(std::move(x)), y_(std::move(y)), slope_(std::move(slope)) {
  const std::size_t n = x_.size();
  if (n < 2 || y_.size() != n || slope_.size() != n) {
    throw Error("interpolation needs at least two nodes and matching arrays");
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(x_[i + 1] > x_[i])) throw Error("interpolation abscissae must be strictly increasing");
  }
}

double CubicHermite::operator()(double xq) const {
  const std::size_t n = x_.size();
  if (xq <= x_.front()) return y_.front();
  if (xq >= x_.back()) return y_.back();

  std::size_t k = static_cast<std::size_t>(
      std::upper_bound(x_.begin(), x_.end(), xq) - x_.begin() - 1);
  if (k >= n - 1) k = n - 2;

  double h = x_[k + 1] - x_[k];
  double t = (xq - x_[k]) / h;
  double t2 = t * t;
  double t3 = t2 * t;
  double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  double h10 = t3 - 2.0 * t2 + t;
  double h01 = -2.0 * t3 + 3.0 * t2;
  double h11 = t3 - t2;
  return h00 * y_[k] + h * h10 * slope_[k] + h01 * y_[k + 1] + h * h11 * slope_[k + 1];
}

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) {
    throw Error("interpolation needs at least two nodes and matching arrays");
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(x[i + 1] > x[i])) throw Error("interpolation abscissae must be strictly increasing");
  }

  std::vector<double> slope(n);
  if (n == 2) {
    double d = (y[1] - y[0]) / (x[1] - x[0]);
    slope[0] = slope[1] = d;
  } else {
    std::vector<double> h(n - 1), d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      h[i] = x[i + 1] - x[i];
      d[i] = (y[i + 1] - y[i]) / h[i];
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (d[i - 1] * d[i] <= 0.0) {
        slope[i] = 0.0;
      } else {
        // weighted harmonic mean of adjacent secants
        double w1 = 2.0 * h[i] + h[i - 1];
        double w2 = h[i] + 2.0 * h[i - 1];
        slope[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
      }
    }
    slope[0] = edge_slope(h[0], h[1], d[0], d[1]);
    slope[n - 1] = edge_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
  }

  x_ = std::move(x);
  y_ = std::move(y);
  slope_ = std::move(slope);
}

namespace {

// Per-interval increment weights; see header. The edge rules integrate the
// cubic through the four nearest samples, so the whole rule stays exact
// through cubic integrands.
template <typename T>
std::vector<T> cumulative_impl(std::span<const T> f, double step, T acc) {
  const std::size_t n = f.size();
  if (n < 4) throw Error("cumulative integration needs at least four samples");

  std::vector<T> out(n);
  out[0] = acc;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    T inc;
    if (k == 0) {
      inc = (step / 24.0) * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + 1.0 * f[3]);
    } else if (k == n - 2) {
      inc = (step / 24.0) *
            (1.0 * f[n - 4] - 5.0 * f[n - 3] + 19.0 * f[n - 2] + 9.0 * f[n - 1]);
    } else {
      inc = (step / 24.0) * (-1.0 * f[k - 1] + 13.0 * f[k] + 13.0 * f[k + 1] - 1.0 * f[k + 2]);
    }
    acc += inc;
    out[k + 1] = acc;
  }
  return out;
}

}  // namespace

std::vector<double> cumulative_simpson(std::span<const double> f, double step) {
  return cumulative_impl(f, step, 0.0);
}

std::vector<Vec3> cumulative_simpson(std::span<const Vec3> f, double step, const Vec3& start) {
  return cumulative_impl(f, step, start);
}

}  // namespace affcurve
