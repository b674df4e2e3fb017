#include "affcurve/curve.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "affcurve/errors.hpp"
#include "affcurve/numerics.hpp"

namespace affcurve {

namespace {

// Interior stencils: 7-point central, offsets -3..3, exact through degree 6.
constexpr double kCentral[4][7] = {
    {-1.0 / 60, 3.0 / 20, -3.0 / 4, 0.0, 3.0 / 4, -3.0 / 20, 1.0 / 60},
    {1.0 / 90, -3.0 / 20, 3.0 / 2, -49.0 / 18, 3.0 / 2, -3.0 / 20, 1.0 / 90},
    {1.0 / 8, -1.0, 13.0 / 8, 0.0, -13.0 / 8, 1.0, -1.0 / 8},
    {-1.0 / 6, 2.0, -13.0 / 2, 28.0 / 3, -13.0 / 2, 2.0, -1.0 / 6},
};

// Boundary stencils: 9- or 10-point windows anchored at the grid edge,
// evaluated at offset i = 0, 1, 2 from the edge. Minimum-norm weights subject
// to exactness through degree 6; the extra window width keeps the rounding
// amplification of the third and fourth derivatives an order of magnitude
// below the interpolatory 7-point one-sided weights. Right-edge weights
// follow by reversal, with a sign flip for odd orders. The 9-point table
// serves minimum-length grids.
constexpr double kEdge9[3][4][9] = {
    {
        {-136493.0 / 64350, 498863.0 / 128700, -237103.0 / 128700, -12839.0 / 11700,
         9754.0 / 6435, 69341.0 / 128700, -207433.0 / 128700, 118433.0 / 128700,
         -11483.0 / 64350},
        {624407.0 / 193050, -879818.0 / 96525, 2703277.0 / 386100, 267979.0 / 96525,
         -207527.0 / 38610, -134996.0 / 96525, 2127277.0 / 386100, -317093.0 / 96525,
         11437.0 / 17550},
        {-15113.0 / 4290, 206281.0 / 17160, -24952.0 / 2145, -53483.0 / 17160, 368.0 / 39,
         27787.0 / 17160, -20632.0 / 2145, 7987.0 / 1320, -5303.0 / 4290},
        {308.0 / 117, -2339.0 / 234, 1298.0 / 117, 451.0 / 234, -1108.0 / 117, -197.0 / 234,
         1154.0 / 117, -119.0 / 18, 164.0 / 117},
    },
    {
        {-1277.0 / 4950, -89719.0 / 128700, 30671.0 / 32175, 26821.0 / 64350, -3272.0 / 6435,
         -2183.0 / 11700, 16301.0 / 32175, -17987.0 / 64350, 3409.0 / 64350},
        {161297.0 / 193050, -126728.0 / 96525, -232.0 / 8775, 202261.0 / 386100, 3074.0 / 19305,
         -35557.0 / 193050, -6602.0 / 96525, 37813.0 / 386100, -4753.0 / 193050},
        {-6247.0 / 4290, 74039.0 / 17160, -7088.0 / 2145, -25477.0 / 17160, 94.0 / 39,
         14213.0 / 17160, -5078.0 / 2145, 22409.0 / 17160, -1057.0 / 4290},
        {904.0 / 585, -6559.0 / 1170, 3397.0 / 585, 1577.0 / 1170, -562.0 / 117, -853.0 / 1170,
         2857.0 / 585, -3589.0 / 1170, 28.0 / 45},
    },
    {
        {4471.0 / 64350, -41003.0 / 64350, 8351.0 / 128700, 25789.0 / 64350, 1357.0 / 6435,
         -4601.0 / 64350, -12379.0 / 128700, 437.0 / 5850, -1019.0 / 64350},
        {797.0 / 193050, 27683.0 / 35100, -434483.0 / 386100, -144839.0 / 386100,
         30073.0 / 38610, 118411.0 / 386100, -247283.0 / 386100, 123163.0 / 386100,
         -10903.0 / 193050},
        {-491.0 / 1430, 2467.0 / 5720, 336.0 / 715, -2281.0 / 5720, -8.0 / 13, 1049.0 / 5720,
         456.0 / 715, -2643.0 / 5720, 139.0 / 1430},
        {424.0 / 585, -2749.0 / 1170, 1162.0 / 585, 977.0 / 1170, -172.0 / 117, -643.0 / 1170,
         802.0 / 585, -769.0 / 1170, 64.0 / 585},
    },
};

constexpr double kEdge10[3][4][10] = {
    {
        {-113183.0 / 57200, 542989.0 / 171600, -4373.0 / 6600, -23717.0 / 17160, 8081.0 / 21450,
         23773.0 / 21450, -16127.0 / 85800, -92071.0 / 85800, 28081.0 / 34320, -10471.0 / 57200},
        {29701.0 / 10725, -436897.0 / 64350, 81023.0 / 25740, 39752.0 / 10725, -106441.0 / 64350,
         -8066.0 / 2475, 36833.0 / 42900, 20762.0 / 6435, -83786.0 / 32175, 12827.0 / 21450},
        {-62643.0 / 22880, 185243.0 / 22880, -58673.0 / 11440, -10723.0 / 2288, 9027.0 / 2860,
         1047.0 / 220, -20239.0 / 11440, -56497.0 / 11440, 1499.0 / 352, -23091.0 / 22880},
        {959.0 / 520, -1889.0 / 312, 3559.0 / 780, 911.0 / 260, -617.0 / 195, -779.0 / 195,
         103.0 / 52, 3451.0 / 780, -6421.0 / 1560, 527.0 / 520},
    },
    {
        {-17257.0 / 57200, -82117.0 / 171600, 50711.0 / 85800, 1311.0 / 2600, -227.0 / 1430,
         -7753.0 / 21450, 1987.0 / 28600, 28529.0 / 85800, -43421.0 / 171600, 643.0 / 11440},
        {35689.0 / 42900, -166649.0 / 128700, -145.0 / 2574, 22783.0 / 42900, 6052.0 / 32175,
         -12781.0 / 64350, -747.0 / 7150, 3821.0 / 25740, -6419.0 / 128700, 199.0 / 42900},
        {-28653.0 / 22880, 75397.0 / 22880, -18479.0 / 11440, -21649.0 / 11440, 2229.0 / 2860,
         4701.0 / 2860, -3761.0 / 11440, -17711.0 / 11440, 27013.0 / 22880, -5997.0 / 22880},
        {599.0 / 520, -5677.0 / 1560, 1987.0 / 780, 111.0 / 52, -323.0 / 195, -449.0 / 195,
         19.0 / 20, 1903.0 / 780, -665.0 / 312, 263.0 / 520},
    },
    {
        {2047.0 / 28600, -18523.0 / 28600, 294.0 / 3575, 5671.0 / 14300, 694.0 / 3575,
         -677.0 / 10725, -269.0 / 3575, 59.0 / 1300, -101.0 / 85800, -7.0 / 2600},
        {10111.0 / 171600, 1853.0 / 3600, -34559.0 / 51480, -13863.0 / 28600, 10957.0 / 32175,
         2603.0 / 4950, -7939.0 / 85800, -23069.0 / 51480, 168379.0 / 514800, -1099.0 / 15600},
        {-8787.0 / 22880, 14523.0 / 22880, 1519.0 / 11440, -3631.0 / 11440, -829.0 / 2860,
         59.0 / 2860, 2641.0 / 11440, 1231.0 / 11440, -4293.0 / 22880, 1197.0 / 22880},
        {317.0 / 520, -2767.0 / 1560, 161.0 / 156, 277.0 / 260, -107.0 / 195, -197.0 / 195,
         57.0 / 260, 149.0 / 156, -1087.0 / 1560, 77.0 / 520},
    },
};

Vec3 apply_stencil(const std::vector<Vec3>& pts, std::size_t base, const double* w,
                   std::size_t width, double inv_hm) {
  Vec3 acc{};
  for (std::size_t j = 0; j < width; ++j) {
    acc += w[j] * pts[base + j];
  }
  return acc * inv_hm;
}

}  // namespace

SampledCurve SampledCurve::make(std::vector<double> params, std::vector<Vec3> points) {
  const std::size_t n = params.size();
  if (n < kMinSamples) throw GridTooShort(n, kMinSamples);
  if (points.size() != n) throw Error("params and points must have the same length");

  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(params[i]) || !finite(points[i])) {
      throw Error("curve samples must be finite");
    }
    if (i > 0 && !(params[i] > params[i - 1])) {
      throw Error("parameter values must be strictly increasing");
    }
  }

  SampledCurve curve{std::move(params), std::move(points), std::nullopt};
  const double a = curve.params.front();
  const double b = curve.params.back();
  const double h = (b - a) / static_cast<double>(n - 1);
  const double tol = 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
  bool uniform = true;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(curve.params[i + 1] - curve.params[i] - h) > tol) {
      uniform = false;
      break;
    }
  }
  if (uniform) curve.uniform_step = h;
  return curve;
}

CurveJet estimate_jet(const SampledCurve& curve) {
  const std::size_t n = curve.size();
  if (n < kMinSamples) throw GridTooShort(n, kMinSamples);
  if (!curve.uniform_step) throw NonUniformGrid();

  const double h = *curve.uniform_step;
  double inv_h[5];
  inv_h[1] = 1.0 / h;
  for (int m = 2; m <= 4; ++m) inv_h[m] = inv_h[m - 1] / h;

  CurveJet jet;
  jet.params = curve.params;
  jet.d1.resize(n);
  jet.d2.resize(n);
  jet.d3.resize(n);
  jet.d4.resize(n);
  std::vector<Vec3>* out[4] = {&jet.d1, &jet.d2, &jet.d3, &jet.d4};

  const std::size_t width = n >= 10 ? 10 : 9;
  auto edge = [&](std::size_t offset, int m) {
    return width == 10 ? kEdge10[offset][m - 1] : kEdge9[offset][m - 1];
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (int m = 1; m <= 4; ++m) {
      Vec3 v;
      if (i < 3) {
        v = apply_stencil(curve.points, 0, edge(i, m), width, inv_h[m]);
      } else if (i + 4 > n) {
        // mirrored right-edge stencil
        const double* w = edge(n - 1 - i, m);
        Vec3 acc{};
        const double s = (m % 2 == 0) ? 1.0 : -1.0;
        for (std::size_t j = 0; j < width; ++j) {
          acc += (s * w[width - 1 - j]) * curve.points[n - width + j];
        }
        v = acc * inv_h[m];
      } else {
        v = apply_stencil(curve.points, i - 3, kCentral[m - 1], 7, inv_h[m]);
      }
      (*out[m - 1])[i] = v;
    }
  }
  return jet;
}

SampledCurve resample_uniform(const SampledCurve& curve, std::size_t n) {
  if (n < kMinSamples) throw GridTooShort(n, kMinSamples);

  const double a = curve.front_param();
  const double b = curve.back_param();
  std::vector<double> params(n);
  for (std::size_t i = 0; i < n; ++i) {
    params[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  params.back() = b;

  MonotoneCubic ix(curve.params, [&] {
    std::vector<double> c(curve.size());
    for (std::size_t i = 0; i < curve.size(); ++i) c[i] = curve.points[i].x;
    return c;
  }());
  MonotoneCubic iy(curve.params, [&] {
    std::vector<double> c(curve.size());
    for (std::size_t i = 0; i < curve.size(); ++i) c[i] = curve.points[i].y;
    return c;
  }());
  MonotoneCubic iz(curve.params, [&] {
    std::vector<double> c(curve.size());
    for (std::size_t i = 0; i < curve.size(); ++i) c[i] = curve.points[i].z;
    return c;
  }());

  std::vector<Vec3> points(n);
  for (std::size_t i = 0; i < n; ++i) {
    points[i] = {ix(params[i]), iy(params[i]), iz(params[i])};
  }
  points.front() = curve.points.front();
  points.back() = curve.points.back();
  return SampledCurve::make(std::move(params), std::move(points));
}

std::vector<double> check_nondegenerate(const CurveJet& jet, double eps) {
  const std::size_t n = jet.size();
  std::vector<double> dets(n);
  for (std::size_t i = 0; i < n; ++i) {
    dets[i] = det3(jet.d1[i], jet.d2[i], jet.d3[i]);
    if (!(dets[i] > eps)) throw DegenerateCurve(i, dets[i]);
  }
  return dets;
}

}  // namespace affcurve
