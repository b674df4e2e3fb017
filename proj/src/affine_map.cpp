#include "affcurve/affine_map.hpp"

#include <cmath>

#include "affcurve/errors.hpp"

namespace affcurve {

Vec3 apply(const SpecialAffineMap& map, const Vec3& p) { return map.B * p + map.tau; }

SampledCurve apply(const SpecialAffineMap& map, const SampledCurve& curve) {
  SampledCurve out = curve;
  for (Vec3& p : out.points) p = map.B * p + map.tau;
  return out;
}

SpecialAffineMap compose(const SpecialAffineMap& a, const SpecialAffineMap& b) {
  return {a.B * b.B, a.B * b.tau + a.tau};
}

SpecialAffineMap invert(const SpecialAffineMap& map) {
  Mat3 inv = map.B.adjugate();  // det(B) = 1
  return {inv, -(inv * map.tau)};
}

SpecialAffineMap random_map(std::uint64_t seed, double scale) {
  if (!(scale > 0.0)) throw Error("random_map scale must be positive");
  Lcg64 rng(seed);

  const double reject = 0.1 * scale * scale * scale;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Mat3 b;
    for (double& v : b.m) v = rng.next_symmetric(scale);
    double d = b.det();
    if (!(std::abs(d) > reject)) continue;

    if (d < 0.0) {
      // flip the first column to restore orientation
      for (int r = 0; r < 3; ++r) b(r, 0) = -b(r, 0);
      d = -d;
    }
    b *= 1.0 / std::cbrt(d);

    Vec3 tau{rng.next_symmetric(scale), rng.next_symmetric(scale), rng.next_symmetric(scale)};
    return {b, tau};
  }
  throw RandomRejectionExhausted();
}

}  // namespace affcurve
