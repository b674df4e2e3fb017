#pragma once

#include <cstdint>

#include "affcurve/curve.hpp"
#include "affcurve/linalg.hpp"

namespace affcurve {

/// Special (unimodular) affine transformation x -> B x + tau with det(B) = 1.
struct SpecialAffineMap {
  Mat3 B = Mat3::identity();
  Vec3 tau{};

  static SpecialAffineMap identity() { return {}; }
};

Vec3 apply(const SpecialAffineMap& map, const Vec3& p);

/// Pointwise image of the curve; the parameter grid is unchanged.
SampledCurve apply(const SpecialAffineMap& map, const SampledCurve& curve);

/// Composition a after b: x -> a.B (b.B x + b.tau) + a.tau.
SpecialAffineMap compose(const SpecialAffineMap& a, const SpecialAffineMap& b);

/// Inverse map (B^-1, -B^-1 tau); B^-1 is the adjugate since det(B) = 1.
SpecialAffineMap invert(const SpecialAffineMap& map);

/// Deterministic seeded generator: linear congruential with Knuth's MMIX
/// constants, so seeded draws are reproducible across implementations.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  /// Uniform in [0, 1).
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [-scale, scale].
  double next_symmetric(double scale) { return (2.0 * next_unit() - 1.0) * scale; }

 private:
  std::uint64_t state_;
};

/// Draws a random unimodular map: nine entries uniform in [-scale, scale],
/// rejecting draws with |det| <= 0.1 scale^3, then one column sign-flipped if
/// the determinant is negative and the matrix divided by the cube root of its
/// determinant. Deterministic per seed. Throws RandomRejectionExhausted after
/// 1000 rejected draws.
SpecialAffineMap random_map(std::uint64_t seed, double scale = 1.0);

}  // namespace affcurve
