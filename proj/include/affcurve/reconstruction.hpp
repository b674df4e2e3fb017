#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "affcurve/affine_map.hpp"
#include "affcurve/curve.hpp"
#include "affcurve/invariants.hpp"
#include "affcurve/linalg.hpp"

namespace affcurve {

inline constexpr double kDefaultTolerance = 1e-3;
inline constexpr std::size_t kDefaultPipelineSamples = 400;

/// Curvature functions chi1(sigma), chi2(sigma) on a uniform grid from 0,
/// taken as input data for reconstruction.
struct NaturalEquations {
  std::vector<double> sigma;
  std::vector<double> chi1;
  std::vector<double> chi2;

  static NaturalEquations make(std::vector<double> sigma, std::vector<double> chi1,
                               std::vector<double> chi2);
  static NaturalEquations from_signature(const AffineSignature& sig);

  std::size_t size() const { return sigma.size(); }
};

struct EquivalenceReport {
  bool equivalent = false;
  double distance = 0.0;         // L-inf over the compared curvature arrays
  double compared_length = 0.0;  // overlap of the arc-length ranges
  std::optional<SpecialAffineMap> map;
};

/// Integrates F'(sigma) = F(sigma) K(sigma) with classical fixed-step RK4 at
/// the grid spacing (curvatures at half steps by linear interpolation).
/// Returns the frame at every sample; determinants stay within 1e-6 of one.
std::vector<Mat3> integrate_frame(const NaturalEquations& eqs, const Mat3& initial);

/// Reconstructs the curve whose curvatures are eqs: the frame system and the
/// point (whose derivative is the first frame column) are integrated jointly
/// with RK4 from the given initial data.
SampledCurve reconstruct_curve(const NaturalEquations& eqs,
                               const Mat3& initial_frame = Mat3::identity(),
                               const Vec3& initial_point = Vec3{});

/// Resamples both signatures onto the common range [0, min(La, Lb)] at the
/// finer grid and returns (max pointwise deviation <= tol, that deviation).
/// No offset search is performed.
std::pair<bool, double> compare_signatures(const AffineSignature& a, const AffineSignature& b,
                                           double tol);

/// The unique map sending the arc-length frame of c at sigma = 0 to the frame
/// of cbar: B = Fbar(0) F(0)^-1, tau = cbar(0) - B c(0). The result is
/// normalized to determinant one; callers must have verified that the
/// signatures agree.
SpecialAffineMap solve_alignment_map(const SampledCurve& c, const SampledCurve& cbar,
                                     double eps_det = kDefaultEpsDet);

/// Signature-first equivalence decision with a geometric guard: signatures
/// must agree within tol, and the aligned curves must agree within 10 tol.
EquivalenceReport verify_equivalence(const SampledCurve& c, const SampledCurve& cbar, double tol,
                                     std::size_t samples = kDefaultPipelineSamples,
                                     double eps_det = kDefaultEpsDet);

}  // namespace affcurve
