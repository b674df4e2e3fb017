#include "affcurve/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "affcurve/canonical.hpp"
#include "affcurve/errors.hpp"
#include "affcurve/numerics.hpp"

namespace affcurve {

namespace {

constexpr double kFrameDetTol = 1e-9;

Mat3 structure_matrix(double chi1, double chi2) { return FrenetMatrix::make(chi1, chi2).matrix; }

struct FrameState {
  Mat3 frame;
  Vec3 point;
};

FrameState rk4_step(const FrameState& s, double h, const Mat3& k0, const Mat3& kh,
                    const Mat3& k1) {
  auto rhs = [](const FrameState& st, const Mat3& k) {
    return FrameState{st.frame * k, st.frame.column(0)};
  };
  auto advance = [](const FrameState& st, double dt, const FrameState& d) {
    return FrameState{st.frame + dt * d.frame, st.point + dt * d.point};
  };

  FrameState d1 = rhs(s, k0);
  FrameState d2 = rhs(advance(s, h / 2.0, d1), kh);
  FrameState d3 = rhs(advance(s, h / 2.0, d2), kh);
  FrameState d4 = rhs(advance(s, h, d3), k1);

  Mat3 frame = s.frame + (h / 6.0) * (d1.frame + 2.0 * d2.frame + 2.0 * d3.frame + d4.frame);
  Vec3 point = s.point + (h / 6.0) * (d1.point + 2.0 * d2.point + 2.0 * d3.point + d4.point);
  return {frame, point};
}

std::vector<FrameState> integrate_system(const NaturalEquations& eqs, const Mat3& initial_frame,
                                         const Vec3& initial_point) {
  double det = initial_frame.det();
  if (std::abs(det - 1.0) > kFrameDetTol) throw BadInitialFrame(det);

  const std::size_t n = eqs.size();
  std::vector<FrameState> states;
  states.reserve(n);
  states.push_back({initial_frame, initial_point});
  if (n < 2) return states;

  const double h = eqs.sigma[1] - eqs.sigma[0];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Mat3 k0 = structure_matrix(eqs.chi1[i], eqs.chi2[i]);
    Mat3 kh = structure_matrix(0.5 * (eqs.chi1[i] + eqs.chi1[i + 1]),
                               0.5 * (eqs.chi2[i] + eqs.chi2[i + 1]));
    Mat3 k1 = structure_matrix(eqs.chi1[i + 1], eqs.chi2[i + 1]);
    states.push_back(rk4_step(states.back(), h, k0, kh, k1));
  }
  return states;
}

// Arc-length resampled points of a curve at the given sigma values.
std::vector<Vec3> points_at_sigma(const SampledCurve& curve, const ArcLengthProfile& profile,
                                  const std::vector<double>& sigmas) {
  MonotoneCubic t_of_sigma(profile.sigma, curve.params);
  std::vector<double> cx(curve.size()), cy(curve.size()), cz(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) {
    cx[i] = curve.points[i].x;
    cy[i] = curve.points[i].y;
    cz[i] = curve.points[i].z;
  }
  MonotoneCubic ix(curve.params, std::move(cx));
  MonotoneCubic iy(curve.params, std::move(cy));
  MonotoneCubic iz(curve.params, std::move(cz));

  std::vector<Vec3> out(sigmas.size());
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    double t = t_of_sigma(sigmas[i]);
    out[i] = {ix(t), iy(t), iz(t)};
  }
  return out;
}

}  // namespace

NaturalEquations NaturalEquations::make(std::vector<double> sigma, std::vector<double> chi1,
                                        std::vector<double> chi2) {
  const std::size_t n = sigma.size();
  if (n == 0 || chi1.size() != n || chi2.size() != n) {
    throw Error("natural equations need three equal-length arrays");
  }
  if (std::abs(sigma.front()) > 1e-12 * std::max(1.0, std::abs(sigma.back()))) {
    throw Error("arc-length grid must start at zero");
  }
  if (n > 1) {
    double h = (sigma.back() - sigma.front()) / static_cast<double>(n - 1);
    if (!(h > 0.0)) throw Error("arc-length grid must be increasing");
    double tol = 1e-9 * std::max(1.0, std::abs(sigma.back()));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(sigma[i + 1] - sigma[i] - h) > tol) {
        throw Error("arc-length grid must be uniform");
      }
    }
  }
  return {std::move(sigma), std::move(chi1), std::move(chi2)};
}

NaturalEquations NaturalEquations::from_signature(const AffineSignature& sig) {
  return make(sig.sigma, sig.chi1, sig.chi2);
}

std::vector<Mat3> integrate_frame(const NaturalEquations& eqs, const Mat3& initial) {
  std::vector<FrameState> states = integrate_system(eqs, initial, Vec3{});
  std::vector<Mat3> frames;
  frames.reserve(states.size());
  for (const FrameState& s : states) frames.push_back(s.frame);
  return frames;
}

SampledCurve reconstruct_curve(const NaturalEquations& eqs, const Mat3& initial_frame,
                               const Vec3& initial_point) {
  if (eqs.size() < kMinSamples) throw GridTooShort(eqs.size(), kMinSamples);
  std::vector<FrameState> states = integrate_system(eqs, initial_frame, initial_point);
  std::vector<Vec3> points;
  points.reserve(states.size());
  for (const FrameState& s : states) points.push_back(s.point);
  return SampledCurve::make(eqs.sigma, std::move(points));
}

std::pair<bool, double> compare_signatures(const AffineSignature& a, const AffineSignature& b,
                                           double tol) {
  if (!(tol > 0.0)) throw Error("comparison tolerance must be positive");
  if (a.size() == 0 || b.size() == 0 || a.total() <= 0.0 || b.total() <= 0.0) {
    throw EmptyOverlap();
  }

  const double overlap = std::min(a.total(), b.total());
  const double step_a = a.total() / static_cast<double>(a.size() - 1);
  const double step_b = b.total() / static_cast<double>(b.size() - 1);
  const double step = std::min(step_a, step_b);
  const std::size_t n =
      std::max<std::size_t>(2, static_cast<std::size_t>(std::round(overlap / step)) + 1);

  MonotoneCubic a1(a.sigma, a.chi1), a2(a.sigma, a.chi2);
  MonotoneCubic b1(b.sigma, b.chi1), b2(b.sigma, b.chi2);

  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = overlap * static_cast<double>(i) / static_cast<double>(n - 1);
    worst = std::max(worst, std::abs(a1(s) - b1(s)));
    worst = std::max(worst, std::abs(a2(s) - b2(s)));
  }
  return {worst <= tol, worst};
}

SpecialAffineMap solve_alignment_map(const SampledCurve& c, const SampledCurve& cbar,
                                     double eps_det) {
  auto arc_frame = [&](const SampledCurve& curve) {
    CurveJet jet = estimate_jet(curve);
    ArcLengthProfile profile = arc_length_profile(jet, eps_det);
    SampledCurve gamma = reparametrize(curve, profile, curve.size());
    CurveJet arc_jet = estimate_jet(gamma);
    Mat3 frame = Mat3::from_columns(arc_jet.d1[0], arc_jet.d2[0], arc_jet.d3[0]);
    return std::make_pair(frame, gamma.points[0]);
  };

  auto [f0, p0] = arc_frame(c);
  auto [f1, p1] = arc_frame(cbar);

  Mat3 b = f1 * f0.inverse();
  double det = b.det();
  if (!(det > 0.0) || std::abs(det - 1.0) > 0.05) {
    throw DegenerateCurve(0, det);
  }
  b *= 1.0 / std::cbrt(det);  // pin the unimodular invariant exactly
  return {b, p1 - b * p0};
}

EquivalenceReport verify_equivalence(const SampledCurve& c, const SampledCurve& cbar, double tol,
                                     std::size_t samples, double eps_det) {
  AffineSignature sig_a = signature(c, std::max(samples, c.size()), eps_det);
  AffineSignature sig_b = signature(cbar, std::max(samples, cbar.size()), eps_det);

  EquivalenceReport report;
  report.compared_length = std::min(sig_a.total(), sig_b.total());

  auto [match, dist] = compare_signatures(sig_a, sig_b, tol);
  report.distance = dist;
  if (!match) return report;

  SpecialAffineMap map = solve_alignment_map(c, cbar, eps_det);

  // geometric guard: aligned curves must coincide along the common range
  CurveJet jet_a = estimate_jet(c);
  CurveJet jet_b = estimate_jet(cbar);
  ArcLengthProfile prof_a = arc_length_profile(jet_a, eps_det);
  ArcLengthProfile prof_b = arc_length_profile(jet_b, eps_det);

  std::size_t n = std::max({samples, c.size(), cbar.size()});
  std::vector<double> sigmas(n);
  for (std::size_t i = 0; i < n; ++i) {
    sigmas[i] = report.compared_length * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  std::vector<Vec3> pa = points_at_sigma(c, prof_a, sigmas);
  std::vector<Vec3> pb = points_at_sigma(cbar, prof_b, sigmas);

  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    residual = std::max(residual, norm(apply(map, pa[i]) - pb[i]));
  }

  report.equivalent = residual <= 10.0 * tol;
  if (report.equivalent) report.map = map;
  return report;
}

}  // namespace affcurve
