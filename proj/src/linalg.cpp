#include "affcurve/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "affcurve/errors.hpp"

namespace affcurve {

Mat3 Mat3::adjugate() const {
  const Mat3& a = *this;
  Mat3 r;
  r(0, 0) = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
  r(0, 1) = a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2);
  r(0, 2) = a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1);
  r(1, 0) = a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2);
  r(1, 1) = a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
  r(1, 2) = a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2);
  r(2, 0) = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
  r(2, 1) = a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1);
  r(2, 2) = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  return r;
}

Mat3 Mat3::inverse() const {
  double d = det();
  if (d == 0.0 || !std::isfinite(d)) {
    throw Error("matrix is singular");
  }
  return adjugate() * (1.0 / d);
}

double frobenius_norm(const Mat3& a) {
  double s = 0.0;
  for (double v : a.m) s += v * v;
  return std::sqrt(s);
}

bool finite(const Mat3& a) {
  return std::all_of(a.m.begin(), a.m.end(), [](double v) { return std::isfinite(v); });
}

Mat3 expm(const Mat3& a) {
  if (!finite(a)) throw Overflow();

  // Scale so the norm is at most 1/2, run the Taylor series to degree 16,
  // then undo the scaling by repeated squaring.
  double nrm = frobenius_norm(a);
  if (!std::isfinite(nrm)) {
    // squared entries overflowed; a crude bound is enough for the scaling
    double peak = 0.0;
    for (double v : a.m) peak = std::max(peak, std::abs(v));
    nrm = 3.0 * peak;
  }
  int squarings = 0;
  if (nrm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
  }
  Mat3 scaled = a * std::ldexp(1.0, -squarings);

  Mat3 sum = Mat3::identity();
  Mat3 term = Mat3::identity();
  for (int k = 1; k <= 16; ++k) {
    term = term * scaled * (1.0 / k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) {
    sum = sum * sum;
    if (!finite(sum)) throw Overflow();
  }
  if (!finite(sum)) throw Overflow();
  return sum;
}

std::array<std::complex<double>, 3> cubic_roots(double p, double q) {
  using C = std::complex<double>;
  const C omega{-0.5, std::sqrt(3.0) / 2.0};

  if (p == 0.0) {
    // x^3 = -q
    double r = std::cbrt(-q);
    return {C{r}, C{r} * omega, C{r} * omega * omega};
  }

  // Cardano with the larger-magnitude branch of u^3 for stability.
  C disc = std::sqrt(C{q * q / 4.0 + p * p * p / 27.0});
  C u3 = C{-q / 2.0} + disc;
  if (std::abs(u3) < std::abs(C{-q / 2.0} - disc)) {
    u3 = C{-q / 2.0} - disc;
  }
  C u = std::pow(u3, 1.0 / 3.0);
  std::array<C, 3> roots;
  for (int k = 0; k < 3; ++k) {
    C uk = u;
    for (int j = 0; j < k; ++j) uk *= omega;
    roots[k] = uk - p / (3.0 * uk);
  }
  return roots;
}

}  // namespace affcurve
