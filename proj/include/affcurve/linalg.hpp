#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace affcurve {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double& operator[](int i) { return (&x)[i]; }
  double operator[](int i) const { return (&x)[i]; }

  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  Vec3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator*(double s, Vec3 v) { return v *= s; }
inline Vec3 operator*(Vec3 v, double s) { return v *= s; }
inline Vec3 operator/(Vec3 v, double s) { return v *= 1.0 / s; }
inline Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline bool finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

/// Scalar triple product det(u, v, w) of the matrix with columns u, v, w,
/// by cofactor expansion.
inline double det3(const Vec3& u, const Vec3& v, const Vec3& w) {
  return u.x * (v.y * w.z - v.z * w.y) - v.x * (u.y * w.z - u.z * w.y) +
         w.x * (u.y * v.z - u.z * v.y);
}

/// Real 3x3 matrix, row-major storage.
struct Mat3 {
  std::array<double, 9> m{};

  static Mat3 identity() {
    Mat3 r;
    r.m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    return r;
  }
  static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    Mat3 r;
    r.m = {c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z};
    return r;
  }

  double& operator()(int r, int c) { return m[3 * r + c]; }
  double operator()(int r, int c) const { return m[3 * r + c]; }

  Vec3 column(int c) const { return {m[c], m[3 + c], m[6 + c]}; }
  Vec3 row(int r) const { return {m[3 * r], m[3 * r + 1], m[3 * r + 2]}; }

  double trace() const { return m[0] + m[4] + m[8]; }
  double det() const { return det3(column(0), column(1), column(2)); }

  Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  /// Transpose of the cofactor matrix; inverse() = adjugate()/det().
  Mat3 adjugate() const;
  Mat3 inverse() const;

  Mat3& operator+=(const Mat3& o) {
    for (int i = 0; i < 9; ++i) m[i] += o.m[i];
    return *this;
  }
  Mat3& operator-=(const Mat3& o) {
    for (int i = 0; i < 9; ++i) m[i] -= o.m[i];
    return *this;
  }
  Mat3& operator*=(double s) {
    for (double& v : m) v *= s;
    return *this;
  }
};

inline Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
inline Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
inline Mat3 operator*(double s, Mat3 a) { return a *= s; }
inline Mat3 operator*(Mat3 a, double s) { return a *= s; }

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    }
  return r;
}

inline Vec3 operator*(const Mat3& a, const Vec3& v) {
  return {dot(a.row(0), v), dot(a.row(1), v), dot(a.row(2), v)};
}

double frobenius_norm(const Mat3& a);
bool finite(const Mat3& a);

/// Matrix exponential by scaling and squaring with a degree-16 Taylor
/// polynomial. Throws Overflow when entries leave the representable range.
Mat3 expm(const Mat3& a);

/// Roots of the depressed cubic x^3 + p x + q = 0.
std::array<std::complex<double>, 3> cubic_roots(double p, double q);

}  // namespace affcurve
