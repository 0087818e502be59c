#pragma once

// Small fixed-size 3D linear algebra: just enough for orthogonal matrix
// groups acting on the unit sphere.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace orbit_bell {

/// Tolerance for matrix equality and deduplication (entries are O(1)).
inline constexpr double kMatrixEps = 1e-9;
/// Tolerance for vector equality, unit-norm checks and vertex matching.
inline constexpr double kVectorEps = 1e-9;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
  constexpr double& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  Vec3& operator+=(Vec3 b) {
    x += b.x;
    y += b.y;
    z += b.z;
    return *this;
  }
  Vec3& operator-=(Vec3 b) {
    x -= b.x;
    y -= b.y;
    z -= b.z;
    return *this;
  }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

inline double max_abs_diff(Vec3 a, Vec3 b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

inline bool approx_equal(Vec3 a, Vec3 b, double eps = kVectorEps) { return max_abs_diff(a, b) <= eps; }

inline bool is_unit(Vec3 a, double eps = kVectorEps) { return std::abs(norm(a) - 1.0) <= eps; }

/// Row-major 3x3 real matrix.
struct Matrix3 {
  std::array<std::array<double, 3>, 3> m{};

  static constexpr Matrix3 identity() {
    Matrix3 r;
    r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
    return r;
  }

  static constexpr Matrix3 diagonal(double a, double b, double c) {
    Matrix3 r;
    r.m[0][0] = a;
    r.m[1][1] = b;
    r.m[2][2] = c;
    return r;
  }

  constexpr double operator()(std::size_t r, std::size_t c) const { return m[r][c]; }
  constexpr double& operator()(std::size_t r, std::size_t c) { return m[r][c]; }

  friend constexpr Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
    Matrix3 r;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j] + a.m[i][2] * b.m[2][j];
    return r;
  }

  friend constexpr Vec3 operator*(const Matrix3& a, Vec3 v) {
    return {a.m[0][0] * v.x + a.m[0][1] * v.y + a.m[0][2] * v.z,
            a.m[1][0] * v.x + a.m[1][1] * v.y + a.m[1][2] * v.z,
            a.m[2][0] * v.x + a.m[2][1] * v.y + a.m[2][2] * v.z};
  }

  friend constexpr Matrix3 operator*(double s, const Matrix3& a) {
    Matrix3 r = a;
    for (auto& row : r.m)
      for (auto& e : row) e *= s;
    return r;
  }

  constexpr Matrix3 transposed() const {
    Matrix3 r;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }

  constexpr double trace() const { return m[0][0] + m[1][1] + m[2][2]; }

  constexpr double determinant() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
};

inline double max_abs_diff(const Matrix3& a, const Matrix3& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) d = std::max(d, std::abs(a.m[i][j] - b.m[i][j]));
  return d;
}

inline bool approx_equal(const Matrix3& a, const Matrix3& b, double eps = kMatrixEps) {
  return max_abs_diff(a, b) <= eps;
}

/// max |(MᵀM − I)_ij|
inline double orthogonality_defect(const Matrix3& a) {
  return max_abs_diff(a.transposed() * a, Matrix3::identity());
}

inline bool is_orthogonal(const Matrix3& a, double eps = kMatrixEps) {
  return orthogonality_defect(a) <= eps && std::abs(std::abs(a.determinant()) - 1.0) <= eps;
}

/// The reflection (x, y, z) -> (x, -y, z) in the x-z plane.
inline constexpr Matrix3 kReflectY = Matrix3::diagonal(1.0, -1.0, 1.0);

}  // namespace orbit_bell
