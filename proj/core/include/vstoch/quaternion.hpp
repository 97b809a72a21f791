#pragma once

#include <cmath>

namespace vstoch {

/// Quaternion w + x i + y j + z k over double, with the usual Hamilton
/// product (i j = k, j k = i, k i = j).
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w, double x, double y, double z)
      : w(w), x(x), y(y), z(z) {}
  /// Real embedding.
  constexpr explicit Quaternion(double w) : w(w) {}

  constexpr Quaternion& operator+=(const Quaternion& r) {
    w += r.w; x += r.x; y += r.y; z += r.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& r) {
    w -= r.w; x -= r.x; y -= r.y; z -= r.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend constexpr Quaternion operator-(const Quaternion& a) {
    return {-a.w, -a.x, -a.y, -a.z};
  }
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
  friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
  friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

/// Squared Euclidean norm. The grouping (w^2+x^2)+(y^2+z^2) is fixed so that
/// the complex embedding reproduces it bit for bit.
constexpr double norm_sq(const Quaternion& q) {
  return (q.w * q.w + q.x * q.x) + (q.y * q.y + q.z * q.z);
}

inline double abs(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

}  // namespace vstoch
