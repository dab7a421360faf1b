#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace magsym {

/// Cartesian 3-vector. Components are indexed 0..2 for x1..x3.
struct Vec3 {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double a, double b, double c) : x1(a), x2(b), x3(c) {}

  double operator[](int i) const {
    switch (i) {
      case 0: return x1;
      case 1: return x2;
      case 2: return x3;
      default: throw std::out_of_range("Vec3 index");
    }
  }
  double& operator[](int i) {
    switch (i) {
      case 0: return x1;
      case 1: return x2;
      case 2: return x3;
      default: throw std::out_of_range("Vec3 index");
    }
  }

  std::array<double, 3> to_array() const { return {x1, x2, x3}; }

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3}; }
  friend Vec3 operator-(const Vec3& a) { return {-a.x1, -a.x2, -a.x3}; }
  friend Vec3 operator*(double s, const Vec3& a) { return {s * a.x1, s * a.x2, s * a.x3}; }
  friend Vec3 operator*(const Vec3& a, double s) { return s * a; }
  friend Vec3 operator/(const Vec3& a, double s) { return {a.x1 / s, a.x2 / s, a.x3 / s}; }
  Vec3& operator+=(const Vec3& o) { return *this = *this + o; }
  Vec3& operator-=(const Vec3& o) { return *this = *this - o; }
  friend bool operator==(const Vec3& a, const Vec3& b) = default;

  bool finite() const { return std::isfinite(x1) && std::isfinite(x2) && std::isfinite(x3); }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.x2 * b.x3 - a.x3 * b.x2, a.x3 * b.x1 - a.x1 * b.x3, a.x1 * b.x2 - a.x2 * b.x1};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// Levi-Civita symbol with 0-based indices.
constexpr int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  if ((i == 0 && j == 1 && k == 2) || (i == 1 && j == 2 && k == 0) || (i == 2 && j == 0 && k == 1)) return 1;
  return -1;
}

}  // namespace magsym
