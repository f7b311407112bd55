#pragma once

#include <cmath>

namespace dsm {

struct vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr vec2 operator+(vec2 a, vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr vec2 operator-(vec2 a, vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr vec2 operator-(vec2 a) { return {-a.x, -a.y}; }
  friend constexpr vec2 operator*(double s, vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr vec2 operator*(vec2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(vec2, vec2) = default;
};

constexpr double dot(vec2 a, vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(vec2 a, vec2 b) { return norm(a - b); }

inline vec2 unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }

inline vec2 rotate(vec2 p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

} // namespace dsm
