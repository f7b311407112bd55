#pragma once

// Linear crack geometry and scene validity checks.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dsm/geometry.hpp"

namespace dsm {

/// Straight crack {center + s * tangent : -half_length <= s <= half_length}
/// with tangent = [cos rotation, sin rotation].
struct crack {
  vec2 center;
  double half_length = 0.0;
  double rotation = 0.0;

  crack() = default;
  crack(vec2 c, double half, double angle) : center(c), half_length(half), rotation(angle) {
    if (!(half_length > 0.0) || !std::isfinite(half_length))
      throw std::invalid_argument("crack half_length must be positive and finite");
    if (!std::isfinite(center.x) || !std::isfinite(center.y) || !std::isfinite(rotation))
      throw std::invalid_argument("crack center and rotation must be finite");
  }
};

inline vec2 crack_tangent(const crack& c) { return unit_vector(c.rotation); }

inline std::pair<vec2, vec2> crack_endpoints(const crack& c) {
  const vec2 t = crack_tangent(c);
  return {c.center - c.half_length * t, c.center + c.half_length * t};
}

/// Point at parameter s in [-1, 1] along the crack.
inline vec2 crack_point(const crack& c, double s) {
  return c.center + (s * c.half_length) * crack_tangent(c);
}

struct scene {
  std::vector<crack> cracks;

  std::size_t size() const { return cracks.size(); }
  bool empty() const { return cracks.empty(); }

  bool equal_half_lengths() const {
    for (const auto& c : cracks)
      if (c.half_length != cracks.front().half_length) return false;
    return true;
  }
};

struct validation_thresholds {
  /// k |c_m - c_m'| must exceed this.
  double separation = 0.75;
  /// k l_m must stay below this.
  double size = 0.5;
};

struct scene_violation {
  enum class kind { separation, size };
  enum class severity { warning, hard };

  kind what;
  severity level;
  std::size_t first;
  std::size_t second; // equals first for size violations
  double value;       // k |c_m - c_m'| or k l_m

  std::string describe() const {
    std::ostringstream os;
    if (what == kind::separation) {
      os << "cracks " << first << " and " << second << ": k*|c - c'| = " << value
         << " is not above the separation threshold";
    } else {
      os << "crack " << first << ": k*l = " << value << " is not below the small-crack threshold";
    }
    os << (level == severity::hard ? " [hard]" : " [warning]");
    return os.str();
  }
};

/// Separation violations are hard (the far-field model assumes isolated
/// cracks); small-crack violations are warnings, the forward solver still
/// handles them.
inline std::vector<scene_violation> validate_scene(const scene& s, double k,
                                                   const validation_thresholds& limits = {}) {
  if (!(k > 0.0) || !std::isfinite(k)) throw std::domain_error("wavenumber must be positive");
  std::vector<scene_violation> out;
  const auto& cs = s.cracks;
  for (std::size_t m = 0; m < cs.size(); ++m) {
    for (std::size_t q = m + 1; q < cs.size(); ++q) {
      const double v = k * distance(cs[m].center, cs[q].center);
      if (!(v > limits.separation))
        out.push_back({scene_violation::kind::separation, scene_violation::severity::hard, m, q, v});
    }
  }
  for (std::size_t m = 0; m < cs.size(); ++m) {
    const double v = k * cs[m].half_length;
    if (!(v < limits.size))
      out.push_back({scene_violation::kind::size, scene_violation::severity::warning, m, m, v});
  }
  return out;
}

inline bool has_hard_violation(const std::vector<scene_violation>& vs) {
  for (const auto& v : vs)
    if (v.level == scene_violation::severity::hard) return true;
  return false;
}

/// Three-crack configuration used for the reference reconstructions. Cracks
/// two and three are written in the source as R_a [s + p, s + q]; they are
/// stored as center R_a [p, q], angle a + pi/4 and half-length l (not
/// sqrt(2) l).
inline scene reference_scene(double l1 = 0.05, double l2 = 0.05, double l3 = 0.05) {
  using std::numbers::pi;
  scene s;
  s.cracks.emplace_back(vec2{0.6, 0.2}, l1, 0.0);
  s.cracks.emplace_back(rotate({-0.4, -0.35}, pi / 4), l2, pi / 4 + pi / 4);
  s.cracks.emplace_back(rotate({-0.25, 0.6}, 7 * pi / 6), l3, 7 * pi / 6 + pi / 4);
  return s;
}

} // namespace dsm
