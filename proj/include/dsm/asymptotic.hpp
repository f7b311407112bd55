#pragma once

// Closed-form small-crack far fields and the Bessel-series structure of the
// indicator maps they produce. The predictors are max-normalized, so only
// relative weights between terms matter; those weights follow the full
// derivations (e.g. the (2 pi)^2 / ln(l/2) against 2 pi^2 k^2 l^2 split of the
// two-term structure, L J0^2 against 2 sum_l sum_s for the multi-direction
// series).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dsm/acquisition.hpp"
#include "dsm/geometry.hpp"
#include "dsm/grid.hpp"
#include "dsm/scene.hpp"
#include "dsm/specfun.hpp"

namespace dsm {

namespace detail {

inline constexpr complex i_power[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

inline double log_half_length(const crack& c) {
  if (!(c.half_length < 2.0)) throw std::domain_error("small-crack formulas need 0 < half_length < 2");
  return std::log(0.5 * c.half_length);
}

inline void require_equal_half_lengths(const scene& s) {
  if (!s.equal_half_lengths())
    throw std::invalid_argument("second-order formulas assume all cracks share one half_length");
}

inline complex unit_phase(double phase) { return {std::cos(phase), std::sin(phase)}; }

/// Gauss-Legendre nodes and weights on [-1, 1].
struct gauss_rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline gauss_rule gauss_legendre(int n) {
  gauss_rule r{std::vector<double>(static_cast<std::size_t>(n)), std::vector<double>(static_cast<std::size_t>(n))};
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int m = 2; m <= n; ++m) {
        const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.nodes[static_cast<std::size_t>(i)] = x;
    r.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

// Distance and polar angle of c - x; the angle is 0 at coincidence, where every
// term it multiplies carries a vanishing J_s(0), s >= 1.
struct polar_offset {
  double r;
  double angle;
};

inline polar_offset offset_to(vec2 x, vec2 c) {
  const vec2 v = c - x;
  const double r = norm(v);
  return {r, r > 0.0 ? std::atan2(v.y, v.x) : 0.0};
}

} // namespace detail

/// First-order small-crack far field:
/// sum_m 2 pi / ln(l_m / 2) e^{i k d.c_m} e^{-i k theta_n.c_m}.
inline std::vector<complex> farfield_order1(const scene& s, double k, vec2 d, std::size_t observation_count) {
  std::vector<complex> out(observation_count, complex{});
  for (const auto& c : s.cracks) {
    const double weight = 2.0 * std::numbers::pi / detail::log_half_length(c);
    const complex incident = detail::unit_phase(k * dot(d, c.center));
    for (std::size_t n = 0; n < observation_count; ++n)
      out[n] += weight * incident * detail::unit_phase(-k * dot(observation_direction(n, observation_count), c.center));
  }
  return out;
}

/// First-order field plus the tangential-derivative correction
/// -pi l^2 d_t(e^{i k d.c}) d_t(e^{-i k theta.c}) per crack.
inline std::vector<complex> farfield_order2(const scene& s, double k, vec2 d, std::size_t observation_count) {
  detail::require_equal_half_lengths(s);
  auto out = farfield_order1(s, k, d, observation_count);
  for (const auto& c : s.cracks) {
    const vec2 t = crack_tangent(c);
    const double l = c.half_length;
    const complex d_incident = complex(0.0, k * dot(d, t)) * detail::unit_phase(k * dot(d, c.center));
    for (std::size_t n = 0; n < observation_count; ++n) {
      const vec2 theta = observation_direction(n, observation_count);
      const complex d_outgoing = complex(0.0, -k * dot(theta, t)) * detail::unit_phase(-k * dot(theta, c.center));
      out[n] -= std::numbers::pi * l * l * d_incident * d_outgoing;
    }
  }
  return out;
}

enum class asymptotic_order { first, second };

/// Tensor of closed-form far fields for every (f, l) in the configuration.
inline far_field_tensor simulate_asymptotic(const scene& s, const acquisition_config& config, asymptotic_order order) {
  far_field_tensor out(config);
  for (std::size_t f = 0; f < config.frequency_count(); ++f) {
    for (std::size_t l = 0; l < config.incident_count(); ++l) {
      const double k = config.wavenumbers[f];
      const vec2 d = config.incident_direction(l);
      out.set_row(f, l,
                  order == asymptotic_order::first ? farfield_order1(s, k, d, config.observation_count)
                                                   : farfield_order2(s, k, d, config.observation_count));
    }
  }
  return out;
}

/// |sum_m J0(k|x - c_m|) / ln(l_m / 2)|, normalized over the grid.
inline indicator_map predict_structure1(const scene& s, double k, const imaging_grid& grid) {
  std::vector<double> weights;
  for (const auto& c : s.cracks) weights.push_back(1.0 / detail::log_half_length(c));
  return normalize_map(grid, detail::evaluate_on_grid(grid, [&](vec2 x) {
    double sum = 0.0;
    for (std::size_t m = 0; m < s.size(); ++m) sum += weights[m] * bessel_j(0, k * distance(x, s.cracks[m].center));
    return std::abs(sum);
  }));
}

struct structure_terms {
  complex phi1;
  complex phi2;
};

/// The J0 term and the direction-dependent J1 term of the single-direction
/// structure at x.
inline structure_terms structure_terms_at(const scene& s, double k, vec2 d, vec2 x) {
  detail::require_equal_half_lengths(s);
  structure_terms out{};
  if (s.empty()) return out;
  const double l = s.cracks.front().half_length;
  const double w1 = 4.0 * std::numbers::pi * std::numbers::pi / detail::log_half_length(s.cracks.front());
  const double w2 = 2.0 * std::numbers::pi * std::numbers::pi * k * k * l * l;
  for (const auto& c : s.cracks) {
    const vec2 t = crack_tangent(c);
    const vec2 offset = x - c.center;
    const double r = norm(offset);
    const auto j = bessel_j_sequence(1, k * r);
    const complex incident = detail::unit_phase(k * dot(d, c.center));
    out.phi1 += w1 * incident * j[0];
    if (r > 0.0) out.phi2 += complex(0.0, -w2) * (dot(d, t) * incident) * (dot(offset, t) / r) * j[1];
  }
  return out;
}

inline indicator_map predict_structure2(const scene& s, double k, vec2 d, const imaging_grid& grid) {
  detail::require_equal_half_lengths(s);
  return normalize_map(grid, detail::evaluate_on_grid(grid, [&](vec2 x) {
    const auto t = structure_terms_at(s, k, d, x);
    return std::abs(t.phi1 + t.phi2);
  }));
}

/// Multi-direction structure at x: sum_m (2 pi)^2 / ln(l_m / 2) J0 [L J0 +
/// 2 sum_s sum_l i^s J_s cos(s (phi_m - theta_l))]. terms == 0 selects the
/// per-point truncation clipped_series_truncation(k r).
inline complex aif_structure_at(const scene& s, double k, const std::vector<double>& incident_angles, vec2 x,
                                int terms = 0) {
  const double big_l = static_cast<double>(incident_angles.size());
  complex total = 0.0;
  for (const auto& c : s.cracks) {
    const double weight = 4.0 * std::numbers::pi * std::numbers::pi / detail::log_half_length(c);
    const auto [r, angle] = detail::offset_to(x, c.center);
    const int order = terms > 0 ? terms : clipped_series_truncation(k * r);
    const auto j = bessel_j_sequence(order, k * r);
    complex series = 0.0;
    for (int sidx = 1; sidx <= order; ++sidx) {
      double cos_sum = 0.0;
      for (double theta : incident_angles) cos_sum += std::cos(sidx * (angle - theta));
      series += detail::i_power[sidx % 4] * (j[static_cast<std::size_t>(sidx)] * cos_sum);
    }
    total += weight * j[0] * (big_l * j[0] + 2.0 * series);
  }
  return total;
}

inline indicator_map predict_aif(const scene& s, double k, const std::vector<double>& incident_angles,
                                 const imaging_grid& grid, int terms = 0) {
  if (incident_angles.empty()) throw std::invalid_argument("need at least one incident direction");
  return normalize_map(grid, detail::evaluate_on_grid(grid, [&](vec2 x) {
    return std::abs(aif_structure_at(s, k, incident_angles, x, terms));
  }));
}

/// |k_F Lambda(k_F r) - k_1 Lambda(k_1 r)| / (k_F - k_1), the leading
/// multi-frequency envelope; equals 1 at r = 0.
inline double mif_envelope(double k_first, double k_last, double r) {
  if (!(k_last > k_first)) throw std::invalid_argument("mif_envelope needs k_last > k_first");
  return std::abs(k_last * lambda_envelope(k_last * r) - k_first * lambda_envelope(k_first * r)) / (k_last - k_first);
}

namespace detail {

inline void check_wavenumber_list(const std::vector<double>& ks) {
  if (ks.size() < 2) throw std::invalid_argument("multi-frequency structure needs at least two wavenumbers");
  for (std::size_t f = 0; f < ks.size(); ++f) {
    if (!(ks[f] > 0.0)) throw std::invalid_argument("wavenumbers must be positive");
    if (f > 0 && !(ks[f] > ks[f - 1])) throw std::invalid_argument("wavenumbers must be strictly increasing");
  }
}

} // namespace detail

/// Multi-frequency structure at x: the closed-form Lambda difference plus the
/// k-integral of J1^2 + 2 sum_s i^s J0 J_s cos(s (phi_m - theta)), integrated
/// with 8-point Gauss-Legendre panels, one panel per half-period pi / r.
inline complex mif_structure_at(const scene& s, const std::vector<double>& wavenumbers, double incident_angle, vec2 x,
                                int terms = 0) {
  detail::check_wavenumber_list(wavenumbers);
  static const detail::gauss_rule rule = detail::gauss_legendre(8);
  const double k1 = wavenumbers.front();
  const double kf = wavenumbers.back();
  complex total = 0.0;
  for (const auto& c : s.cracks) {
    const double weight = 4.0 * std::numbers::pi * std::numbers::pi / detail::log_half_length(c);
    const auto [r, angle] = detail::offset_to(x, c.center);
    const double closed = kf * lambda_envelope(kf * r) - k1 * lambda_envelope(k1 * r);

    complex integral = 0.0;
    if (r > 0.0) {
      const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil((kf - k1) * r / std::numbers::pi)));
      const double h = (kf - k1) / static_cast<double>(panels);
      for (std::size_t p = 0; p < panels; ++p) {
        const double a = k1 + static_cast<double>(p) * h;
        for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
          const double k = a + 0.5 * h * (rule.nodes[q] + 1.0);
          const int order = terms > 0 ? terms : clipped_series_truncation(k * r);
          const auto j = bessel_j_sequence(std::max(order, 1), k * r);
          complex series = 0.0;
          for (int sidx = 1; sidx <= order; ++sidx)
            series += detail::i_power[sidx % 4] * (j[static_cast<std::size_t>(sidx)] * std::cos(sidx * (angle - incident_angle)));
          integral += 0.5 * h * rule.weights[q] * (j[1] * j[1] + 2.0 * j[0] * series);
        }
      }
    }
    total += weight * (closed + integral);
  }
  return total;
}

inline indicator_map predict_mif(const scene& s, const std::vector<double>& wavenumbers, double incident_angle,
                                 const imaging_grid& grid, int terms = 0) {
  detail::check_wavenumber_list(wavenumbers);
  return normalize_map(grid, detail::evaluate_on_grid(grid, [&](vec2 x) {
    return std::abs(mif_structure_at(s, wavenumbers, incident_angle, x, terms));
  }));
}

} // namespace dsm
