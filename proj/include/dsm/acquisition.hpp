#pragma once

// Measurement layout: wavenumbers, incident plane waves and the uniform ring
// of observation directions, plus the far-field data tensor built on it.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dsm/geometry.hpp"

namespace dsm {

using complex = std::complex<double>;

/// theta_n = [cos 2 pi n / N, sin 2 pi n / N], n = 0..N-1.
inline vec2 observation_direction(std::size_t n, std::size_t count) {
  return unit_vector(2.0 * std::numbers::pi * static_cast<double>(n) / static_cast<double>(count));
}

/// Angles 2 pi l / L, l = 0..L-1.
inline std::vector<double> uniform_angles(std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t l = 0; l < count; ++l)
    out[l] = 2.0 * std::numbers::pi * static_cast<double>(l) / static_cast<double>(count);
  return out;
}

/// Wavenumbers 2 pi / lambda for `count` wavelengths spread uniformly over
/// [lambda_min, lambda_max], returned in increasing order.
inline std::vector<double> wavenumbers_from_wavelengths(double lambda_min, double lambda_max, std::size_t count) {
  if (!(lambda_min > 0.0) || !(lambda_max >= lambda_min))
    throw std::invalid_argument("wavelength range must satisfy 0 < min <= max");
  if (count == 0) throw std::invalid_argument("need at least one wavelength");
  std::vector<double> k(count);
  for (std::size_t f = 0; f < count; ++f) {
    // Largest wavelength first so k ascends.
    const double t = count == 1 ? 0.0 : static_cast<double>(f) / static_cast<double>(count - 1);
    const double lambda = lambda_max + t * (lambda_min - lambda_max);
    k[f] = 2.0 * std::numbers::pi / lambda;
  }
  return k;
}

struct acquisition_config {
  std::vector<double> wavenumbers;
  std::size_t observation_count = 0;
  /// Incident propagation angles; d_l = [cos, sin].
  std::vector<double> incident_angles;

  std::size_t frequency_count() const { return wavenumbers.size(); }
  std::size_t incident_count() const { return incident_angles.size(); }
  vec2 incident_direction(std::size_t l) const { return unit_vector(incident_angles.at(l)); }
  vec2 observation(std::size_t n) const { return observation_direction(n, observation_count); }

  void validate() const {
    if (observation_count < 8) throw std::invalid_argument("observation count must be at least 8");
    if (wavenumbers.empty()) throw std::invalid_argument("need at least one wavenumber");
    if (incident_angles.empty()) throw std::invalid_argument("need at least one incident direction");
    for (std::size_t f = 0; f < wavenumbers.size(); ++f) {
      if (!(wavenumbers[f] > 0.0) || !std::isfinite(wavenumbers[f]))
        throw std::invalid_argument("wavenumbers must be positive and finite");
      if (f > 0 && !(wavenumbers[f] > wavenumbers[f - 1]))
        throw std::invalid_argument("wavenumbers must be strictly increasing");
    }
    for (double a : incident_angles)
      if (!std::isfinite(a)) throw std::invalid_argument("incident angles must be finite");
  }
};

/// psi_inf(theta_n, d_l, k_f), stored [f][l][n].
class far_field_tensor {
public:
  far_field_tensor() = default;
  explicit far_field_tensor(acquisition_config config) : config_(std::move(config)) {
    config_.validate();
    values_.assign(config_.frequency_count() * config_.incident_count() * config_.observation_count, complex{});
  }

  const acquisition_config& config() const { return config_; }
  std::size_t frequencies() const { return config_.frequency_count(); }
  std::size_t incidents() const { return config_.incident_count(); }
  std::size_t observations() const { return config_.observation_count; }

  complex& at(std::size_t f, std::size_t l, std::size_t n) { return values_[offset(f, l) + check_n(n)]; }
  const complex& at(std::size_t f, std::size_t l, std::size_t n) const { return values_[offset(f, l) + check_n(n)]; }

  /// Observation row for one (frequency, incident direction) pair.
  std::vector<complex> row(std::size_t f, std::size_t l) const {
    const auto o = offset(f, l);
    return {values_.begin() + static_cast<std::ptrdiff_t>(o),
            values_.begin() + static_cast<std::ptrdiff_t>(o + observations())};
  }
  void set_row(std::size_t f, std::size_t l, const std::vector<complex>& r) {
    if (r.size() != observations()) throw std::invalid_argument("row length does not match observation count");
    const auto o = offset(f, l);
    for (std::size_t n = 0; n < r.size(); ++n) values_[o + n] = r[n];
  }

  std::vector<complex>& values() { return values_; }
  const std::vector<complex>& values() const { return values_; }

  bool all_finite() const {
    for (const auto& v : values_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

private:
  std::size_t offset(std::size_t f, std::size_t l) const {
    if (f >= frequencies() || l >= incidents()) throw std::out_of_range("far-field tensor index out of range");
    return (f * incidents() + l) * observations();
  }
  std::size_t check_n(std::size_t n) const {
    if (n >= observations()) throw std::out_of_range("observation index out of range");
    return n;
  }

  acquisition_config config_;
  std::vector<complex> values_;
};

} // namespace dsm
