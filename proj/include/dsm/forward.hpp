#pragma once

// Full-wave far-field data for sound-soft straight cracks.
//
// The scattered field is the single-layer potential -S phi with density phi
// fixed by S phi = u_inc on the cracks, so the total field vanishes there.
// Each crack is parameterized as y(s) = c + l s t with s = cos(tau), which
// absorbs the inverse-square-root endpoint behavior of phi: the unknown
// psi(tau) = l sin(tau) phi(y(cos tau)) is smooth. The kernel splits as
//
//   Phi(x, y) = -1/(2 pi) ln|cos t - cos tau| J0(k r) + K2(t, tau)
//
// where the logarithmic part is integrated exactly against the cosine
// interpolant at the Chebyshev nodes tau_j = (2j + 1) pi / (2n) and K2 is
// smooth, handled by the plain Gauss-Chebyshev rule.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dsm/acquisition.hpp"
#include "dsm/geometry.hpp"
#include "dsm/scene.hpp"
#include "dsm/specfun.hpp"

namespace dsm {

struct quadrature_spec {
  int nodes_per_crack = 64;

  void validate() const {
    if (nodes_per_crack < 8 || nodes_per_crack % 2 != 0)
      throw std::invalid_argument("nodes_per_crack must be an even integer >= 8");
  }
};

class solver_error : public std::runtime_error {
public:
  solver_error(const std::string& what, double condition)
      : std::runtime_error(what + " (condition estimate " + std::to_string(condition) + ")"),
        condition_(condition) {}
  double condition_estimate() const { return condition_; }

private:
  double condition_;
};

class scene_rejected : public std::invalid_argument {
public:
  explicit scene_rejected(std::vector<scene_violation> v)
      : std::invalid_argument(summary(v)), violations_(std::move(v)) {}
  const std::vector<scene_violation>& violations() const { return violations_; }

private:
  static std::string summary(const std::vector<scene_violation>& v) {
    std::string s = "scene rejected:";
    for (const auto& x : v)
      if (x.level == scene_violation::severity::hard) s += " " + x.describe() + ";";
    return s;
  }
  std::vector<scene_violation> violations_;
};

/// Constant in front of the far-field functional of the density.
inline complex far_field_prefactor(double k) {
  return -complex(1.0, 1.0) / (4.0 * std::sqrt(std::numbers::pi * k));
}

/// Ratio between the full far field and the first-order small-crack formula
/// in the limit l -> 0. The two normalizations differ by this constant only.
inline complex order1_normalization(double k) { return -far_field_prefactor(k); }

namespace detail {

// Fundamental solution (i/4) H0^(1)(k r).
inline complex helmholtz_green(double k, double r) {
  const double z = k * r;
  return complex(-0.25 * std::cyl_neumann(0.0, z), 0.25 * bessel_j(0, z));
}

} // namespace detail

/// Dense Nystrom discretization of the crack integral equation at one
/// wavenumber, factorized once and reused for any number of incident waves.
class crack_scattering_solver {
public:
  crack_scattering_solver(const scene& s, double k, quadrature_spec quad = {}) : scene_(s), k_(k), quad_(quad) {
    quad_.validate();
    auto violations = validate_scene(scene_, k_);
    if (has_hard_violation(violations)) throw scene_rejected(std::move(violations));
    if (scene_.empty()) return;
    build_nodes();
    assemble_and_factor();
  }

  double wavenumber() const { return k_; }
  std::size_t unknowns() const { return points_.size(); }
  /// 1 / rcond of the factorized system (infinity-free; 0 for an empty scene).
  double condition_estimate() const { return condition_; }

  /// psi at every node, crack-major.
  std::vector<complex> density(vec2 d) const {
    const std::size_t total = unknowns();
    if (total == 0) return {};
    Eigen::VectorXcd rhs(static_cast<Eigen::Index>(total));
    for (std::size_t i = 0; i < total; ++i)
      rhs(static_cast<Eigen::Index>(i)) = std::exp(complex(0.0, k_ * dot(d, points_[i])));
    const Eigen::VectorXcd sol = lu_.solve(rhs);
    std::vector<complex> out(total);
    for (std::size_t i = 0; i < total; ++i) out[i] = sol(static_cast<Eigen::Index>(i));
    return out;
  }

  /// psi_inf(theta) for one observation direction given a density.
  complex far_field_at(const std::vector<complex>& psi, vec2 theta) const {
    complex sum = 0.0;
    const double w = std::numbers::pi / quad_.nodes_per_crack;
    for (std::size_t j = 0; j < points_.size(); ++j)
      sum += std::exp(complex(0.0, -k_ * dot(theta, points_[j]))) * psi[j];
    return far_field_prefactor(k_) * w * sum;
  }

  /// psi_inf(theta_n, d), n = 0..N-1.
  std::vector<complex> far_field(vec2 d, std::size_t observation_count) const {
    std::vector<complex> out(observation_count, complex{});
    if (scene_.empty()) return out;
    const auto psi = density(d);
    for (std::size_t n = 0; n < observation_count; ++n)
      out[n] = far_field_at(psi, observation_direction(n, observation_count));
    return out;
  }

private:
  void build_nodes() {
    const int n = quad_.nodes_per_crack;
    tau_.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) tau_[static_cast<std::size_t>(j)] = (2.0 * j + 1.0) * std::numbers::pi / (2.0 * n);
    for (const auto& c : scene_.cracks)
      for (double t : tau_) points_.push_back(crack_point(c, std::cos(t)));
  }

  // Weights R_j(tau_i) with sum_j R_j(tau_i) g(tau_j) = int_0^pi ln|cos tau_i - cos tau| g(tau) dtau
  // exactly for cosine polynomials of degree < n.
  std::vector<double> log_weights() const {
    const int n = quad_.nodes_per_crack;
    std::vector<double> w(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double sum = std::log(2.0);
        for (int m = 1; m < n; ++m)
          sum += 2.0 * std::cos(m * tau_[static_cast<std::size_t>(i)]) * std::cos(m * tau_[static_cast<std::size_t>(j)]) / m;
        w[static_cast<std::size_t>(i * n + j)] = -std::numbers::pi / n * sum;
      }
    }
    return w;
  }

  void assemble_and_factor() {
    const int n = quad_.nodes_per_crack;
    const std::size_t total = points_.size();
    const double w = std::numbers::pi / n;
    const double inv_two_pi = 0.5 / std::numbers::pi;
    const auto logw = log_weights();

    Eigen::MatrixXcd a(static_cast<Eigen::Index>(total), static_cast<Eigen::Index>(total));
    for (std::size_t p = 0; p < scene_.size(); ++p) {
      const double len = scene_.cracks[p].half_length;
      const complex diag_limit(-inv_two_pi * (std::log(0.5 * k_) + std::numbers::egamma + std::log(len)), 0.25);
      for (std::size_t q = 0; q < scene_.size(); ++q) {
        for (int i = 0; i < n; ++i) {
          const std::size_t row = p * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
          for (int j = 0; j < n; ++j) {
            const std::size_t col = q * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
            complex value;
            if (p != q) {
              value = w * detail::helmholtz_green(k_, distance(points_[row], points_[col]));
            } else {
              const double gap = std::abs(std::cos(tau_[static_cast<std::size_t>(i)]) - std::cos(tau_[static_cast<std::size_t>(j)]));
              const double r = len * gap;
              const double j0 = bessel_j(0, k_ * r);
              const complex smooth =
                  i == j ? diag_limit : detail::helmholtz_green(k_, r) + inv_two_pi * j0 * std::log(gap);
              value = -inv_two_pi * logw[static_cast<std::size_t>(i * n + j)] * j0 + w * smooth;
            }
            a(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = value;
          }
        }
      }
    }
    lu_.compute(a);
    const double rc = lu_.rcond();
    condition_ = rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
    if (!std::isfinite(condition_) || rc < 1e-13)
      throw solver_error("crack integral equation is numerically singular", condition_);
  }

  scene scene_;
  double k_;
  quadrature_spec quad_;
  std::vector<double> tau_;
  std::vector<vec2> points_;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
  double condition_ = 0.0;
};

/// psi_inf(theta_n, d) for n = 0..N-1 from the full integral equation.
inline std::vector<complex> far_field(const scene& s, double k, vec2 d, const acquisition_config& config,
                                      quadrature_spec quad = {}) {
  return crack_scattering_solver(s, k, quad).far_field(d, config.observation_count);
}

/// Every (f, l) row of the tensor; one factorization per wavenumber.
inline far_field_tensor simulate_full(const scene& s, const acquisition_config& config, quadrature_spec quad = {}) {
  far_field_tensor out(config);
  for (std::size_t f = 0; f < config.frequency_count(); ++f) {
    const crack_scattering_solver solver(s, config.wavenumbers[f], quad);
    for (std::size_t l = 0; l < config.incident_count(); ++l)
      out.set_row(f, l, solver.far_field(config.incident_direction(l), config.observation_count));
  }
  return out;
}

/// max_{n,l} |psi_inf(theta_n, d_l) - psi_inf(-d_l, -theta_n)| for a
/// configuration whose incident set equals its observation set.
inline double reciprocity_residual(const scene& s, double k, const acquisition_config& config,
                                   quadrature_spec quad = {}) {
  const std::size_t n_obs = config.observation_count;
  if (config.incident_count() != n_obs)
    throw std::invalid_argument("reciprocity check needs as many incident as observation directions");
  for (std::size_t l = 0; l < n_obs; ++l) {
    const vec2 d = config.incident_direction(l);
    if (distance(d, observation_direction(l, n_obs)) > 1e-12)
      throw std::invalid_argument("incident directions must coincide with observation directions");
  }
  if (s.empty()) return 0.0;

  const crack_scattering_solver solver(s, k, quad);
  std::vector<std::vector<complex>> forward(n_obs), backward(n_obs);
  for (std::size_t l = 0; l < n_obs; ++l) forward[l] = solver.density(config.incident_direction(l));
  for (std::size_t n = 0; n < n_obs; ++n) backward[n] = solver.density(-observation_direction(n, n_obs));

  double worst = 0.0;
  for (std::size_t l = 0; l < n_obs; ++l) {
    const vec2 d = config.incident_direction(l);
    for (std::size_t n = 0; n < n_obs; ++n) {
      const complex direct = solver.far_field_at(forward[l], observation_direction(n, n_obs));
      const complex swapped = solver.far_field_at(backward[n], -d);
      worst = std::max(worst, std::abs(direct - swapped));
    }
  }
  return worst;
}

} // namespace dsm
