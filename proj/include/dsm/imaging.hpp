#pragma once

// Direct sampling indicators on far-field data.
//
// Every indicator correlates a data row against the steering vector
// e^{-i k theta_n . x} at each grid point and max-normalizes the result.
// Per point, sums run n ascending, then l, then f.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dsm/acquisition.hpp"
#include "dsm/geometry.hpp"
#include "dsm/grid.hpp"
#include "dsm/scene.hpp"

namespace dsm {

/// e^{-i k theta_n . x}, n = 0..N-1.
inline std::vector<complex> steering_vector(double k, std::size_t observation_count, vec2 x) {
  if (observation_count == 0) throw std::invalid_argument("steering vector needs N >= 1");
  std::vector<complex> out(observation_count);
  for (std::size_t n = 0; n < observation_count; ++n)
    out[n] = std::polar(1.0, -k * dot(observation_direction(n, observation_count), x));
  return out;
}

/// <data, steer> = sum_n data_n conj(steer_n).
inline complex correlate(std::span<const complex> data, std::span<const complex> steer) {
  if (data.size() != steer.size()) throw std::invalid_argument("correlate: length mismatch");
  complex sum = 0.0;
  for (std::size_t n = 0; n < data.size(); ++n) sum += data[n] * std::conj(steer[n]);
  return sum;
}

namespace detail {

// conj(steering) factored per axis: e^{i k x cos theta_n} e^{i k y sin theta_n}.
class steering_table {
public:
  steering_table(const imaging_grid& grid, double k, std::size_t n_obs) : n_obs_(n_obs) {
    along_x_.resize(grid.nx * n_obs);
    along_y_.resize(grid.ny * n_obs);
    for (std::size_t n = 0; n < n_obs; ++n) {
      const vec2 theta = observation_direction(n, n_obs);
      for (std::size_t i = 0; i < grid.nx; ++i) along_x_[i * n_obs + n] = std::polar(1.0, k * grid.x(i) * theta.x);
      for (std::size_t j = 0; j < grid.ny; ++j) along_y_[j * n_obs + n] = std::polar(1.0, k * grid.y(j) * theta.y);
    }
  }

  complex correlate(std::span<const complex> data, std::size_t i, std::size_t j) const {
    const complex* ax = &along_x_[i * n_obs_];
    const complex* ay = &along_y_[j * n_obs_];
    complex sum = 0.0;
    for (std::size_t n = 0; n < n_obs_; ++n) sum += data[n] * (ax[n] * ay[n]);
    return sum;
  }

private:
  std::size_t n_obs_;
  std::vector<complex> along_x_;
  std::vector<complex> along_y_;
};

inline std::vector<double> raw_over_grid(const imaging_grid& grid,
                                         const std::function<double(std::size_t, std::size_t)>& fn) {
  grid.validate();
  std::vector<double> raw(grid.size());
  for_each_row(grid.ny, [&](std::size_t j) {
    for (std::size_t i = 0; i < grid.nx; ++i) raw[grid.index(i, j)] = fn(i, j);
  });
  return raw;
}

inline double l2_norm(std::span<const complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

// |<row, steer>| / (||row|| ||steer||); empty optional for an all-zero row.
inline std::optional<std::vector<double>> single_raw(const far_field_tensor& tensor, std::size_t f, std::size_t l,
                                                     const imaging_grid& grid) {
  const auto row = tensor.row(f, l);
  const double data_norm = l2_norm(row);
  if (!(data_norm > 0.0)) return std::nullopt;
  const double scale = 1.0 / (data_norm * std::sqrt(static_cast<double>(row.size())));
  const steering_table table(grid, tensor.config().wavenumbers[f], tensor.observations());
  return raw_over_grid(grid, [&](std::size_t i, std::size_t j) { return std::abs(table.correlate(row, i, j)) * scale; });
}

inline indicator_map zero_map(const imaging_grid& grid) {
  return {grid, std::vector<double>(grid.size(), 0.0), true};
}

} // namespace detail

/// Single-direction indicator for data row (f, l).
inline indicator_map indicator_single(const far_field_tensor& tensor, std::size_t f, std::size_t l,
                                      const imaging_grid& grid) {
  grid.validate();
  auto raw = detail::single_raw(tensor, f, l, grid);
  if (!raw) return detail::zero_map(grid);
  return normalize_map(grid, std::move(*raw));
}

/// Pointwise maximum of the per-direction maps at frequency f.
inline indicator_map indicator_if(const far_field_tensor& tensor, std::size_t f, const imaging_grid& grid) {
  grid.validate();
  std::vector<double> best(grid.size(), 0.0);
  for (std::size_t l = 0; l < tensor.incidents(); ++l) {
    const auto map = indicator_single(tensor, f, l, grid);
    for (std::size_t p = 0; p < best.size(); ++p) best[p] = std::max(best[p], map.values[p]);
  }
  return normalize_map(grid, std::move(best));
}

/// |sum_l e^{-i k d_l . x} <psi(., d_l), steer(x)>| over the grid.
inline indicator_map indicator_aif(const far_field_tensor& tensor, std::size_t f, const imaging_grid& grid) {
  grid.validate();
  const double k = tensor.config().wavenumbers.at(f);
  const detail::steering_table table(grid, k, tensor.observations());
  std::vector<std::vector<complex>> rows;
  std::vector<vec2> dirs;
  for (std::size_t l = 0; l < tensor.incidents(); ++l) {
    rows.push_back(tensor.row(f, l));
    dirs.push_back(tensor.config().incident_direction(l));
  }
  return normalize_map(grid, detail::raw_over_grid(grid, [&](std::size_t i, std::size_t j) {
    const vec2 x = grid.point(i, j);
    complex sum = 0.0;
    for (std::size_t l = 0; l < rows.size(); ++l)
      sum += std::polar(1.0, -k * dot(dirs[l], x)) * table.correlate(rows[l], i, j);
    return std::abs(sum);
  }));
}

/// |sum_f e^{-i k_f d . x} <psi(., d, k_f), steer_f(x)>| for incident index l.
inline indicator_map indicator_mif(const far_field_tensor& tensor, std::size_t l, const imaging_grid& grid) {
  grid.validate();
  if (tensor.frequencies() < 2) throw std::invalid_argument("multi-frequency indicator needs at least two wavenumbers");
  const auto& ks = tensor.config().wavenumbers;
  const vec2 d = tensor.config().incident_direction(l);
  std::vector<detail::steering_table> tables;
  std::vector<std::vector<complex>> rows;
  for (std::size_t f = 0; f < tensor.frequencies(); ++f) {
    tables.emplace_back(grid, ks[f], tensor.observations());
    rows.push_back(tensor.row(f, l));
  }
  return normalize_map(grid, detail::raw_over_grid(grid, [&](std::size_t i, std::size_t j) {
    const vec2 x = grid.point(i, j);
    complex sum = 0.0;
    for (std::size_t f = 0; f < rows.size(); ++f)
      sum += std::polar(1.0, -ks[f] * dot(d, x)) * tables[f].correlate(rows[f], i, j);
    return std::abs(sum);
  }));
}

struct peak {
  vec2 position;
  double value;
  std::size_t index; // grid index
};

struct crack_match {
  std::size_t crack;
  double distance; // to nearest reported peak; +inf when there are none
  double value;    // that peak's value
  vec2 position;
};

struct peak_report {
  std::vector<peak> peaks;
  std::vector<crack_match> per_crack;
};

namespace detail {

// Strictly greater than each neighbor, or equal with a larger index; and
// strictly above at least one neighbor so plateaus never count.
inline bool is_local_max(const indicator_map& map, std::size_t i, std::size_t j) {
  const auto& g = map.grid;
  const std::size_t self = g.index(i, j);
  const double v = map.values[self];
  bool above_one = false;
  for (int dj = -1; dj <= 1; ++dj) {
    for (int di = -1; di <= 1; ++di) {
      if (di == 0 && dj == 0) continue;
      const auto ii = static_cast<std::ptrdiff_t>(i) + di;
      const auto jj = static_cast<std::ptrdiff_t>(j) + dj;
      if (ii < 0 || jj < 0 || ii >= static_cast<std::ptrdiff_t>(g.nx) || jj >= static_cast<std::ptrdiff_t>(g.ny)) continue;
      const std::size_t other = g.index(static_cast<std::size_t>(ii), static_cast<std::size_t>(jj));
      const double w = map.values[other];
      if (w > v || (w == v && other < self)) return false;
      if (w < v) above_one = true;
    }
  }
  return above_one;
}

} // namespace detail

/// Grid-local maxima at or above `floor`, greedily thinned so kept peaks are
/// at least min_separation apart, in descending value order. With a scene,
/// also reports the nearest kept peak for each crack center.
inline peak_report find_local_maxima(const indicator_map& map, double min_separation, double floor,
                                     const scene* cracks = nullptr) {
  if (!(min_separation > 0.0)) throw std::invalid_argument("min_separation must be positive");
  const auto& g = map.grid;
  std::vector<peak> candidates;
  for (std::size_t j = 0; j < g.ny; ++j)
    for (std::size_t i = 0; i < g.nx; ++i)
      if (map.at(i, j) >= floor && detail::is_local_max(map, i, j))
        candidates.push_back({g.point(i, j), map.at(i, j), g.index(i, j)});
  std::stable_sort(candidates.begin(), candidates.end(), [](const peak& a, const peak& b) {
    return a.value > b.value || (a.value == b.value && a.index < b.index);
  });

  peak_report report;
  for (const auto& c : candidates) {
    bool clear = true;
    for (const auto& kept : report.peaks)
      if (distance(kept.position, c.position) < min_separation) clear = false;
    if (clear) report.peaks.push_back(c);
  }

  if (cracks) {
    for (std::size_t m = 0; m < cracks->size(); ++m) {
      crack_match match{m, std::numeric_limits<double>::infinity(), 0.0, {}};
      for (const auto& p : report.peaks) {
        const double dist = distance(p.position, cracks->cracks[m].center);
        if (dist < match.distance) match = {m, dist, p.value, p.position};
      }
      report.per_crack.push_back(match);
    }
  }
  return report;
}

struct map_metrics {
  double linf;
  double l2; // root mean square
};

inline map_metrics map_distance(const indicator_map& a, const indicator_map& b) {
  if (!(a.grid == b.grid) || a.values.size() != b.values.size())
    throw std::invalid_argument("map_distance: grids differ");
  double worst = 0.0, sq = 0.0;
  for (std::size_t p = 0; p < a.values.size(); ++p) {
    const double d = std::abs(a.values[p] - b.values[p]);
    worst = std::max(worst, d);
    sq += d * d;
  }
  return {worst, a.values.empty() ? 0.0 : std::sqrt(sq / static_cast<double>(a.values.size()))};
}

/// Largest map value farther than `radius` from every listed center.
inline double artifact_level(const indicator_map& map, const std::vector<vec2>& centers, double radius) {
  double worst = 0.0;
  for (std::size_t p = 0; p < map.values.size(); ++p) {
    const vec2 x = map.grid.point(p);
    bool outside = true;
    for (const auto& c : centers)
      if (distance(x, c) <= radius) outside = false;
    if (outside) worst = std::max(worst, map.values[p]);
  }
  return worst;
}

/// Largest value within `radius` of `center`, with its location.
inline std::optional<peak> strongest_near(const indicator_map& map, vec2 center, double radius) {
  std::optional<peak> best;
  for (std::size_t p = 0; p < map.values.size(); ++p) {
    const vec2 x = map.grid.point(p);
    if (distance(x, center) > radius) continue;
    if (!best || map.values[p] > best->value) best = peak{x, map.values[p], p};
  }
  return best;
}

} // namespace dsm
