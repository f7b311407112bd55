#pragma once

// Rectangular sampling grids and normalized indicator maps over them.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "dsm/geometry.hpp"

namespace dsm {

/// nx by ny points, x fastest; point (i, j) has index j * nx + i.
struct imaging_grid {
  double x_min = -1.0;
  double x_max = 1.0;
  double y_min = -1.0;
  double y_max = 1.0;
  std::size_t nx = 201;
  std::size_t ny = 201;

  void validate() const {
    if (!(x_min < x_max) || !(y_min < y_max)) throw std::invalid_argument("grid bounds must satisfy min < max");
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !std::isfinite(y_min) || !std::isfinite(y_max))
      throw std::invalid_argument("grid bounds must be finite");
    if (nx < 2 || ny < 2) throw std::invalid_argument("grid needs at least 2 points per axis");
  }

  std::size_t size() const { return nx * ny; }
  double dx() const { return (x_max - x_min) / static_cast<double>(nx - 1); }
  double dy() const { return (y_max - y_min) / static_cast<double>(ny - 1); }
  double x(std::size_t i) const { return x_min + static_cast<double>(i) * dx(); }
  double y(std::size_t j) const { return y_min + static_cast<double>(j) * dy(); }
  vec2 point(std::size_t i, std::size_t j) const { return {x(i), y(j)}; }
  vec2 point(std::size_t index) const { return point(index % nx, index / nx); }
  std::size_t index(std::size_t i, std::size_t j) const { return j * nx + i; }

  friend bool operator==(const imaging_grid&, const imaging_grid&) = default;
};

/// Values in [0, 1] with maximum 1, or all zero with zero_map set.
struct indicator_map {
  imaging_grid grid;
  std::vector<double> values;
  bool zero_map = false;

  double at(std::size_t i, std::size_t j) const { return values[grid.index(i, j)]; }

  std::size_t argmax() const {
    // First maximal index, so ties go to the lexicographically smaller point.
    return static_cast<std::size_t>(std::max_element(values.begin(), values.end()) - values.begin());
  }
};

inline constexpr double zero_map_threshold = 1e-300;

/// Divide raw non-negative values by their maximum.
inline indicator_map normalize_map(const imaging_grid& grid, std::vector<double> raw) {
  if (raw.size() != grid.size()) throw std::invalid_argument("raw map size does not match grid");
  indicator_map out{grid, std::move(raw), false};
  const double peak = out.values.empty() ? 0.0 : *std::max_element(out.values.begin(), out.values.end());
  if (!(peak >= zero_map_threshold)) {
    std::fill(out.values.begin(), out.values.end(), 0.0);
    out.zero_map = true;
    return out;
  }
  for (auto& v : out.values) v /= peak;
  return out;
}

namespace detail {

/// Runs fn(j) for every grid row. Each row writes only its own cells, so the
/// result does not depend on the thread schedule.
inline void for_each_row(std::size_t rows, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), rows);
  if (workers <= 1) {
    for (std::size_t j = 0; j < rows; ++j) fn(j);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t j = w; j < rows; j += workers) fn(j);
    });
  }
  for (auto& t : pool) t.join();
}

/// Raw values fn(point) over the grid.
inline std::vector<double> evaluate_on_grid(const imaging_grid& grid, const std::function<double(vec2)>& fn) {
  grid.validate();
  std::vector<double> raw(grid.size());
  for_each_row(grid.ny, [&](std::size_t j) {
    for (std::size_t i = 0; i < grid.nx; ++i) raw[grid.index(i, j)] = fn(grid.point(i, j));
  });
  return raw;
}

} // namespace detail

} // namespace dsm
