#pragma once

// Cylindrical Bessel functions of the first kind for real arguments, plus the
// Jacobi-Anger plane-wave series and the J0^2 + J1^2 envelope.

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsm {

using complex = std::complex<double>;

inline constexpr int max_bessel_order = 64;

// Past this |x| the ascending series loses too many digits to cancellation.
inline constexpr double bessel_series_limit = 12.0;

class unsupported_order : public std::domain_error {
public:
  explicit unsupported_order(int order)
      : std::domain_error("Bessel order " + std::to_string(order) +
                          " outside supported range [0, " +
                          std::to_string(max_bessel_order) + "]") {}
};

namespace detail {

inline void check_bessel_args(int max_order, double x) {
  if (max_order < 0 || max_order > max_bessel_order) throw unsupported_order(max_order);
  if (!std::isfinite(x)) throw std::domain_error("Bessel argument must be finite");
}

// Ascending series sum_j (-1)^j (x/2)^(2j+n) / (j! (j+n)!).
inline double bessel_j_series(int order, double x) {
  const double half = 0.5 * x;
  double term = 1.0;
  for (int i = 1; i <= order; ++i) term *= half / i;
  if (term == 0.0) return 0.0;
  const double q = half * half;
  double sum = term;
  for (int j = 1; j < 200; ++j) {
    term *= -q / (static_cast<double>(j) * (j + order));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && j > half) break;
  }
  return sum;
}

// Miller backward recurrence normalized by J0 + 2 sum_k J_2k = 1. Fills
// out[0..max_order] for x > 0.
inline void bessel_j_miller(int max_order, double x, std::vector<double>& out) {
  const double top = std::max<double>(max_order, x);
  int start = static_cast<int>(top + 30.0 + std::sqrt(40.0 * top));
  start += start % 2;

  out.assign(static_cast<std::size_t>(max_order) + 1, 0.0);
  const double two_over_x = 2.0 / x;
  double next = 0.0;  // b_{j+1}
  double cur = 1e-300; // b_j
  double norm = 0.0;
  for (int j = start; j > 0; --j) {
    const double prev = j * two_over_x * cur - next; // b_{j-1}
    next = cur;
    cur = prev;
    if (std::abs(cur) > 1e250) {
      cur *= 1e-250;
      next *= 1e-250;
      norm *= 1e-250;
      for (auto& v : out) v *= 1e-250;
    }
    const int idx = j - 1;
    if (idx <= max_order) out[static_cast<std::size_t>(idx)] = cur;
    if (idx > 0 && idx % 2 == 0) norm += 2.0 * cur;
  }
  norm += cur;
  for (auto& v : out) v /= norm;
}

} // namespace detail

/// J_0(x), ..., J_max_order(x). One recurrence pass for the whole ladder, so
/// prefer this over repeated bessel_j calls when a series needs every order.
inline std::vector<double> bessel_j_sequence(int max_order, double x) {
  detail::check_bessel_args(max_order, x);
  std::vector<double> out(static_cast<std::size_t>(max_order) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  const double ax = std::abs(x);
  if (ax <= bessel_series_limit) {
    for (int n = 0; n <= max_order; ++n) out[static_cast<std::size_t>(n)] = detail::bessel_j_series(n, ax);
  } else {
    detail::bessel_j_miller(max_order, ax, out);
  }
  if (x < 0.0) {
    for (int n = 1; n <= max_order; n += 2) out[static_cast<std::size_t>(n)] = -out[static_cast<std::size_t>(n)];
  }
  return out;
}

/// J_order(x) for 0 <= order <= max_bessel_order.
inline double bessel_j(int order, double x) {
  detail::check_bessel_args(order, x);
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  const double ax = std::abs(x);
  double v;
  if (ax <= bessel_series_limit) {
    v = detail::bessel_j_series(order, ax);
  } else {
    std::vector<double> ladder;
    detail::bessel_j_miller(order, ax, ladder);
    v = ladder.back();
  }
  return (x < 0.0 && order % 2 == 1) ? -v : v;
}

/// Truncation order for the Jacobi-Anger series at argument z.
inline int series_truncation(double z) {
  return static_cast<int>(std::ceil(std::abs(z))) + 25;
}

/// Same rule, clipped to the supported Bessel order range.
inline int clipped_series_truncation(double z) {
  return std::min(series_truncation(z), max_bessel_order);
}

/// J0(z) + 2 sum_{s=1}^{terms} i^s J_s(z) cos(s phi), the truncated expansion
/// of exp(i z cos phi).
inline complex jacobi_anger(double z, double phi, int terms) {
  if (terms < 1) throw std::invalid_argument("jacobi_anger needs at least one term");
  const auto j = bessel_j_sequence(terms, z);
  static constexpr complex i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  complex sum = 0.0;
  for (int s = terms; s >= 1; --s) {
    sum += i_pow[s % 4] * (j[static_cast<std::size_t>(s)] * std::cos(s * phi));
  }
  return j[0] + 2.0 * sum;
}

/// Lambda(x) = J0(x)^2 + J1(x)^2, the envelope from the indefinite integral
/// of J0^2.
inline double lambda_envelope(double x) {
  if (!(x >= 0.0)) throw std::domain_error("lambda_envelope requires x >= 0");
  const auto j = bessel_j_sequence(1, x);
  return j[0] * j[0] + j[1] * j[1];
}

} // namespace dsm
