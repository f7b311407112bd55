// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "dsm/dsm.hpp"
#include "oracles.hpp"

using dsm::complex;
using dsm::vec2;
using std::numbers::pi;

namespace {

const double lambda_ref = 0.5;
const double k_ref = 2 * pi / lambda_ref;

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

dsm::scene single(vec2 c, double l, double angle) {
  dsm::scene s;
  s.cracks.emplace_back(c, l, angle);
  return s;
}

dsm::acquisition_config config(std::vector<double> ks, std::size_t n_obs, std::vector<double> angles) {
  dsm::acquisition_config c;
  c.wavenumbers = std::move(ks);
  c.observation_count = n_obs;
  c.incident_angles = std::move(angles);
  return c;
}

std::vector<vec2> centers(const dsm::scene& s) {
  std::vector<vec2> out;
  for (const auto& c : s.cracks) out.push_back(c.center);
  return out;
}

double max_diff(const std::vector<complex>& a, const std::vector<complex>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void bessel_identities() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst0 = 0.0, worst1 = 0.0;
  for (double kr = 0.0; kr <= 20.0; kr += 0.25)
    for (double a = 0.0; a < 2 * pi; a += 0.4) {
      const vec2 x{kr * std::cos(a), kr * std::sin(a)};
      worst0 = std::max(worst0, std::abs(oracle::uniform_direction_sum(360, 1.0, x) - 2 * pi * dsm::bessel_j(0, kr)));
      for (double b : {0.0, 1.0, 2.5, 4.2}) {
        const vec2 phi = dsm::unit_vector(b);
        const complex expect = complex(0.0, 2 * pi) * std::cos(a - b) * dsm::bessel_j(1, kr);
        worst1 = std::max(worst1, std::abs(oracle::first_order_direction_sum(360, 1.0, x, phi) - expect));
      }
    }
  const double t = seconds_since(t0);
  report(1, worst0 < 1e-9 && worst1 < 1e-9 && t < 1.0,
         fmt("zeroth-order err %.2e, first-order err %.2e (< 1e-9), %.3f s", worst0, worst1, t));
}

void jacobi_anger_truncation() {
  double worst = 0.0;
  for (int a = 0; a < 50; ++a) {
    const double z = 20.0 * a / 49.0;
    for (int b = 0; b < 50; ++b) {
      const double phi = 2 * pi * b / 50.0;
      worst = std::max(worst, std::abs(dsm::jacobi_anger(z, phi, dsm::series_truncation(z)) -
                                       std::exp(complex(0.0, z * std::cos(phi)))));
    }
  }
  report(2, worst < 1e-10, fmt("max err %.2e on 50x50 (z <= 20) (< 1e-10)", worst));
}

void oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto s = single({0.2, 0.3}, 0.05, 0.4);
  const auto t = dsm::simulate_asymptotic(s, config({k_ref}, 360, {pi / 2}), dsm::asymptotic_order::first);
  const dsm::imaging_grid g{};
  const double linf = dsm::map_distance(dsm::indicator_single(t, 0, 0, g), dsm::predict_structure1(s, k_ref, g)).linf;
  const double secs = seconds_since(t0);
  report(3, linf < 0.05 && secs < 30.0, fmt("linf %.2e (< 0.05) at N=360 on 201x201, %.2f s", linf, secs));
}

double order1_gap(double l) {
  const auto s = single({0.1, -0.2}, l, 0.7);
  const auto cfg = config({k_ref}, 64, {pi / 2});
  const auto full = dsm::far_field(s, k_ref, {0, 1}, cfg);
  auto approx = dsm::farfield_order1(s, k_ref, {0, 1}, 64);
  double scale = 0.0;
  for (auto& v : approx) {
    v *= dsm::order1_normalization(k_ref);
    scale = std::max(scale, std::abs(v));
  }
  return max_diff(full, approx) / scale;
}

void forward_validity() {
  const double recip = dsm::reciprocity_residual(single({0.1, 0.3}, 0.05, 0.8), k_ref,
                                                 config({k_ref}, 16, dsm::uniform_angles(16)));

  // Long enough crack that the coarse rules are not yet resolved.
  const auto s = single({0, 0}, 0.5, 0.3);
  const auto cfg = config({k_ref}, 30, {pi / 2});
  const auto f8 = dsm::far_field(s, k_ref, {0, 1}, cfg, {8});
  const auto f16 = dsm::far_field(s, k_ref, {0, 1}, cfg, {16});
  const auto f32 = dsm::far_field(s, k_ref, {0, 1}, cfg, {32});
  const double factor = max_diff(f8, f16) / max_diff(f16, f32);

  std::string gaps;
  bool monotone = true;
  double prev = INFINITY;
  for (double l : {0.05, 0.02, 0.01, 0.005}) {
    const double g = order1_gap(l);
    monotone = monotone && g <= prev;
    prev = g;
    gaps += fmt(" %.3g", g);
  }
  report(4, recip < 1e-6 && factor >= 4.0 && monotone,
         fmt("reciprocity %.2e (< 1e-6); convergence factor %.1f (>= 4); gaps%s non-increasing: %s", recip, factor,
             gaps.c_str(), monotone ? "yes" : "no"));
}

void traditional_reproduction() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto s = dsm::reference_scene();
  const auto t = dsm::simulate_full(s, config({k_ref}, 30, {pi / 2}));
  const auto rep = dsm::find_local_maxima(dsm::indicator_single(t, 0, 0, dsm::imaging_grid{}), 0.2, 0.5, &s);
  bool all = true;
  std::string dists;
  for (const auto& c : rep.per_crack) {
    all = all && c.distance <= lambda_ref / 4;
    dists += fmt(" %.3f", c.distance);
  }
  const double secs = seconds_since(t0);
  report(5, rep.peaks.size() >= 3 && all && secs < 120.0,
         fmt("%zu peaks (>= 3); nearest-peak distances%s (<= 0.125); %.2f s", rep.peaks.size(), dists.c_str(), secs));
}

void length_dependence() {
  const auto s = dsm::reference_scene(0.05, 0.04, 0.03);
  const double expect = std::log(0.025) / std::log(0.015);
  const auto cfg = config({k_ref}, 30, {pi / 2});
  auto ratio = [&](const dsm::far_field_tensor& t) {
    const auto m = dsm::indicator_single(t, 0, 0, dsm::imaging_grid{});
    const auto p1 = dsm::strongest_near(m, s.cracks[0].center, lambda_ref / 4);
    const auto p3 = dsm::strongest_near(m, s.cracks[2].center, lambda_ref / 4);
    return (p1 && p3) ? p3->value / p1->value : NAN;
  };
  const double r1 = ratio(dsm::simulate_asymptotic(s, cfg, dsm::asymptotic_order::first));
  const double rf = ratio(dsm::simulate_full(s, cfg));
  const bool ok1 = std::abs(r1 / expect - 1) <= 0.2;
  const bool okf = std::abs(rf / expect - 1) <= 0.3;
  report(6, ok1 && okf,
         fmt("expected %.4f; order-1 %.4f (%+.1f%%, within 20%%); full %.4f (%+.1f%%, within 30%%)", expect, r1,
             100 * (r1 / expect - 1), rf, 100 * (rf / expect - 1)));
}

void corollary_bounds() {
  const double l = 0.1 / k_ref;
  const vec2 c{0.1, 0.2};
  const auto s = single(c, l, 0.6);
  double near_ratio = 0.0, ring1_ratio = 0.0, ring_ratio = 0.0;
  for (double dang : {0.0, 0.6, 1.5, 2.8}) {
    const vec2 d = dsm::unit_vector(dang);
    const auto at_c = dsm::structure_terms_at(s, k_ref, d, c);
    for (double kr = 0.0; kr <= 0.2; kr += 0.01)
      for (double a = 0.0; a < 2 * pi; a += 0.3) {
        const auto t = dsm::structure_terms_at(s, k_ref, d, c + (kr / k_ref) * dsm::unit_vector(a));
        near_ratio = std::max(near_ratio, std::abs(t.phi2) / std::abs(t.phi1));
      }
    double ring1 = 0.0, ring2 = 0.0;
    for (double kr = 30.0; kr <= 40.0; kr += 0.05)
      for (double a = 0.0; a < 2 * pi; a += 0.2) {
        const auto t = dsm::structure_terms_at(s, k_ref, d, c + (kr / k_ref) * dsm::unit_vector(a));
        ring1 = std::max(ring1, std::abs(t.phi1));
        ring2 = std::max(ring2, std::abs(t.phi2));
      }
    ring1_ratio = std::max(ring1_ratio, ring1 / std::abs(at_c.phi1));
    ring_ratio = std::max(ring_ratio, std::max(ring1, ring2) / std::max(std::abs(at_c.phi1), std::abs(at_c.phi2)));
  }
  report(7, near_ratio < 0.01 && ring1_ratio < 0.2 && ring_ratio < 0.2,
         fmt("near |phi2|/|phi1| max %.2e (< 0.01); ring |phi1| / center %.3f, ring max term / center max term %.3f "
             "(< 0.2)",
             near_ratio, ring1_ratio, ring_ratio));
}

void incident_shift() {
  const auto s = dsm::reference_scene();
  const double cell = 2.0 / 200.0;
  auto peak_near = [&](std::size_t m, double angle) {
    const auto t = dsm::simulate_asymptotic(s, config({k_ref}, 30, {angle}), dsm::asymptotic_order::second);
    return dsm::strongest_near(dsm::indicator_single(t, 0, 0, dsm::imaging_grid{}), s.cracks[m].center, lambda_ref / 4)
        ->position;
  };
  std::string detail;
  bool any = false;
  for (std::size_t m = 0; m < s.size(); ++m) {
    const double a = s.cracks[m].rotation;
    const vec2 along = peak_near(m, a);
    const vec2 turned = peak_near(m, a + pi / 6);
    const double shift = dsm::distance(along, s.cracks[m].center);
    const bool moved = dsm::distance(along, turned) > 0.5 * cell;
    const bool ok = shift >= cell && moved;
    any = any || ok;
    detail += fmt(" crack %zu: shift %.3f, changes with d: %s;", m, shift, moved ? "yes" : "no");
  }
  report(8, any, "d = tangent, order-2 data;" + detail);
}

void multi_direction() {
  const auto s = dsm::reference_scene();
  const auto cs = centers(s);
  auto level = [&](std::size_t big_l) {
    const auto t =
        dsm::simulate_asymptotic(s, config({k_ref}, 30, dsm::uniform_angles(big_l)), dsm::asymptotic_order::first);
    return dsm::artifact_level(dsm::indicator_aif(t, 0, dsm::imaging_grid{}), cs, lambda_ref / 2);
  };
  const double three = level(3), eight = level(8);
  report(9, eight < three, fmt("artifact level L=8 %.4f < L=3 %.4f", eight, three));
}

void multi_frequency() {
  const auto s = dsm::reference_scene();
  const auto ks = dsm::wavenumbers_from_wavelengths(0.3, 0.7, 5);
  const auto t = dsm::simulate_full(s, config(ks, 30, {pi / 2}));
  const auto rep = dsm::find_local_maxima(dsm::indicator_mif(t, 0, dsm::imaging_grid{}), 0.2, 0.5, &s);
  bool all = true;
  std::string dists;
  for (const auto& c : rep.per_crack) {
    all = all && c.distance <= lambda_ref / 4;
    dists += fmt(" %.3f", c.distance);
  }

  const double k1 = 2 * pi / 0.7, kf = 2 * pi / 0.3;
  const auto mif = oracle::first_side_lobe([&](double r) { return dsm::mif_envelope(k1, kf, r); }, 1.0, 100000);
  const auto j0sq = oracle::first_side_lobe(
      [&](double r) {
        const double j = dsm::bessel_j(0, k_ref * r);
        return j * j;
      },
      1.0, 100000);
  report(10, all && mif.height < j0sq.height,
         fmt("localization distances%s (<= 0.125): %s; first side-lobe envelope %.4f at r=%.3f vs J0^2 %.4f at "
             "r=%.3f: %s",
             dists.c_str(), all ? "ok" : "no", mif.height, mif.r, j0sq.height, j0sq.r,
             mif.height < j0sq.height ? "lower" : "NOT lower"));
}

} // namespace

int main() {
  const std::vector<std::function<void()>> criteria{bessel_identities, jacobi_anger_truncation, oracle_equivalence,
                                                    forward_validity,  traditional_reproduction, length_dependence,
                                                    corollary_bounds,  incident_shift,           multi_direction,
                                                    multi_frequency};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), false, std::string("threw: ") + e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
