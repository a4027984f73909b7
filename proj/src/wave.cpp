// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#include "bgkstab/wave.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "bgkstab/error.hpp"
#include "bgkstab/numerics.hpp"
#include "bgkstab/quadrature.hpp"
#include "bgkstab/rk4.hpp"

namespace bgk {
namespace {

// Potential-well increment V(b) - V(a) with V' = density - 1, V(phi_star) = 0.
double well_increment(const Profile& p, double a, double b) {
  if (a == b) return 0.0;
  auto f = [&](double s) { return density_moment(p, s) - 1.0; };
  // The integrand carries ~1e-12 absolute noise from the inner density
  // quadrature, so the error estimate stalls near noise * |b - a|; the
  // absolute tolerance must sit above that floor.
  const double noise = 1e-11 * std::abs(b - a) * (1.0 + std::abs(f(a)) + std::abs(f(b)));
  return integrate_or_throw(f, a, b, noise + 1e-300, 1e-12, 200);
}

}  // namespace

double find_equilibrium_level(const Profile& p) {
  auto g = [&](double s) { return density_moment(p, s) - 1.0; };
  const double floor =
      (p.e_min > -std::numeric_limits<double>::infinity()) ? p.e_min + 1e-9 * p.theta
                                                           : -std::numeric_limits<double>::infinity();
  double lo = std::max(floor, -0.1 * p.theta);
  double hi = 0.1 * p.theta;
  for (int it = 0; it < 10; ++it) {
    if (g(lo) * g(hi) < 0.0)
      return find_root_brent(g, lo, hi, 1e-15 * std::max(1.0, p.theta));
    lo = std::max(floor, 2.0 * lo);
    hi *= 2.0;
  }
  fail(Status::EventNotFound, "no neutral level found near zero");
}

Wave construct_wave(const Profile& p, double amplitude, int grid_n,
                    int steps_per_period) {
  if (!(amplitude > 0.0)) fail(Status::Domain, "wave amplitude must be positive");
  if (grid_n < 16 || grid_n % 2 != 0)
    fail(Status::Domain, "wave grid_n must be even and at least 16");
  if (steps_per_period < 64) fail(Status::Domain, "steps_per_period must be at least 64");

  const double phi_star = find_equilibrium_level(p);
  const double q0 = q_moment(p, phi_star);
  if (q0 <= 1e-12 / p.theta)
    fail(Status::NonOscillatory,
         "density response at the neutral level does not support oscillation");

  const double phi_plus = phi_star + amplitude;
  // The well must rise monotonically from the neutral level to the peak;
  // density <= 1 anywhere on that leg means the restoring force flips.
  for (int i = 1; i <= 32; ++i) {
    const double s = phi_star + amplitude * static_cast<double>(i) / 32.0;
    if (density_moment(p, s) <= 1.0)
      fail(Status::AmplitudeTooLarge, "potential well folds over below the requested peak");
  }
  const double energy = well_increment(p, phi_star, phi_plus);
  if (!(energy > 0.0)) fail(Status::AmplitudeTooLarge, "degenerate well energy");

  // Scan downward for the lower turning point V = energy. Passing a point
  // with density >= 1 before reaching that level means the well tops out
  // (barrier) and the requested orbit is not closed.
  const double step = amplitude / 8.0;
  double prev = phi_star;
  double v_prev = 0.0;
  double blo = 0.0, bhi = 0.0;
  bool bracketed = false;
  for (int i = 1; i <= 10000 && !bracketed; ++i) {
    double s = phi_star - step * static_cast<double>(i);
    bool clamped = false;
    if (s < p.e_min) {
      s = p.e_min;
      clamped = true;
    }
    const double v_cur = v_prev + well_increment(p, prev, s);
    if (v_cur >= energy) {
      blo = s;
      bhi = prev;
      bracketed = true;
      break;
    }
    if (density_moment(p, s) >= 1.0)
      fail(Status::AmplitudeTooLarge,
           "barrier below the neutral level blocks the lower turning point");
    if (clamped)
      fail(Status::AmplitudeTooLarge,
           "orbit would sample the distribution below its domain floor");
    prev = s;
    v_prev = v_cur;
  }
  if (!bracketed) fail(Status::Internal, "turning point scan exhausted");

  auto vg = [&](double s) { return well_increment(p, phi_star, s) - energy; };
  const double phi_minus =
      find_root_brent(vg, blo, bhi, 1e-13 * amplitude + 1e-16);
  if (density_moment(p, phi_minus) >= 1.0 - 1e-10)
    fail(Status::AmplitudeTooLarge, "lower turning point degenerates at the barrier");

  // Half-period trajectory. One event pass locates the turning time, then a
  // fixed-step pass lands exactly on the grid nodes.
  auto rhs = [&](const std::array<double, 2>& y, std::array<double, 2>& dy) {
    dy[0] = y[1];
    dy[1] = 1.0 - density_moment(p, y[0]);
  };
  const double p_est = 2.0 * M_PI / std::sqrt(q0);
  const double h_ev = p_est / static_cast<double>(steps_per_period);
  const std::array<double, 2> y0{phi_plus, 0.0};
  auto ev = integrate_to_event<2>(
      rhs, y0, h_ev, 40.0 * p_est, [](const std::array<double, 2>& y) { return y[1]; },
      +1, 0.0, 1e-3 * amplitude * std::sqrt(q0));
  if (!ev.found)
    fail(Status::EventNotFound, "no lower turning point along the trajectory");
  const double p_half = ev.t;
  // floor covers the ~1e-12 absolute moment accuracy propagated through the
  // well integral and divided by the turning-point slope
  const double match_tol = 1e-6 * amplitude + 1e-10;
  if (std::abs(ev.y[0] - phi_minus) > match_tol)
    fail(Status::IdentityViolation,
         "trajectory turning point disagrees with the energy turning point");

  const int n_half = grid_n / 2;
  const int sub = std::max(1, (steps_per_period + grid_n - 1) / grid_n);
  const double h_sub = p_half / static_cast<double>(n_half * sub);

  Wave w;
  w.grid_n = grid_n;
  w.period = 2.0 * p_half;
  w.phi_minus = phi_minus;
  w.phi_plus = phi_plus;
  w.phi_star = phi_star;
  w.synthetic = false;
  w.x.resize(grid_n + 1);
  w.phi.resize(grid_n + 1);
  w.dphi.resize(grid_n + 1);
  w.ddphi.resize(grid_n + 1);
  w.q.resize(grid_n + 1);

  std::array<double, 2> y = y0;
  w.phi[0] = y[0];
  w.dphi[0] = y[1];
  for (int i = 1; i <= n_half; ++i) {
    for (int s = 0; s < sub; ++s) rk4_step<2>(rhs, y, h_sub);
    w.phi[i] = y[0];
    w.dphi[i] = y[1];
  }
  if (std::abs(w.phi[n_half] - phi_minus) > match_tol ||
      std::abs(w.dphi[n_half]) > 1e-6 * amplitude * std::sqrt(q0) + 1e-8)
    fail(Status::IdentityViolation, "grid trajectory misses the turning point");
  // snap the exact turning data, then mirror so the symmetry holds bitwise
  w.phi[n_half] = phi_minus;
  w.dphi[n_half] = 0.0;
  for (int i = 1; i <= n_half; ++i) {
    w.phi[n_half + i] = w.phi[n_half - i];
    w.dphi[n_half + i] = -w.dphi[n_half - i];
  }

  for (int i = 0; i <= grid_n; ++i)
    w.x[i] = w.period * static_cast<double>(i) / static_cast<double>(grid_n);
  for (int i = 0; i <= n_half; ++i) {
    w.ddphi[i] = 1.0 - density_moment(p, w.phi[i]);
    w.q[i] = q_moment(p, w.phi[i]);
  }
  for (int i = 1; i <= n_half; ++i) {
    w.ddphi[n_half + i] = w.ddphi[n_half - i];
    w.q[n_half + i] = w.q[n_half - i];
  }

  for (int i = 0; i < n_half; ++i)
    if (!(w.phi[i + 1] < w.phi[i]))
      fail(Status::IdentityViolation, "potential is not strictly decreasing on the half period");

  // first-integral drift check: 0.5 dphi^2 + V(phi) must stay at the well energy
  double v_node = energy;
  double prev_phi = w.phi[0];
  for (int i = 1; i <= n_half; ++i) {
    v_node += well_increment(p, prev_phi, w.phi[i]);
    prev_phi = w.phi[i];
    const double drift = 0.5 * w.dphi[i] * w.dphi[i] + v_node - energy;
    // the amplitude floor absorbs the absolute moment accuracy inside V
    if (std::abs(drift) > 1e-8 * energy + 3e-11 * amplitude)
      fail(Status::IdentityViolation, "first integral drift exceeds tolerance");
  }

  w.interp = QuinticHermite(0.0, w.period / grid_n, w.phi, w.dphi, w.ddphi, true);
  w.profile = p;
  w.profile.e_min = phi_minus;
  return w;
}

Wave synthetic_wave(const Profile& p, double period, int grid_n) {
  if (!(period > 0.0)) fail(Status::Domain, "wave period must be positive");
  if (grid_n < 16 || grid_n % 2 != 0)
    fail(Status::Domain, "wave grid_n must be even and at least 16");
  Wave w;
  w.profile = p;
  w.profile.e_min = 0.0;
  w.period = period;
  w.grid_n = grid_n;
  w.phi_minus = 0.0;
  w.phi_plus = 0.0;
  w.phi_star = 0.0;
  w.synthetic = true;
  w.x.resize(grid_n + 1);
  for (int i = 0; i <= grid_n; ++i)
    w.x[i] = period * static_cast<double>(i) / static_cast<double>(grid_n);
  w.phi.assign(grid_n + 1, 0.0);
  w.dphi.assign(grid_n + 1, 0.0);
  w.ddphi.assign(grid_n + 1, 0.0);
  w.q.assign(grid_n + 1, q_moment(p, 0.0));
  w.interp = QuinticHermite(0.0, period / grid_n, w.phi, w.dphi, w.ddphi, true);
  return w;
}

const std::vector<double>& q_profile(const Wave& w) { return w.q; }

}  // namespace bgk
