// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#include "bgkstab/orbit.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "bgkstab/error.hpp"
#include "bgkstab/numerics.hpp"
#include "bgkstab/quadrature.hpp"
#include "bgkstab/rk4.hpp"

namespace bgk {
namespace {

// harmonic period at the well bottom; bare waves may carry ddphi <= 0 there,
// then the wave period is the only available time scale
double bottom_period(const Wave& w) {
  const double curv = w.ddphi[w.grid_n / 2];
  return curv > 0.0 ? 2.0 * M_PI / std::sqrt(curv) : w.period;
}

double drift_scale(const Wave& w, double e) {
  return std::max(w.phi_plus - w.phi_minus, e - w.phi_minus);
}

}  // namespace

double turning_point(const Wave& w, double e) {
  if (!(e > w.phi_minus) || !(e < w.phi_plus))
    fail(Status::Domain, "turning point requires a trapped energy");
  auto g = [&](double x) { return w.phi_at(x) - e; };
  const double alpha = find_root_brent(g, 0.0, w.period / 2.0, 1e-15 * w.period);
  if (std::abs(w.phi_at(alpha) - e) > 1e-12 * (w.phi_plus - w.phi_minus))
    fail(Status::EventNotFound, "turning point residual too large");
  return alpha;
}

Orbit trace_orbit(const Wave& w, double e, int n_samples, int steps_per_period) {
  if (n_samples < 8 || n_samples % 2 != 0)
    fail(Status::Domain, "orbit sample count must be even and at least 8");
  if (steps_per_period < 64) fail(Status::Domain, "steps_per_period must be at least 64");
  if (!(e > w.phi_minus)) fail(Status::Domain, "energy below the potential minimum");
  if (e == w.phi_plus) fail(Status::Domain, "separatrix energy has no closed orbit");

  auto rhs = [&](const std::array<double, 2>& y, std::array<double, 2>& dy) {
    dy[0] = y[1];
    dy[1] = -w.dphi_at(y[0]);
  };

  Orbit o;
  o.energy = e;
  o.n = n_samples;
  o.trapped = e < w.phi_plus;
  o.xs.assign(n_samples, 0.0);
  o.vs.assign(n_samples, 0.0);

  const double x_tol = 1e-7 * w.period;
  double t_half = 0.0;  // half period (trapped) or full transit (free)
  std::array<double, 2> y0{};

  if (o.trapped) {
    o.alpha = turning_point(w, e);
    const double t_b = bottom_period(w);
    const double h_ev = t_b / static_cast<double>(steps_per_period);
    y0 = {o.alpha, 0.0};
    const double v_scale = std::sqrt(2.0 * (e - w.phi_minus));
    auto ev = integrate_to_event<2>(
        rhs, y0, h_ev, 200.0 * t_b + 100.0 * w.period,
        [](const std::array<double, 2>& y) { return y[1]; }, -1, 0.0,
        1e-9 * (1.0 + v_scale));
    if (!ev.found) fail(Status::EventNotFound, "trapped orbit found no upper turning point");
    t_half = ev.t;
    if (std::abs(ev.y[0] - (w.period - o.alpha)) > x_tol)
      fail(Status::IdentityViolation, "orbit turning point misses the mirror image");
    o.period = 2.0 * t_half;
  } else {
    const double v0 = std::sqrt(2.0 * (e - w.phi_plus));
    // step off the fastest speed: near-crest transits crawl at v0 and a
    // v0-scaled step would wash out the energy margin
    const double v_max = std::sqrt(2.0 * (e - w.phi_minus));
    const double h_ev = (w.period / v_max) / static_cast<double>(steps_per_period);
    y0 = {0.0, v0};
    auto ev = integrate_to_event<2>(
        rhs, y0, h_ev, 3.0 * w.period / v0,
        [&](const std::array<double, 2>& y) { return y[0] - w.period; }, +1, 0.0, 0.0);
    if (!ev.found) fail(Status::EventNotFound, "free orbit transit exceeded its budget");
    t_half = ev.t;
    o.period = t_half;
  }

  // fixed-substep pass lands exactly on the sample times
  const int m = o.trapped ? n_samples / 2 : n_samples;
  const double t_b = o.trapped ? bottom_period(w) : t_half;
  const int sub = std::max(
      1, static_cast<int>(std::ceil((t_half / m) / (t_b / steps_per_period))));
  const double h_rs = t_half / static_cast<double>(m) / static_cast<double>(sub);
  std::array<double, 2> y = y0;
  std::vector<double> xr(m + 1), vr(m + 1);
  xr[0] = y[0];
  vr[0] = y[1];
  for (int j = 1; j <= m; ++j) {
    for (int s = 0; s < sub; ++s) rk4_step<2>(rhs, y, h_rs);
    xr[j] = y[0];
    vr[j] = y[1];
  }
  if (o.trapped) {
    if (std::abs(xr[m] - (w.period - o.alpha)) > x_tol)
      fail(Status::IdentityViolation, "orbit resample misses the upper turning point");
    vr[m] = 0.0;
    for (int j = 0; j <= m; ++j) {
      o.xs[j] = xr[j];
      o.vs[j] = vr[j];
    }
    for (int j = 1; j < m; ++j) {
      o.xs[m + j] = xr[m - j];
      o.vs[m + j] = -vr[m - j];
    }
  } else {
    if (std::abs(xr[m] - w.period) > x_tol)
      fail(Status::IdentityViolation, "free orbit resample misses the period mark");
    for (int j = 0; j < m; ++j) {
      o.xs[j] = xr[j];
      o.vs[j] = vr[j];
    }
  }

  double dev = 0.0;
  for (int j = 0; j < n_samples; ++j)
    dev = std::max(dev, std::abs(0.5 * o.vs[j] * o.vs[j] + w.phi_at(o.xs[j]) - e));
  o.energy_drift = dev / drift_scale(w, e);
  return o;
}

double orbit_period_quadrature(const Wave& w, double e) {
  if (!(e > w.phi_minus)) throw Error(Status::Domain, "orbit energy at or below the potential minimum");
  if (e == w.phi_plus) throw Error(Status::Domain, "separatrix energy has no finite period");
  const double scale = w.period / std::sqrt(2.0 * (e - w.phi_minus));
  // e - phi is a difference of near-equal numbers close to a turning point;
  // flooring it at the cancellation noise keeps roundoff from forging a
  // non-integrable spike out of the benign sqrt corner
  const double floor_d =
      4.0 * 2.220446049250313e-16 * (std::abs(e) + std::abs(w.phi_plus) + std::abs(w.phi_minus));
  double fac = 1.0;
  QuadResult r;
  if (e < w.phi_plus) {
    // substitution x = alpha + u^2 removes the 1/v turning singularity;
    // the span [alpha, period/2] covers a quarter orbit
    const double alpha = turning_point(w, e);
    const double upper = std::sqrt(w.period / 2.0 - alpha);
    auto f = [&](double u) {
      const double d = e - w.phi_at(alpha + u * u);
      return 2.0 * u / std::sqrt(2.0 * std::max(d, floor_d));
    };
    fac = 4.0;
    r = integrate_adaptive(f, 0.0, upper, 1e-12 * scale, 1e-10, 800);
  } else {
    auto f = [&](double x) {
      const double d = e - w.phi_at(x);
      return 1.0 / std::sqrt(2.0 * std::max(d, floor_d));
    };
    r = integrate_adaptive(f, 0.0, w.period, 1e-12 * scale, 1e-10, 800);
  }
  // within the cancellation band around a turning point the integrand itself
  // is ulp-noisy, so the estimator saturates around 1e-7 regardless of panel
  // count; the value is still good to that level, which is plenty here
  if (!r.converged && !(r.error <= 1e-6 * std::abs(r.value)))
    fail(Status::Quadrature, "orbit period quadrature stalled above its noise cap");
  return fac * r.value;
}

PeriodCheck period_integral_check(const Wave& w, double e) {
  Orbit o = trace_orbit(w, e, 64);
  return {o.period, orbit_period_quadrature(w, e)};
}

}  // namespace bgk
