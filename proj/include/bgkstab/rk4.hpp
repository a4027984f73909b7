// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "bgkstab/error.hpp"

namespace bgk {

// Classic fixed-step RK4 on std::array states. The callable has signature
// rhs(const State&, State&) and must be time-independent (all systems here are
// autonomous). Event localization bisects inside the bracketing step, taking a
// single RK4 substep from the step's start for each trial point, so the event
// time inherits the integrator's local accuracy.

template <std::size_t N, class Rhs>
inline void rk4_step(const Rhs& rhs, std::array<double, N>& y, double h) {
  std::array<double, N> k1, k2, k3, k4, tmp;
  rhs(y, k1);
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
  rhs(tmp, k2);
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
  rhs(tmp, k3);
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * k3[i];
  rhs(tmp, k4);
  for (std::size_t i = 0; i < N; ++i)
    y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

template <std::size_t N>
struct EventResult {
  bool found = false;
  double t = 0.0;
  std::array<double, N> y{};
  long steps = 0;
};

// Integrate with fixed step h until event(y) crosses zero in the requested
// direction (+1 rising, -1 falling, 0 either). The event is armed only after
// |event| exceeds arm_eps, so starting exactly on the event surface is fine.
// Gives up (found=false) once t exceeds t_max.
template <std::size_t N, class Rhs, class Ev>
EventResult<N> integrate_to_event(const Rhs& rhs, std::array<double, N> y0, double h,
                                  double t_max, const Ev& event, int direction,
                                  double event_tol, double arm_eps) {
  EventResult<N> res;
  std::array<double, N> y = y0;
  double t = 0.0;
  double g_prev = event(y);
  bool armed = std::abs(g_prev) > arm_eps;
  while (t < t_max) {
    std::array<double, N> y_prev = y;
    rk4_step<N>(rhs, y, h);
    t += h;
    ++res.steps;
    const double g = event(y);
    if (!armed) {
      if (std::abs(g) > arm_eps) armed = true;
      g_prev = g;
      continue;
    }
    const bool crossed = (g_prev < 0.0 && g >= 0.0 && direction >= 0) ||
                         (g_prev > 0.0 && g <= 0.0 && direction <= 0);
    if (crossed) {
      // bisect on the substep length within (0, h]
      double lo = 0.0, hi = h;
      std::array<double, N> y_hit = y;
      double g_hit = g;
      for (int it = 0; it < 200; ++it) {
        if (std::abs(g_hit) <= event_tol || (hi - lo) <= 1e-16 * h) break;
        const double mid = 0.5 * (lo + hi);
        std::array<double, N> ym = y_prev;
        rk4_step<N>(rhs, ym, mid);
        const double gm = event(ym);
        const bool same_side_as_start = (g_prev < 0.0) ? (gm < 0.0) : (gm > 0.0);
        if (same_side_as_start) lo = mid; else { hi = mid; y_hit = ym; g_hit = gm; }
      }
      res.found = true;
      res.t = t - h + hi;
      res.y = y_hit;
      return res;
    }
    g_prev = g;
  }
  return res;
}

}  // namespace bgk
