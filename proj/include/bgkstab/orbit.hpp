// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#pragma once

#include <vector>

#include "bgkstab/wave.hpp"

namespace bgk {

// One particle characteristic at fixed energy e = v^2/2 + phi(x), sampled at
// equispaced times over one closed period. Trapped orbits start at the lower
// turning point with v = 0 and carry exact mirror symmetry: xs[n-j] = xs[j],
// vs[n-j] = -vs[j]. Free orbits are the v > 0 branch from x = 0; the v < 0
// branch is its spatial reflection.
struct Orbit {
  bool trapped = false;
  double energy = 0.0;
  double period = 0.0;
  double alpha = 0.0;  // lower turning point (trapped), 0 for free orbits
  int n = 0;           // sample count over the closed period
  std::vector<double> xs;
  std::vector<double> vs;
  double energy_drift = 0.0;  // max sample deviation of e, relative
};

// Position in (0, period/2) where the potential crosses the trapped energy e.
double turning_point(const Wave& w, double e);

// Integrates the characteristic system with the C2 potential interpolant.
// Trapped requires phi_minus < e < phi_plus, free requires e > phi_plus;
// the separatrix energy itself is rejected.
Orbit trace_orbit(const Wave& w, double e, int n_samples = 256,
                  int steps_per_period = 4096);

// Orbit period by direct quadrature of dx / v(x), with the turning point
// singularity removed by substitution. Needs no time integration, so it is
// cheap enough to call per phase-space cell.
double orbit_period_quadrature(const Wave& w, double e);

// The orbit period measured two independent ways: time integration of the
// characteristics versus direct quadrature of dx / v(x).
struct PeriodCheck {
  double period_orbit = 0.0;
  double period_quadrature = 0.0;
};
PeriodCheck period_integral_check(const Wave& w, double e);

}  // namespace bgk
