// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#pragma once

#include <vector>

#include "bgkstab/interp.hpp"
#include "bgkstab/profile.hpp"

namespace bgk {

// Periodic potential profile on [0, period]. Arrays hold grid_n + 1 samples,
// x[0] = 0, x[grid_n] = period. The potential peaks at x = 0, reaches its
// minimum at half period, and the second half mirrors the first exactly
// (phi even, dphi odd about x = period/2, to the bit).
struct Wave {
  Profile profile;  // copy of the input profile with e_min tightened to phi_minus
  double period = 0.0;
  int grid_n = 0;  // grid intervals per period, always even
  std::vector<double> x;
  std::vector<double> phi;
  std::vector<double> dphi;
  std::vector<double> ddphi;  // 1 - density(phi), exact at nodes
  std::vector<double> q;      // density derivative along the wave
  double phi_minus = 0.0;
  double phi_plus = 0.0;
  double phi_star = 0.0;
  bool synthetic = false;  // spatially uniform state, no trapped region

  QuinticHermite interp;  // periodic C2 representation of phi

  double phi_at(double xx) const { return interp.eval(xx); }
  double dphi_at(double xx) const { return interp.deriv(xx); }
  double ddphi_at(double xx) const { return interp.deriv2(xx); }
};

// Level where the density equals the neutralizing background. Profiles are
// normalized so this sits at zero up to quadrature roundoff.
double find_equilibrium_level(const Profile& p);

// Builds the wave by integrating phi'' = 1 - density(phi) from the peak
// phi_star + amplitude down to the turning point and mirroring. Throws
// NonOscillatory when the linearized response cannot oscillate and
// AmplitudeTooLarge when no admissible lower turning point exists (barrier
// crossing, degenerate turning, or the profile domain floor).
Wave construct_wave(const Profile& p, double amplitude, int grid_n = 1024,
                    int steps_per_period = 4096);

// Spatially uniform state: phi identically zero, q constant, period free.
// Exact solution of the field equation; used to probe the spectral machinery
// where everything is known in closed form.
Wave synthetic_wave(const Profile& p, double period, int grid_n = 1024);

const std::vector<double>& q_profile(const Wave& w);

}  // namespace bgk
