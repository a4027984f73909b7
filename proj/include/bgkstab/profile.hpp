// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#pragma once

#include <string>

namespace bgk {

enum class Family { Maxwellian, Bump };

Family family_from_string(const std::string& name);
const char* family_name(Family f);

// Equilibrium distribution shape mu(e) with closed-form derivative.
//   Maxwellian: mu(e) = c_norm * exp(-e/theta)
//   Bump:       mu(e) = c_norm * (1 + kappa e^m) * exp(-e/theta), m in {1,2}
// c_norm is fixed by neutrality. e_min is the lowest energy the profile may be
// evaluated at; the exponential decay bound only applies for e >= 0.
struct Profile {
  Family family = Family::Maxwellian;
  double theta = 1.0;
  double kappa = 0.0;
  int m = 2;
  double c_norm = 1.0;
  double decay_exponent = 2.0;  // gamma in the power-law bound |mu'|(1+e^gamma) <= C
  double decay_constant = 1.0;
  double e_min = -1.0;
  // exponential majorants on e >= 0: |mu| <= maj_mu exp(-e/(2 theta)), same for mu'
  double maj_mu = 1.0;
  double maj_mu_prime = 1.0;

  double mu(double e) const;        // checks e >= e_min
  double mu_prime(double e) const;  // checks e >= e_min
};

// Builds and normalizes a profile. e_min_floor is clamped upward when the
// family itself restricts the domain (bump m=1 needs e >= -1/kappa to keep
// mu nonnegative).
Profile make_profile(Family family, double theta, double kappa, int m,
                     double e_min_floor);

// rho(phi) = integral of mu(v^2/2 + phi) dv, evaluated as
// 2 sqrt(2) * integral_0^T mu(phi + t^2) dt with an analytically bounded tail.
double density_moment(const Profile& p, double phi_val);

// q(phi) = integral of mu'(v^2/2 + phi) dv, same substitution.
double q_moment(const Profile& p, double phi_val);

// Truncation point T for the substituted velocity integrals such that the
// discarded tail is below ~1e-16 of the majorant scale.
double moment_cutoff(const Profile& p, double phi_val);

}  // namespace bgk
