// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#include "bgkstab/profile.hpp"

#include <algorithm>
#include <cmath>

#include "bgkstab/error.hpp"
#include "bgkstab/quadrature.hpp"

namespace bgk {

namespace {

// unnormalized shape and its derivative
double shape(const Profile& p, double e) {
  const double ex = std::exp(-e / p.theta);
  if (p.family == Family::Maxwellian || p.kappa == 0.0) return ex;
  const double em = (p.m == 1) ? e : e * e;
  return (1.0 + p.kappa * em) * ex;
}

double shape_prime(const Profile& p, double e) {
  const double ex = std::exp(-e / p.theta);
  if (p.family == Family::Maxwellian || p.kappa == 0.0) return -ex / p.theta;
  const double em = (p.m == 1) ? e : e * e;
  const double dem = (p.m == 1) ? 1.0 : 2.0 * e;
  return (p.kappa * dem - (1.0 + p.kappa * em) / p.theta) * ex;
}

void check_domain(const Profile& p, double e) {
  if (e < p.e_min - 1e-12 * (1.0 + std::abs(p.e_min)))
    fail(Status::Domain, "profile evaluated below e_min");
}

double substituted_moment(const Profile& p, double phi_val, bool derivative) {
  check_domain(p, phi_val);
  const double T = moment_cutoff(p, phi_val);
  auto f = [&](double t) {
    const double e = phi_val + t * t;
    return derivative ? shape_prime(p, e) : shape(p, e);
  };
  // Smooth integrand after the e = phi + t^2 substitution. The absolute floor
  // keeps the tolerance reachable where the signed integrand nearly cancels
  // (q crosses zero for bump profiles).
  const double st = std::sqrt(p.theta);
  const double scale =
      std::abs(f(0.0)) + std::abs(f(st)) + std::abs(f(2.0 * st)) + std::abs(f(3.0 * st));
  const double abs_tol = 1e-14 * scale * T + 1e-300;
  const double val = integrate_or_throw(f, 0.0, T, abs_tol, 1e-12, 400);
  return 2.0 * std::sqrt(2.0) * p.c_norm * val;
}

}  // namespace

Family family_from_string(const std::string& name) {
  if (name == "maxwellian") return Family::Maxwellian;
  if (name == "bump") return Family::Bump;
  fail(Status::Config, "unknown profile family '" + name + "'");
}

const char* family_name(Family f) {
  return f == Family::Maxwellian ? "maxwellian" : "bump";
}

double Profile::mu(double e) const {
  check_domain(*this, e);
  return c_norm * shape(*this, e);
}

double Profile::mu_prime(double e) const {
  check_domain(*this, e);
  return c_norm * shape_prime(*this, e);
}

double moment_cutoff(const Profile& p, double phi_val) {
  // tail bound: integral_T^inf A exp(-(phi + t^2)/(2 theta)) dt
  //           <= A exp(-phi/(2 theta)) (theta/T) exp(-T^2/(2 theta))
  // pick T so (theta/T) exp(-T^2/(2 theta)) <= 1e-16; phi-independent.
  const double th = p.theta;
  double T = std::sqrt(2.0 * th * 40.0);
  for (int it = 0; it < 4; ++it) {
    const double arg = std::max(1.0, th / T) * 1e16;
    T = std::sqrt(2.0 * th * std::log(arg) + 2.0 * th * std::log(std::max(1.0, T / th)));
  }
  // never truncate inside the classically reachable negative-phi region
  const double floor_T = (phi_val < 0.0) ? std::sqrt(-phi_val) + std::sqrt(2.0 * th) : 0.0;
  return std::max(T, floor_T + T);
}

Profile make_profile(Family family, double theta, double kappa, int m,
                     double e_min_floor) {
  if (theta <= 0.0) fail(Status::Config, "profile theta must be positive");
  if (kappa < 0.0) fail(Status::Config, "profile kappa must be nonnegative");
  if (m != 1 && m != 2) fail(Status::Config, "profile m must be 1 or 2");
  Profile p;
  p.family = family;
  p.theta = theta;
  p.kappa = (family == Family::Maxwellian) ? 0.0 : kappa;
  p.m = m;
  p.c_norm = 1.0;
  p.e_min = e_min_floor;
  if (family == Family::Bump && m == 1 && kappa > 0.0)
    p.e_min = std::max(p.e_min, -1.0 / kappa);  // keep mu >= 0

  // neutrality: c_norm * 2 sqrt(2) int_0^T shape(t^2) dt = 1
  const double raw = substituted_moment(p, 0.0, false);
  if (!std::isfinite(raw) || raw <= 0.0)
    fail(Status::Config, "profile normalization integral is degenerate");
  p.c_norm = 1.0 / raw;

  // exponential majorants A with c_norm*|shape| <= A exp(-e/(2 theta)) on e >= 0,
  // and the power-law decay constant for gamma = 2; simple grid maximization.
  double a_mu = 0.0, a_mup = 0.0, c_pow = 0.0;
  const double e_hi = 80.0 * theta;
  for (int i = 0; i <= 4000; ++i) {
    const double e = e_hi * i / 4000.0;
    const double w = std::exp(e / (2.0 * theta));
    a_mu = std::max(a_mu, p.c_norm * std::abs(shape(p, e)) * w);
    const double sp = p.c_norm * std::abs(shape_prime(p, e));
    a_mup = std::max(a_mup, sp * w);
    c_pow = std::max(c_pow, sp * (1.0 + e * e));
  }
  p.maj_mu = a_mu * 1.0001;
  p.maj_mu_prime = a_mup * 1.0001;
  p.decay_exponent = 2.0;
  p.decay_constant = c_pow * 1.0001;
  return p;
}

double density_moment(const Profile& p, double phi_val) {
  return substituted_moment(p, phi_val, false);
}

double q_moment(const Profile& p, double phi_val) {
  return substituted_moment(p, phi_val, true);
}

}  // namespace bgk
