// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>
#include <vector>

#include "bgkstab/error.hpp"
#include "bgkstab/profile.hpp"
#include "doctest.h"

using namespace bgk;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

// Closed-form densities for cross checks, integrated by hand from the
// Gaussian moments int t^{2k} exp(-t^2/theta) dt.
double density_m2(double theta, double kappa, double phi) {
  const double a = 1.0 + 0.75 * kappa * theta * theta;
  return std::exp(-phi / theta) *
         (1.0 + kappa * phi * phi + kappa * theta * phi + 0.75 * kappa * theta * theta) / a;
}

double density_m1(double theta, double kappa, double phi) {
  const double a = 1.0 + 0.5 * kappa * theta;
  return std::exp(-phi / theta) * (1.0 + kappa * phi + 0.5 * kappa * theta) / a;
}

}  // namespace

TEST_SUITE("profile") {

TEST_CASE("maxwellian moments match closed forms") {
  for (double theta : {1.0, 0.7}) {
    auto p = make_profile(Family::Maxwellian, theta, 0.0, 2, -kInf);
    for (double phi : {-0.4, 0.0, 0.3, 1.7}) {
      const double rho = std::exp(-phi / theta);
      CHECK(std::abs(density_moment(p, phi) - rho) <= 1e-10 * rho);
      CHECK(std::abs(q_moment(p, phi) + rho / theta) <= 1e-10 * rho / theta);
    }
  }
}

TEST_CASE("bump densities match closed forms") {
  for (double theta : {1.0, 1.3}) {
    for (double kappa : {4.0, 8.0}) {
      auto p = make_profile(Family::Bump, theta, kappa, 2, -kInf);
      for (double phi : {-0.2, 0.0, 0.5, 2.0}) {
        const double rho = density_m2(theta, kappa, phi);
        CHECK(std::abs(density_moment(p, phi) - rho) <= 1e-10 * rho);
      }
    }
  }
  auto p1 = make_profile(Family::Bump, 1.0, 4.0, 1, -kInf);
  for (double phi : {-0.2, 0.0, 1.0}) {
    const double rho = density_m1(1.0, 4.0, phi);
    CHECK(std::abs(density_moment(p1, phi) - rho) <= 1e-10 * rho);
  }
}

TEST_CASE("normalization pins unit density at zero level") {
  std::vector<Profile> ps;
  ps.push_back(make_profile(Family::Maxwellian, 1.0, 0.0, 2, -kInf));
  ps.push_back(make_profile(Family::Bump, 1.0, 8.0, 2, -kInf));
  ps.push_back(make_profile(Family::Bump, 0.9, 4.0, 1, -kInf));
  ps.push_back(make_profile(Family::Bump, 1.0, 4.0, 2, -kInf));
  for (const auto& p : ps) CHECK(std::abs(density_moment(p, 0.0) - 1.0) <= 1e-12);
}

TEST_CASE("q is the derivative of the density") {
  std::vector<Profile> ps;
  ps.push_back(make_profile(Family::Maxwellian, 1.0, 0.0, 2, -kInf));
  ps.push_back(make_profile(Family::Bump, 1.0, 8.0, 2, -kInf));
  ps.push_back(make_profile(Family::Bump, 1.0, 4.0, 1, -kInf));
  for (const auto& p : ps) {
    for (int i = 0; i < 20; ++i) {
      const double phi = -0.2 + 2.0 * i / 19.0;
      const double del = 1e-5;
      const double fd =
          (density_moment(p, phi + del) - density_moment(p, phi - del)) / (2.0 * del);
      CHECK(std::abs(q_moment(p, phi) - fd) <= 1e-7);
    }
  }
  // closed form at the zero level for the quartic bump
  for (double theta : {1.0, 1.3}) {
    for (double kappa : {5.0, 8.0}) {
      auto p = make_profile(Family::Bump, theta, kappa, 2, -kInf);
      const double kt2 = kappa * theta * theta;
      const double q0 = (0.25 * kt2 - 1.0) / (theta * (1.0 + 0.75 * kt2));
      CHECK(std::abs(q_moment(p, 0.0) - q0) <= 1e-10 * std::abs(q0));
    }
  }
}

TEST_CASE("bump distribution peaks strictly inside the energy range") {
  auto p = make_profile(Family::Bump, 1.0, 4.0, 2, -kInf);
  const double e_star = 1.0 + std::sqrt(3.0) / 2.0;  // root of 4e^2 - 8e + 1
  CHECK(p.mu_prime(e_star - 0.3) > 0.0);
  CHECK(p.mu_prime(e_star + 0.3) < 0.0);
  CHECK(std::abs(p.mu_prime(e_star)) <= 1e-13);
}

TEST_CASE("distribution decays under the stored majorants") {
  auto p = make_profile(Family::Bump, 1.0, 8.0, 2, -kInf);
  for (int i = 0; i <= 60; ++i) {
    const double e = static_cast<double>(i);
    const double cap = std::exp(-e / (2.0 * p.theta));
    CHECK(p.mu(e) <= p.maj_mu * cap * (1.0 + 1e-9));
    CHECK(std::abs(p.mu_prime(e)) <= p.maj_mu_prime * cap * (1.0 + 1e-9));
    CHECK(std::abs(p.mu_prime(e)) * (1.0 + std::pow(e, p.decay_exponent)) <=
          p.decay_constant * (1.0 + 1e-9));
  }
}

TEST_CASE("domain floors are enforced") {
  auto p = make_profile(Family::Bump, 1.0, 4.0, 1, -kInf);
  CHECK(p.e_min == doctest::Approx(-0.25));
  CHECK_THROWS_AS(density_moment(p, -0.3), Error);
  try {
    density_moment(p, -0.3);
  } catch (const Error& err) {
    CHECK(err.code() == Status::Domain);
  }
  CHECK(p.mu(-0.25) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(make_profile(Family::Bump, -1.0, 4.0, 2, -kInf), Error);
  CHECK_THROWS_AS(make_profile(Family::Bump, 1.0, -0.5, 2, -kInf), Error);
  CHECK_THROWS_AS(make_profile(Family::Bump, 1.0, 4.0, 3, -kInf), Error);
  try {
    make_profile(Family::Bump, 1.0, 4.0, 3, -kInf);
  } catch (const Error& err) {
    CHECK(err.code() == Status::Config);
  }
}

TEST_CASE("family names round trip") {
  CHECK(family_from_string("maxwellian") == Family::Maxwellian);
  CHECK(family_from_string("bump") == Family::Bump);
  CHECK_THROWS_AS(family_from_string("ring"), Error);
}

}  // TEST_SUITE
