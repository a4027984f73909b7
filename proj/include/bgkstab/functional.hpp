// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#pragma once

#include <string>
#include <vector>

#include "bgkstab/sturm.hpp"
#include "bgkstab/wave.hpp"

namespace bgk {

enum class Verdict { Unstable, Inconclusive };

std::string verdict_name(Verdict v);

struct IdentityPair {
  double lhs = 0.0;
  double rhs = 0.0;
};

// Sign test on the ground mode. The quartic integral runs over half a period;
// a value below the numerical error bound certifies a growing perturbation.
struct CriterionReport {
  double lambda0 = 0.0;
  double criterion_integral = 0.0;
  IdentityPair identity_ibp1;  // integral of u0'^4 vs 3 integral (q+l0) (u0 u0')^2
  IdentityPair identity_ibp2;  // integral of (q+l0) u0^4 vs 3 integral (u0 u0')^2
  Verdict verdict = Verdict::Inconclusive;
  double error_bound = 0.0;  // separates "negative" from "numerically zero"
};

// Quadratic form on test functions psi with Dirichlet endpoints:
//   gradient part  integral of |psi'|^2 - q |psi|^2 over one period,
//   kinetic parts  energy integrals of mu'(e) (orbit average of psi)^2
// split over passing and trapped particle orbits. A negative total certifies
// instability for the full linearized dynamics.
struct FunctionalBreakdown {
  double term_gradient = 0.0;
  double term_free = 0.0;
  double term_trapped = 0.0;
  double total = 0.0;
  double error_budget = 0.0;
};

// psi = u0 * u0' on the grid. Inherits u0's reflection symmetry as
// antisymmetry about the half period and vanishes at both endpoints.
std::vector<double> test_function(const std::vector<double>& u0, double grid_h);

CriterionReport criterion(const Wave& w, const GroundState& gs);

// Resolution overrides for the energy integrals; zero keeps the built-in
// choice. e_max truncates the passing-particle integral (the discarded tail
// is still charged to the budget), eps_sep widens the excluded band around
// the separatrix, energy_panels caps the adaptive subdivision depth.
struct FunctionalOptions {
  int energy_panels = 0;
  double e_max = 0.0;
  double eps_sep = 0.0;
};

FunctionalBreakdown lin_functional(const Wave& w, const std::vector<double>& psi);

FunctionalBreakdown lin_functional(const Wave& w, const std::vector<double>& psi,
                                   const FunctionalOptions& opts);

}  // namespace bgk
