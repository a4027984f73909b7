// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#pragma once

#include <vector>

#include "bgkstab/wave.hpp"

namespace bgk {

// Dirichlet spectrum of -psi'' - q(x) psi on (0, period).
struct Spectrum {
  double h = 0.0;                      // fine-grid spacing
  std::vector<double> lambda;          // two-grid extrapolated eigenvalues, ascending
  std::vector<double> lambda_fine;     // raw fine-grid eigenvalues
  std::vector<std::vector<double>> u;  // eigenfunctions on the wave grid, unit L2 norm
};

// Lowest `count` eigenpairs by Sturm-sequence bisection on the second-order
// finite-difference matrix, eigenvalues improved by extrapolation against the
// nested half-resolution grid. Eigenfunctions carry zero endpoints, integral
// of u^2 equal to one, and first interior value positive. When the grid allows
// it (n divisible by 4) the eigenvectors are extrapolated the same way, which
// buys two extra orders for the quartic integrals built from them downstream.
Spectrum solve_eigen(const Wave& w, int count);

struct GroundState {
  double lambda0 = 0.0;       // extrapolated
  double lambda0_fine = 0.0;  // raw fine-grid value; the gap bounds lambda0's error
  double lambda1 = 0.0;
  std::vector<double> u0;
  std::vector<double> u1;
  double grid_h = 0.0;
};

// Two lowest modes with the layout checks the stability theory relies on:
// lambda0 must be negative, and for self-consistent waves lambda1 must vanish
// within the discretization tolerance (translation mode). Uniform synthetic
// states skip the kernel check since nothing pins their second eigenvalue.
// A positive lambda1_tol replaces the built-in kernel tolerance.
GroundState ground_state(const Wave& w, double lambda1_tol = 0.0);

}  // namespace bgk
