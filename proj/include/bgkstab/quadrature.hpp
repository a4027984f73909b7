// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#pragma once

#include <functional>

namespace bgk {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // achieved error estimate (sum of |kronrod - gauss| over panels)
  int evals = 0;
  int panels = 0;
  bool converged = false;
};

// Single Gauss7/Kronrod15 panel on [a,b]; error estimate is |K15 - G7|.
QuadResult gk15_panel(const std::function<double(double)>& f, double a, double b);

// The 15 Kronrod abscissae and weights mapped to [a,b], in ascending order.
// Lets callers that cache expensive per-node state apply the same rule
// gk15_panel uses without re-evaluating through the functional interface.
void gk15_points(double a, double b, double xs[15], double ws[15]);

// Adaptive panel subdivision, worst panel first, until
//   sum(panel errors) <= max(abs_tol, rel_tol * |integral|)
// or max_panels is reached (converged=false, achieved estimate still reported).
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, double rel_tol, int max_panels = 200);

// As above but throws Error(Status::Quadrature) carrying the achieved estimate
// when the tolerance is not reached.
double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, double rel_tol, int max_panels = 200,
                          double* error_out = nullptr);

// Fixed composite GK15 over a prescribed panel edge list (edges ascending).
// No adaptivity: deterministic node set independent of the integrand.
QuadResult integrate_panels(const std::function<double(double)>& f,
                            const double* edges, int n_edges);

}  // namespace bgk
