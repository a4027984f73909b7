// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#pragma once

#include <string>
#include <vector>

#include "bgkstab/wave.hpp"

namespace bgk {

// Phase-space reconstruction of a candidate growing mode at rate lambda,
// driven by a field shape psi given on the wave grid. dist is row-major:
// dist[i * vs.size() + j] belongs to (xs[i], vs[j]).
//
// transport_residual is the RMS of the linearized transport equation
//   lambda F + v dF/dx - phi' dF/dv + psi' v mu'(e)
// over interior cells, with derivatives taken by central differences, so it
// shrinks with the mode grid for any lambda and psi. poisson_residual is the
// RMS of psi'' - integral of F dv; it is a diagnostic that only becomes small
// near a dispersion root, and even there only when psi is close to the true
// mode shape.
struct GrowingMode {
  double lambda = 0.0;
  std::vector<double> psi;          // input shape, wave grid (grid_n + 1 nodes)
  std::vector<double> field_shape;  // -psi' on the wave grid
  std::vector<double> xs;           // mode columns, nx nodes in [0, period)
  std::vector<double> vs;           // symmetric velocity grid
  std::vector<double> dist;         // nx * nv values
  std::vector<unsigned char> excluded;  // 1 where the separatrix band was skipped
  double transport_residual = 0.0;
  double poisson_residual = 0.0;
};

// Log-spaced scan of the scalar dispersion function h(lambda) with the first
// sign-change bracket refined by bisection. caveat is always set: a root of
// the scalar projection signals instability along the supplied shape but is
// not a certified spectral eigenvalue.
struct DispersionScan {
  std::vector<double> lambdas;
  std::vector<double> h_values;
  bool bracket_found = false;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  bool root_found = false;
  double root = 0.0;
  std::string caveat;
};

// Smallest eigenvalue of the symmetrized Galerkin section of the dispersion
// operator in a periodic trigonometric basis, scanned over lambda. Its zero
// crossing bounds the scalar root from above: the matrix sees every shape in
// the basis span, not just the supplied one.
struct GalerkinScan {
  int basis_size = 0;
  std::vector<double> lambdas;
  std::vector<double> min_eigs;
  bool root_found = false;
  double root = 0.0;
};

// Symmetric velocity grid with n nodes (odd, so v = 0 is a node) reaching the
// energy where the profile tail is negligible: v_max = sqrt(2 (E_max - phi_minus)).
std::vector<double> make_vgrid(const Wave& w, int n = 401);

// Exponentially weighted average of psi over the backward characteristic
// through (x, v):
//   (1 - exp(-lambda T))^{-1} integral_{-T}^{0} lambda e^{lambda s} psi(X(s)) ds
// where T is the orbit period, so the infinite history is captured exactly by
// the geometric closure rather than truncation. e must match v^2/2 + phi(x).
// Energies inside the separatrix exclusion band are rejected; the degenerate
// orbit at the potential minimum returns psi(x) exactly.
double orbit_weighted_average(const Wave& w, const std::vector<double>& psi,
                              double e, double x, double v, double lambda);

// F(x, v) = mu'(e) (orbit_weighted_average - psi(x)) on the nx * nv grid,
// with cells in the separatrix band set to zero and flagged in excluded.
// nx_cells must divide the wave grid so mode columns sit on wave nodes.
GrowingMode assemble_mode(const Wave& w, const std::vector<double>& psi,
                          double lambda, const std::vector<double>& vgrid,
                          int nx_cells = 64);

// Velocity reflection (x, v) -> (x, -v) together with lambda -> -lambda,
// which maps a solution of the transport equation to another one with the
// same source. Residuals are recomputed for the reflected rate.
GrowingMode reflect_mode(const Wave& w, const GrowingMode& m);

// Scalar dispersion function
//   h(lambda) = -integral psi (psi'' - integral F_lambda dv) dx,
// evaluated in orbit coordinates: the velocity integral collapses to a sum of
// per-orbit Fourier weights lambda^2 / (lambda^2 + omega_k^2), which is exact
// in lambda once the per-orbit spectra are known. h tends to the quadratic
// form of lin_functional as lambda -> 0 and to integral psi'^2 as
// lambda -> infinity.
double dispersion_scalar(const Wave& w, const std::vector<double>& psi, double lambda);

// Scans h over [lambda_lo, lambda_hi] (log-spaced, defaults to
// (2 pi / period) * [1e-3, 1e3] when the bounds are zero), brackets the first
// sign change and bisects it until |h| <= 1e-8 |h(bracket top)|. A scan with
// no sign change is reported through the flags, not an error.
DispersionScan find_growth_rate(const Wave& w, const std::vector<double>& psi,
                                double lambda_lo = 0.0, double lambda_hi = 0.0,
                                int n_scan = 61);

// Galerkin variant over the first basis_size periodic trig shapes
// sin(2 pi m x / P), cos(2 pi m x / P) - 1. The per-orbit spectra are cached,
// so the lambda sweep and the bisection reuse one set of orbit traces.
GalerkinScan galerkin_scan(const Wave& w, int basis_size, double lambda_lo = 0.0,
                           double lambda_hi = 0.0, int n_scan = 41);

}  // namespace bgk
