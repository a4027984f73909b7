// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#pragma once

#include <limits>
#include <string>
#include <vector>

namespace bgk {

// Run configuration, read from "[section]" / "key = value" text. Parsing is
// fail-closed: unknown sections, unknown keys, duplicate keys, and malformed
// values are all Config errors, so a typo can never silently fall back to a
// default. A zero in the override fields below means "keep the built-in".
struct ProfileConfig {
  std::string family = "bump";
  double theta = 1.0;
  double kappa = 0.0;
  int m = 2;
  double e_min = -std::numeric_limits<double>::infinity();
};

struct WaveConfig {
  double phi_plus = 0.0;          // crest offset above the equilibrium level
  double synthetic_period = 0.0;  // > 0 selects the spatially flat state
  int grid_n = 4096;
  int steps_per_period = 4096;
};

struct SpectralConfig {
  int k = 2;
  double lambda1_tol = 0.0;  // kernel acceptance width override
};

struct FunctionalConfig {
  int energy_panels = 0;  // adaptive panel budget for the energy integrals
  double e_max = 0.0;     // manual truncation of the passing-particle integral
  double eps_sep = 0.0;   // manual half-width of the separatrix exclusion
};

struct DispersionConfig {
  double lambda_lo = 0.0;  // 0, 0 selects the period-scaled default range
  double lambda_hi = 0.0;
  int n_scan = 61;
  int vgrid_n = 401;
  int nx_cells = 64;
  bool galerkin = false;
  int galerkin_k = 8;
};

struct OutputConfig {
  std::string dir = "out";
  bool json = true;
  bool csv = true;
  int verbosity = 1;
};

struct SweepConfig {
  std::vector<double> thetas;
  std::vector<double> kappas;
  std::vector<double> amps;
};

struct RunConfig {
  ProfileConfig profile;
  WaveConfig wave;
  SpectralConfig spectral;
  FunctionalConfig functional;
  DispersionConfig dispersion;
  OutputConfig output;
  SweepConfig sweep;
};

// Parses and validates; throws Status::Config on any schema or range problem.
RunConfig parse_config(const std::string& text);

// Reads the file (Status::Io when unreadable) and parses it.
RunConfig load_config(const std::string& path);

// Range checks shared by the parser and by programmatic edits of a RunConfig.
void validate_config(const RunConfig& c);

}  // namespace bgk
