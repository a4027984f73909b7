// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#pragma once

#include <string>

#include "bgkstab/config.hpp"
#include "bgkstab/functional.hpp"

namespace bgk {

struct RunSummary {
  double period = 0.0;
  double lambda0 = 0.0;
  double criterion_integral = 0.0;
  double functional_total = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  bool dispersion_ran = false;
  bool root_found = false;
  double root = 0.0;    // growth rate, valid when root_found
  std::string caveat;   // dispersion scan caveat, empty when the stage is skipped
  double orbit_period = 0.0;  // construct-stage diagnostic, see run_construct
  double orbit_period_quad = 0.0;
};

// How far down the chain a run goes. Each stage implies the ones before it.
enum class Stage { Construct, Spectrum, Criterion, Functional, Growth };

// profile -> wave -> spectrum -> criterion -> functional, then the dispersion
// scan when the criterion certifies instability. Each stage writes its
// artifact into config.output.dir as it completes: wave.csv, spectrum.csv,
// criterion.json, functional.json, scan.json (a skipped marker when the
// verdict leaves the scan unjustified). Identical configs produce identical
// bytes.
RunSummary run_pipeline(const RunConfig& c, Stage upto = Stage::Growth);

// Construct stage plus an orbit diagnostic: traces the characteristic at the
// given energy, cross-checks its period against direct quadrature, and writes
// orbit.csv. Pass NaN to skip the diagnostic.
RunSummary run_construct(const RunConfig& c, double orbit_energy);

// One criterion evaluation per (theta, kappa, amplitude) triple from the
// sweep section. A row that fails records its error class and never aborts
// the remaining rows. Returns the CSV table and writes it to sweep.csv.
// Rows may run on BGKSTAB_WORKERS threads; the bytes do not depend on it.
std::string scan_family(const RunConfig& c);

}  // namespace bgk
