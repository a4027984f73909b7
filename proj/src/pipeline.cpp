// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#include "bgkstab/pipeline.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <thread>
#include <vector>

#include <json.hpp>

#include "bgkstab/dispersion.hpp"
#include "bgkstab/error.hpp"
#include "bgkstab/io.hpp"
#include "bgkstab/orbit.hpp"
#include "bgkstab/profile.hpp"
#include "bgkstab/sturm.hpp"
#include "bgkstab/wave.hpp"

namespace bgk {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string artifact(const std::string& dir, const char* name) {
  return (std::filesystem::path(dir) / name).string();
}

void write_json(const std::string& path, const ordered_json& j) {
  write_file(path, j.dump(2) + "\n");
}

int worker_count() {
  const char* env = std::getenv("BGKSTAB_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 256)
    fail(Status::Config, "BGKSTAB_WORKERS must be an integer in [1, 256]");
  return static_cast<int>(v);
}

}  // namespace

namespace {

Wave build_wave(const RunConfig& c) {
  const Family fam = family_from_string(c.profile.family);
  const Profile p =
      make_profile(fam, c.profile.theta, c.profile.kappa, c.profile.m, c.profile.e_min);
  return c.wave.synthetic_period > 0.0
             ? synthetic_wave(p, c.wave.synthetic_period, c.wave.grid_n)
             : construct_wave(p, c.wave.phi_plus, c.wave.grid_n,
                              c.wave.steps_per_period);
}

void write_wave_csv(const RunConfig& c, const Wave& w) {
  if (!c.output.csv) return;
  std::string t = csv_line({"x", "phi", "dphi", "ddphi", "q"});
  for (int i = 0; i <= w.grid_n; ++i)
    t += csv_line({fmt17(w.x[i]), fmt17(w.phi[i]), fmt17(w.dphi[i]),
                   fmt17(w.ddphi[i]), fmt17(w.q[i])});
  write_file(artifact(c.output.dir, "wave.csv"), t);
}

}  // namespace

RunSummary run_construct(const RunConfig& c, double orbit_energy) {
  validate_config(c);
  const Wave w = build_wave(c);
  RunSummary sum;
  sum.period = w.period;
  write_wave_csv(c, w);
  if (!std::isnan(orbit_energy)) {
    const PeriodCheck pc = period_integral_check(w, orbit_energy);
    sum.orbit_period = pc.period_orbit;
    sum.orbit_period_quad = pc.period_quadrature;
    if (c.output.csv) {
      const Orbit orb = trace_orbit(w, orbit_energy);
      std::string t = csv_line({"t", "x", "v"});
      for (std::size_t j = 0; j < orb.xs.size(); ++j) {
        const double tj = orb.period * static_cast<double>(j) / orb.n;
        t += csv_line({fmt17(tj), fmt17(orb.xs[j]), fmt17(orb.vs[j])});
      }
      write_file(artifact(c.output.dir, "orbit.csv"), t);
    }
  }
  return sum;
}

RunSummary run_pipeline(const RunConfig& c, Stage upto) {
  validate_config(c);
  const Wave w = build_wave(c);

  RunSummary sum;
  sum.period = w.period;
  write_wave_csv(c, w);
  if (upto == Stage::Construct) return sum;

  const Spectrum spec = solve_eigen(w, c.spectral.k);
  if (c.output.csv) {
    std::string t = csv_line({"mode", "lambda", "lambda_fine"});
    for (int i = 0; i < c.spectral.k; ++i)
      t += csv_line({std::to_string(i), fmt17(spec.lambda[i]), fmt17(spec.lambda_fine[i])});
    write_file(artifact(c.output.dir, "spectrum.csv"), t);
  }
  sum.lambda0 = spec.lambda[0];
  if (upto == Stage::Spectrum) return sum;

  const GroundState gs = ground_state(w, c.spectral.lambda1_tol);
  const CriterionReport rep = criterion(w, gs);
  sum.lambda0 = rep.lambda0;
  sum.criterion_integral = rep.criterion_integral;
  sum.verdict = rep.verdict;
  if (c.output.json) {
    ordered_json j;
    j["lambda0"] = rep.lambda0;
    j["criterion_integral"] = rep.criterion_integral;
    j["error_bound"] = rep.error_bound;
    j["identity_ibp1"] = {{"lhs", rep.identity_ibp1.lhs}, {"rhs", rep.identity_ibp1.rhs}};
    j["identity_ibp2"] = {{"lhs", rep.identity_ibp2.lhs}, {"rhs", rep.identity_ibp2.rhs}};
    j["verdict"] = verdict_name(rep.verdict);
    write_json(artifact(c.output.dir, "criterion.json"), j);
  }
  if (upto == Stage::Criterion) return sum;

  const std::vector<double> psi = test_function(gs.u0, gs.grid_h);
  const FunctionalOptions fopts{c.functional.energy_panels, c.functional.e_max,
                                c.functional.eps_sep};
  const FunctionalBreakdown fb = lin_functional(w, psi, fopts);
  sum.functional_total = fb.total;
  if (c.output.json) {
    ordered_json j;
    j["term_gradient"] = fb.term_gradient;
    j["term_free"] = fb.term_free;
    j["term_trapped"] = fb.term_trapped;
    j["total"] = fb.total;
    j["error_budget"] = fb.error_budget;
    write_json(artifact(c.output.dir, "functional.json"), j);
  }
  if (upto == Stage::Functional) return sum;

  if (rep.verdict != Verdict::Unstable) {
    if (c.output.json) {
      ordered_json j;
      j["skipped"] = true;
      j["reason"] = "criterion verdict " + verdict_name(rep.verdict) +
                    " does not justify a growth-rate scan";
      write_json(artifact(c.output.dir, "scan.json"), j);
    }
    return sum;
  }

  sum.dispersion_ran = true;
  const DispersionScan ds = find_growth_rate(w, psi, c.dispersion.lambda_lo,
                                             c.dispersion.lambda_hi, c.dispersion.n_scan);
  sum.root_found = ds.root_found;
  sum.root = ds.root;
  sum.caveat = ds.caveat;
  if (c.output.json) {
    ordered_json j;
    j["lambda"] = ds.lambdas;
    j["h"] = ds.h_values;
    j["bracket_found"] = ds.bracket_found;
    if (ds.bracket_found) j["bracket"] = {ds.bracket_lo, ds.bracket_hi};
    j["root_found"] = ds.root_found;
    if (ds.root_found) j["root"] = ds.root;
    j["caveat"] = ds.caveat;
    if (ds.root_found) {
      const std::vector<double> vg = make_vgrid(w, c.dispersion.vgrid_n);
      const GrowingMode gm = assemble_mode(w, psi, ds.root, vg, c.dispersion.nx_cells);
      j["mode"] = {{"lambda", gm.lambda},
                   {"vgrid_n", c.dispersion.vgrid_n},
                   {"nx_cells", c.dispersion.nx_cells},
                   {"excluded_cells", gm.excluded},
                   {"transport_residual", gm.transport_residual},
                   {"poisson_residual", gm.poisson_residual}};
    }
    if (c.dispersion.galerkin) {
      const GalerkinScan gk =
          galerkin_scan(w, c.dispersion.galerkin_k, c.dispersion.lambda_lo,
                        c.dispersion.lambda_hi, c.dispersion.n_scan);
      j["galerkin"] = {{"basis_size", gk.basis_size},
                       {"lambda", gk.lambdas},
                       {"min_eig", gk.min_eigs},
                       {"root_found", gk.root_found}};
      if (gk.root_found) j["galerkin"]["root"] = gk.root;
    }
    write_json(artifact(c.output.dir, "scan.json"), j);
  }
  return sum;
}

std::string scan_family(const RunConfig& c) {
  validate_config(c);
  if (c.sweep.thetas.empty())
    fail(Status::Config, "sweep requires thetas, kappas and amps");
  const Family fam = family_from_string(c.profile.family);

  struct Triple {
    double theta, kappa, amp;
  };
  std::vector<Triple> grid;
  for (double t : c.sweep.thetas)
    for (double k : c.sweep.kappas)
      for (double a : c.sweep.amps) grid.push_back({t, k, a});

  std::vector<std::string> lines(grid.size());
  auto row = [&](std::size_t i) {
    const Triple& g = grid[i];
    std::vector<std::string> cells = {fmt17(g.theta), fmt17(g.kappa), fmt17(g.amp)};
    try {
      const Profile p = make_profile(fam, g.theta, g.kappa, c.profile.m, c.profile.e_min);
      const Wave w = construct_wave(p, g.amp, c.wave.grid_n, c.wave.steps_per_period);
      const GroundState gs = ground_state(w, c.spectral.lambda1_tol);
      const CriterionReport rep = criterion(w, gs);
      cells.push_back(fmt17(w.period));
      cells.push_back(fmt17(rep.lambda0));
      cells.push_back(fmt17(rep.criterion_integral));
      cells.push_back(verdict_name(rep.verdict));
    } catch (const Error& e) {
      cells.insert(cells.end(), {"nan", "nan", "nan", status_name(e.code())});
    } catch (const std::exception&) {
      cells.insert(cells.end(), {"nan", "nan", "nan", status_name(Status::Internal)});
    }
    lines[i] = csv_line(cells);
  };

  const int workers =
      std::min<int>(worker_count(), static_cast<int>(grid.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) row(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= grid.size()) return;
        row(i);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(drain);
    for (auto& t : pool) t.join();
  }

  std::string table = csv_line(
      {"theta", "kappa", "amp", "P_phi", "lambda0", "criterion_integral", "verdict"});
  for (const std::string& l : lines) table += l;
  write_file(artifact(c.output.dir, "sweep.csv"), table);
  return table;
}

}  // namespace bgk
