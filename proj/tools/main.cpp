// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
//
// Command-line front end. Talks to the library exclusively through the C
// interface in bgkstab.h; all numerics and file writing happen behind it.
#include <cmath>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bgkstab.h"

namespace {

struct Options {
  std::string config;
  std::optional<std::string> out_dir;
  std::optional<int> grid_n;
  std::optional<double> orbit_energy;
  bool quiet = false;
};

using ConfigHandle = std::unique_ptr<bgk_config, decltype(&bgk_config_free)>;

int report_error(int status, const char* message) {
  std::fprintf(stderr, "error: %s: %s\n", bgk_status_name(status), message);
  return bgk_exit_code(status);
}

// construct < spectrum < criterion < functional < growth; sweep is separate
int stage_rank(const std::string& sub) {
  if (sub == "construct") return 0;
  if (sub == "spectrum") return 1;
  if (sub == "criterion") return 2;
  if (sub == "functional") return 3;
  return 4;
}

void print_summary(const std::string& sub, const bgk_run_summary& s,
                   int verbosity, const char* out_dir) {
  if (verbosity < 1) return;
  const int rank = stage_rank(sub);
  std::printf("period: %.10g\n", s.period);
  if (rank == 0 && s.orbit_period != 0.0) {
    std::printf("orbit period: %.10g\n", s.orbit_period);
    std::printf("orbit period (quadrature): %.10g\n", s.orbit_period_quad);
  }
  if (rank >= 1) std::printf("lambda0: %.10g\n", s.lambda0);
  if (rank >= 2) {
    std::printf("criterion integral: %.10g\n", s.criterion_integral);
    std::printf("verdict: %s\n", s.verdict_unstable ? "Unstable" : "Inconclusive");
  }
  if (rank >= 3) std::printf("functional total: %.10g\n", s.functional_total);
  if (rank >= 4 && s.dispersion_ran) {
    if (s.root_found)
      std::printf("growth rate: %.10g\n", s.root);
    else
      std::printf("growth rate: not bracketed\n");
    if (verbosity >= 2 && s.caveat[0] != '\0') std::printf("note: %s\n", s.caveat);
  }
  if (verbosity >= 2) std::printf("artifacts: %s\n", out_dir);
}

int run(const std::string& sub, const Options& opt) {
  char err[1024] = "";
  bgk_config* raw = nullptr;
  int st = bgk_config_load(opt.config.c_str(), &raw, err, sizeof err);
  if (st != BGK_OK) return report_error(st, err);
  ConfigHandle cfg(raw, &bgk_config_free);

  if (opt.out_dir) {
    st = bgk_config_set_out_dir(cfg.get(), opt.out_dir->c_str(), err, sizeof err);
    if (st != BGK_OK) return report_error(st, err);
  }
  if (opt.grid_n) {
    st = bgk_config_set_grid_n(cfg.get(), *opt.grid_n, err, sizeof err);
    if (st != BGK_OK) return report_error(st, err);
  }
  if (opt.quiet) bgk_config_set_quiet(cfg.get());
  const int verbosity = bgk_config_verbosity(cfg.get());

  if (sub == "sweep") {
    st = bgk_run_sweep(cfg.get(), err, sizeof err);
    if (st != BGK_OK) return report_error(st, err);
    if (verbosity >= 1)
      std::printf("sweep table: %s/sweep.csv\n", bgk_config_out_dir(cfg.get()));
    return 0;
  }

  bgk_run_summary sum;
  if (sub == "construct") {
    const double e = opt.orbit_energy ? *opt.orbit_energy : std::nan("");
    st = bgk_run_construct(cfg.get(), e, &sum, err, sizeof err);
  } else if (sub == "spectrum") {
    st = bgk_run_spectrum(cfg.get(), &sum, err, sizeof err);
  } else if (sub == "criterion") {
    st = bgk_run_criterion(cfg.get(), &sum, err, sizeof err);
  } else if (sub == "functional") {
    st = bgk_run_functional(cfg.get(), &sum, err, sizeof err);
  } else {
    st = bgk_run_growth(cfg.get(), &sum, err, sizeof err);
  }
  if (st != BGK_OK) return report_error(st, err);
  print_summary(sub, sum, verbosity, bgk_config_out_dir(cfg.get()));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability reports for spatially periodic kinetic equilibria"};
  app.require_subcommand(1);

  Options opt;
  const struct {
    const char* name;
    const char* help;
  } subs[] = {
      {"construct", "Build the wave and write wave.csv"},
      {"spectrum", "Construct, then write the low eigenvalue table"},
      {"criterion", "Run through the instability sign test"},
      {"functional", "Add the quadratic-form evaluation"},
      {"growth", "Full chain including the growth-rate scan when unstable"},
      {"sweep", "Criterion table over the configured parameter grid"},
  };
  for (const auto& s : subs) {
    CLI::App* cmd = app.add_subcommand(s.name, s.help);
    cmd->add_option("--config", opt.config, "Run configuration file")->required();
    cmd->add_option("--out", opt.out_dir, "Override the output directory");
    cmd->add_option("--grid-n", opt.grid_n, "Override the spatial grid size");
    cmd->add_flag("--quiet", opt.quiet, "Suppress the stdout summary");
    if (std::string(s.name) == "construct")
      cmd->add_option("--orbit-energy", opt.orbit_energy,
                      "Also trace the orbit at this energy and write orbit.csv");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // help and version requests
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 4;  // command-line misuse is a configuration error
  }

  return run(app.get_subcommands().front()->get_name(), opt);
}
