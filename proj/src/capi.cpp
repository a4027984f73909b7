// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#include "bgkstab.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <string>

#include "bgkstab/config.hpp"
#include "bgkstab/dispersion.hpp"
#include "bgkstab/error.hpp"
#include "bgkstab/functional.hpp"
#include "bgkstab/pipeline.hpp"
#include "bgkstab/profile.hpp"
#include "bgkstab/sturm.hpp"
#include "bgkstab/wave.hpp"

struct bgk_config {
  bgk::RunConfig c;
};
struct bgk_profile {
  bgk::Profile p;
};
struct bgk_wave {
  bgk::Wave w;
};

namespace {

void copy_text(const std::string& text, char* buf, size_t len) {
  if (buf == nullptr || len == 0) return;
  const size_t n = text.size() < len - 1 ? text.size() : len - 1;
  std::memcpy(buf, text.data(), n);
  buf[n] = '\0';
}

// Every entry point funnels through here so no exception crosses the ABI.
template <typename Fn>
int guarded(char* err, size_t err_len, Fn&& fn) {
  try {
    fn();
    return BGK_OK;
  } catch (const bgk::Error& e) {
    copy_text(e.what(), err, err_len);
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    copy_text(e.what(), err, err_len);
    return BGK_INTERNAL;
  } catch (...) {
    copy_text("unknown failure", err, err_len);
    return BGK_INTERNAL;
  }
}

void fill_summary(const bgk::RunSummary& s, bgk_run_summary* out) {
  if (out == nullptr) return;
  *out = bgk_run_summary{};
  out->period = s.period;
  out->lambda0 = s.lambda0;
  out->criterion_integral = s.criterion_integral;
  out->functional_total = s.functional_total;
  out->root = s.root;
  out->orbit_period = s.orbit_period;
  out->orbit_period_quad = s.orbit_period_quad;
  out->verdict_unstable = s.verdict == bgk::Verdict::Unstable ? 1 : 0;
  out->dispersion_ran = s.dispersion_ran ? 1 : 0;
  out->root_found = s.root_found ? 1 : 0;
  copy_text(s.caveat, out->caveat, sizeof out->caveat);
}

int run_stage(const bgk_config* cfg, bgk::Stage upto, bgk_run_summary* out,
              char* err, size_t err_len) {
  return guarded(err, err_len, [&] {
    if (cfg == nullptr) bgk::fail(bgk::Status::Domain, "config handle is null");
    fill_summary(bgk::run_pipeline(cfg->c, upto), out);
  });
}

}  // namespace

extern "C" {

const char* bgk_version(void) { return "0.1.0"; }

const char* bgk_status_name(int status) {
  if (status < BGK_OK || status > BGK_INTERNAL) return "Unknown";
  return bgk::status_name(static_cast<bgk::Status>(status));
}

int bgk_exit_code(int status) {
  switch (status) {
    case BGK_OK:
      return 0;
    case BGK_NON_OSCILLATORY:
    case BGK_AMPLITUDE_TOO_LARGE:
      return 2;
    case BGK_CONFIG:
      return 4;
    default:
      return 3;
  }
}

int bgk_config_load(const char* path, bgk_config** out, char* err, size_t err_len) {
  return guarded(err, err_len, [&] {
    if (path == nullptr || out == nullptr)
      bgk::fail(bgk::Status::Domain, "null argument");
    *out = new bgk_config{bgk::load_config(path)};
  });
}

void bgk_config_free(bgk_config* cfg) { delete cfg; }

int bgk_config_set_out_dir(bgk_config* cfg, const char* dir, char* err, size_t err_len) {
  return guarded(err, err_len, [&] {
    if (cfg == nullptr || dir == nullptr)
      bgk::fail(bgk::Status::Domain, "null argument");
    bgk::RunConfig trial = cfg->c;
    trial.output.dir = dir;
    bgk::validate_config(trial);
    cfg->c = trial;
  });
}

int bgk_config_set_grid_n(bgk_config* cfg, int grid_n, char* err, size_t err_len) {
  return guarded(err, err_len, [&] {
    if (cfg == nullptr) bgk::fail(bgk::Status::Domain, "null argument");
    bgk::RunConfig trial = cfg->c;
    trial.wave.grid_n = grid_n;
    bgk::validate_config(trial);
    cfg->c = trial;
  });
}

void bgk_config_set_quiet(bgk_config* cfg) {
  if (cfg != nullptr) cfg->c.output.verbosity = 0;
}

int bgk_config_verbosity(const bgk_config* cfg) {
  return cfg == nullptr ? 0 : cfg->c.output.verbosity;
}

const char* bgk_config_out_dir(const bgk_config* cfg) {
  return cfg == nullptr ? "" : cfg->c.output.dir.c_str();
}

int bgk_profile_create(const char* family, double theta, double kappa, int m,
                       double e_min, bgk_profile** out, char* err, size_t err_len) {
  return guarded(err, err_len, [&] {
    if (family == nullptr || out == nullptr)
      bgk::fail(bgk::Status::Domain, "null argument");
    const double floor =
        std::isnan(e_min) ? -std::numeric_limits<double>::infinity() : e_min;
    *out = new bgk_profile{
        bgk::make_profile(bgk::family_from_string(family), theta, kappa, m, floor)};
  });
}

void bgk_profile_free(bgk_profile* p) { delete p; }

int bgk_profile_density(const bgk_profile* p, double phi, double* out,
                        char* err, size_t err_len) {
  return guarded(err, err_len, [&] {
    if (p == nullptr || out == nullptr) bgk::fail(bgk::Status::Domain, "null argument");
    *out = bgk::density_moment(p->p, phi);
  });
}

int bgk_profile_q(const bgk_profile* p, double phi, double* out,
                  char* err, size_t err_len) {
  return guarded(err, err_len, [&] {
    if (p == nullptr || out == nullptr) bgk::fail(bgk::Status::Domain, "null argument");
    *out = bgk::q_moment(p->p, phi);
  });
}

int bgk_wave_construct(const bgk_profile* p, double amplitude, int grid_n,
                       int steps_per_period, bgk_wave** out, char* err, size_t err_len) {
  return guarded(err, err_len, [&] {
    if (p == nullptr || out == nullptr) bgk::fail(bgk::Status::Domain, "null argument");
    *out = new bgk_wave{bgk::construct_wave(p->p, amplitude, grid_n, steps_per_period)};
  });
}

int bgk_wave_synthetic(const bgk_profile* p, double period, int grid_n,
                       bgk_wave** out, char* err, size_t err_len) {
  return guarded(err, err_len, [&] {
    if (p == nullptr || out == nullptr) bgk::fail(bgk::Status::Domain, "null argument");
    *out = new bgk_wave{bgk::synthetic_wave(p->p, period, grid_n)};
  });
}

void bgk_wave_free(bgk_wave* w) { delete w; }

double bgk_wave_period(const bgk_wave* w) { return w == nullptr ? 0.0 : w->w.period; }

int bgk_wave_grid_n(const bgk_wave* w) { return w == nullptr ? 0 : w->w.grid_n; }

double bgk_wave_phi_min(const bgk_wave* w) {
  return w == nullptr ? 0.0 : w->w.phi_minus;
}

double bgk_wave_phi_max(const bgk_wave* w) {
  return w == nullptr ? 0.0 : w->w.phi_plus;
}

int bgk_wave_samples(const bgk_wave* w, double* x, double* phi, double* q) {
  if (w == nullptr) return BGK_DOMAIN;
  const size_t n = w->w.x.size();
  if (x != nullptr) std::memcpy(x, w->w.x.data(), n * sizeof(double));
  if (phi != nullptr) std::memcpy(phi, w->w.phi.data(), n * sizeof(double));
  if (q != nullptr) std::memcpy(q, w->w.q.data(), n * sizeof(double));
  return BGK_OK;
}

int bgk_wave_criterion(const bgk_wave* w, bgk_criterion_report* out,
                       char* err, size_t err_len) {
  return guarded(err, err_len, [&] {
    if (w == nullptr || out == nullptr) bgk::fail(bgk::Status::Domain, "null argument");
    const bgk::GroundState gs = bgk::ground_state(w->w);
    const bgk::CriterionReport rep = bgk::criterion(w->w, gs);
    out->lambda0 = rep.lambda0;
    out->lambda1 = gs.lambda1;
    out->criterion_integral = rep.criterion_integral;
    out->error_bound = rep.error_bound;
    out->unstable = rep.verdict == bgk::Verdict::Unstable ? 1 : 0;
  });
}

int bgk_wave_functional(const bgk_wave* w, bgk_functional_report* out,
                        char* err, size_t err_len) {
  return guarded(err, err_len, [&] {
    if (w == nullptr || out == nullptr) bgk::fail(bgk::Status::Domain, "null argument");
    const bgk::GroundState gs = bgk::ground_state(w->w);
    const bgk::FunctionalBreakdown fb =
        bgk::lin_functional(w->w, bgk::test_function(gs.u0, gs.grid_h));
    out->term_gradient = fb.term_gradient;
    out->term_free = fb.term_free;
    out->term_trapped = fb.term_trapped;
    out->total = fb.total;
    out->error_budget = fb.error_budget;
  });
}

int bgk_wave_growth_rate(const bgk_wave* w, double* rate,
                         char* caveat, size_t caveat_len, char* err, size_t err_len) {
  return guarded(err, err_len, [&] {
    if (w == nullptr || rate == nullptr) bgk::fail(bgk::Status::Domain, "null argument");
    const bgk::GroundState gs = bgk::ground_state(w->w);
    const bgk::DispersionScan ds =
        bgk::find_growth_rate(w->w, bgk::test_function(gs.u0, gs.grid_h));
    copy_text(ds.caveat, caveat, caveat_len);
    if (!ds.root_found) bgk::fail(bgk::Status::NoSignChange, ds.caveat);
    *rate = ds.root;
  });
}

int bgk_run_construct(const bgk_config* cfg, double orbit_energy,
                      bgk_run_summary* out, char* err, size_t err_len) {
  return guarded(err, err_len, [&] {
    if (cfg == nullptr) bgk::fail(bgk::Status::Domain, "config handle is null");
    fill_summary(bgk::run_construct(cfg->c, orbit_energy), out);
  });
}

int bgk_run_spectrum(const bgk_config* cfg, bgk_run_summary* out,
                     char* err, size_t err_len) {
  return run_stage(cfg, bgk::Stage::Spectrum, out, err, err_len);
}

int bgk_run_criterion(const bgk_config* cfg, bgk_run_summary* out,
                      char* err, size_t err_len) {
  return run_stage(cfg, bgk::Stage::Criterion, out, err, err_len);
}

int bgk_run_functional(const bgk_config* cfg, bgk_run_summary* out,
                       char* err, size_t err_len) {
  return run_stage(cfg, bgk::Stage::Functional, out, err, err_len);
}

int bgk_run_growth(const bgk_config* cfg, bgk_run_summary* out,
                   char* err, size_t err_len) {
  return run_stage(cfg, bgk::Stage::Growth, out, err, err_len);
}

int bgk_run_sweep(const bgk_config* cfg, char* err, size_t err_len) {
  return guarded(err, err_len, [&] {
    if (cfg == nullptr) bgk::fail(bgk::Status::Domain, "config handle is null");
    bgk::scan_family(cfg->c);
  });
}

}  // extern "C"
