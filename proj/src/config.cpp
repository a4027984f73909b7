// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#include "bgkstab/config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "bgkstab/error.hpp"

namespace bgk {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void bad(int line, const std::string& what) {
  fail(Status::Config, "config line " + std::to_string(line) + ": " + what);
}

double parse_double(const std::string& v, int line) {
  const char* s = v.c_str();
  char* end = nullptr;
  const double x = std::strtod(s, &end);
  if (end == s || *end != '\0') bad(line, "expected a number, got '" + v + "'");
  return x;
}

int parse_int(const std::string& v, int line) {
  const char* s = v.c_str();
  char* end = nullptr;
  const long x = std::strtol(s, &end, 10);
  if (end == s || *end != '\0') bad(line, "expected an integer, got '" + v + "'");
  if (x < -1000000000L || x > 1000000000L) bad(line, "integer out of range: '" + v + "'");
  return static_cast<int>(x);
}

bool parse_bool(const std::string& v, int line) {
  if (v == "true") return true;
  if (v == "false") return false;
  bad(line, "expected true or false, got '" + v + "'");
}

std::vector<double> parse_list(const std::string& v, int line) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) bad(line, "empty entry in list");
    out.push_back(parse_double(item, line));
  }
  if (out.empty()) bad(line, "empty list");
  return out;
}

void parse_formats(const std::string& v, OutputConfig& o, int line) {
  o.json = o.csv = false;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item == "json")
      o.json = true;
    else if (item == "csv")
      o.csv = true;
    else
      bad(line, "unknown format '" + item + "'");
  }
  if (!o.json && !o.csv) bad(line, "formats must name json, csv, or both");
}

[[noreturn]] void range(const std::string& what) {
  fail(Status::Config, "config: " + what);
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  std::set<std::string> seen;
  std::string section;
  std::stringstream ss(text);
  std::string raw;
  int line = 0;
  while (std::getline(ss, raw)) {
    ++line;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') bad(line, "unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      static const std::set<std::string> known = {
          "profile", "wave", "spectral", "functional", "dispersion", "output", "sweep"};
      if (!known.count(section)) bad(line, "unknown section [" + section + "]");
      continue;
    }
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos) bad(line, "expected key = value");
    const std::string key = trim(s.substr(0, eq));
    const std::string val = trim(s.substr(eq + 1));
    if (key.empty()) bad(line, "empty key");
    if (val.empty()) bad(line, "empty value for '" + key + "'");
    if (section.empty()) bad(line, "key '" + key + "' outside any section");
    const std::string full = section + "." + key;
    if (!seen.insert(full).second) bad(line, "duplicate key '" + full + "'");

    if (full == "profile.family")
      c.profile.family = val;
    else if (full == "profile.theta")
      c.profile.theta = parse_double(val, line);
    else if (full == "profile.kappa")
      c.profile.kappa = parse_double(val, line);
    else if (full == "profile.m")
      c.profile.m = parse_int(val, line);
    else if (full == "profile.e_min")
      c.profile.e_min = parse_double(val, line);
    else if (full == "wave.phi_plus")
      c.wave.phi_plus = parse_double(val, line);
    else if (full == "wave.synthetic_period")
      c.wave.synthetic_period = parse_double(val, line);
    else if (full == "wave.grid_n")
      c.wave.grid_n = parse_int(val, line);
    else if (full == "wave.steps_per_period")
      c.wave.steps_per_period = parse_int(val, line);
    else if (full == "spectral.k")
      c.spectral.k = parse_int(val, line);
    else if (full == "spectral.lambda1_tol")
      c.spectral.lambda1_tol = parse_double(val, line);
    else if (full == "functional.energy_panels")
      c.functional.energy_panels = parse_int(val, line);
    else if (full == "functional.e_max")
      c.functional.e_max = parse_double(val, line);
    else if (full == "functional.eps_sep")
      c.functional.eps_sep = parse_double(val, line);
    else if (full == "dispersion.lambda_lo")
      c.dispersion.lambda_lo = parse_double(val, line);
    else if (full == "dispersion.lambda_hi")
      c.dispersion.lambda_hi = parse_double(val, line);
    else if (full == "dispersion.n_scan")
      c.dispersion.n_scan = parse_int(val, line);
    else if (full == "dispersion.vgrid_n")
      c.dispersion.vgrid_n = parse_int(val, line);
    else if (full == "dispersion.nx_cells")
      c.dispersion.nx_cells = parse_int(val, line);
    else if (full == "dispersion.galerkin")
      c.dispersion.galerkin = parse_bool(val, line);
    else if (full == "dispersion.galerkin_k")
      c.dispersion.galerkin_k = parse_int(val, line);
    else if (full == "output.dir")
      c.output.dir = val;
    else if (full == "output.formats")
      parse_formats(val, c.output, line);
    else if (full == "output.verbosity")
      c.output.verbosity = parse_int(val, line);
    else if (full == "sweep.thetas")
      c.sweep.thetas = parse_list(val, line);
    else if (full == "sweep.kappas")
      c.sweep.kappas = parse_list(val, line);
    else if (full == "sweep.amps")
      c.sweep.amps = parse_list(val, line);
    else
      bad(line, "unknown key '" + full + "'");
  }
  validate_config(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Status::Io, "cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void validate_config(const RunConfig& c) {
  if (c.profile.family != "bump" && c.profile.family != "maxwellian")
    range("family must be bump or maxwellian");
  if (!(c.profile.theta > 0.0)) range("theta must be positive");
  if (!(c.profile.kappa >= 0.0)) range("kappa must be nonnegative");
  if (c.profile.m != 1 && c.profile.m != 2) range("m must be 1 or 2");

  const bool sweeping =
      !c.sweep.thetas.empty() || !c.sweep.kappas.empty() || !c.sweep.amps.empty();
  if (sweeping &&
      (c.sweep.thetas.empty() || c.sweep.kappas.empty() || c.sweep.amps.empty()))
    range("sweep needs all three of thetas, kappas, amps");
  for (double t : c.sweep.thetas)
    if (!(t > 0.0)) range("sweep thetas must be positive");
  for (double k : c.sweep.kappas)
    if (!(k >= 0.0)) range("sweep kappas must be nonnegative");
  for (double a : c.sweep.amps)
    if (!(a > 0.0)) range("sweep amps must be positive");

  if (!(c.wave.phi_plus >= 0.0)) range("phi_plus must be nonnegative");
  if (!(c.wave.synthetic_period >= 0.0)) range("synthetic_period must be nonnegative");
  if (c.wave.phi_plus > 0.0 && c.wave.synthetic_period > 0.0)
    range("phi_plus and synthetic_period are mutually exclusive");
  if (!sweeping && c.wave.phi_plus == 0.0 && c.wave.synthetic_period == 0.0)
    range("exactly one of phi_plus and synthetic_period must be positive");
  if (c.wave.grid_n < 64 || c.wave.grid_n % 2 != 0)
    range("grid_n must be even and at least 64");
  if (c.wave.steps_per_period < 64) range("steps_per_period must be at least 64");

  if (c.spectral.k < 1 || c.spectral.k > 16) range("spectral k must lie in [1, 16]");
  if (!(c.spectral.lambda1_tol >= 0.0)) range("lambda1_tol must be nonnegative");

  if (c.functional.energy_panels != 0 && c.functional.energy_panels < 8)
    range("energy_panels must be 0 (default) or at least 8");
  if (!(c.functional.e_max >= 0.0)) range("e_max must be nonnegative");
  if (!(c.functional.eps_sep >= 0.0)) range("eps_sep must be nonnegative");

  const DispersionConfig& d = c.dispersion;
  const bool auto_range = d.lambda_lo == 0.0 && d.lambda_hi == 0.0;
  if (!auto_range && !(d.lambda_lo > 0.0 && d.lambda_hi > d.lambda_lo))
    range("dispersion scan range must satisfy 0 < lambda_lo < lambda_hi");
  if (d.n_scan < 8) range("n_scan must be at least 8");
  if (d.vgrid_n < 9 || d.vgrid_n % 2 == 0) range("vgrid_n must be odd and at least 9");
  if (d.nx_cells < 8) range("nx_cells must be at least 8");
  if (c.wave.grid_n % d.nx_cells != 0) range("nx_cells must divide grid_n");
  if (d.galerkin_k < 2 || d.galerkin_k > 64) range("galerkin_k must lie in [2, 64]");

  if (c.output.dir.empty()) range("output dir must not be empty");
  if (!c.output.json && !c.output.csv) range("at least one output format is required");
  if (c.output.verbosity < 0 || c.output.verbosity > 2)
    range("verbosity must lie in [0, 2]");
}

}  // namespace bgk
