// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

#include "bgkstab/config.hpp"
#include "bgkstab/error.hpp"
#include "bgkstab/io.hpp"
#include "doctest.h"

using namespace bgk;

namespace {

Status code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.code();
  }
  return Status::Ok;
}

// minimal valid body; tests splice extra lines into it
const char* kBase = "[wave]\nphi_plus = 0.05\n";

RunConfig parse_with(const std::string& extra) { return parse_config(kBase + extra); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(static_cast<bool>(in));
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("defaults fill everything the file leaves out") {
  RunConfig c = parse_config(kBase);
  CHECK(c.profile.family == "bump");
  CHECK(c.profile.theta == 1.0);
  CHECK(c.profile.kappa == 0.0);
  CHECK(c.profile.m == 2);
  CHECK(c.wave.phi_plus == 0.05);
  CHECK(c.wave.synthetic_period == 0.0);
  CHECK(c.wave.grid_n == 4096);
  CHECK(c.wave.steps_per_period == 4096);
  CHECK(c.spectral.k == 2);
  CHECK(c.spectral.lambda1_tol == 0.0);
  CHECK(c.functional.energy_panels == 0);
  CHECK(c.dispersion.lambda_lo == 0.0);
  CHECK(c.dispersion.lambda_hi == 0.0);
  CHECK(c.dispersion.n_scan == 61);
  CHECK(c.dispersion.vgrid_n == 401);
  CHECK(c.dispersion.nx_cells == 64);
  CHECK_FALSE(c.dispersion.galerkin);
  CHECK(c.dispersion.galerkin_k == 8);
  CHECK(c.output.dir == "out");
  CHECK(c.output.json);
  CHECK(c.output.csv);
  CHECK(c.output.verbosity == 1);
  CHECK(c.sweep.thetas.empty());
}

TEST_CASE("a fully specified file populates every section") {
  const std::string text =
      "[profile]\n"
      "family = bump\n"
      "theta = 1.25\n"
      "kappa = 8\n"
      "m = 1\n"
      "e_min = -0.125\n"
      "[wave]\n"
      "synthetic_period = 16.5\n"
      "grid_n = 512\n"
      "steps_per_period = 2048\n"
      "[spectral]\n"
      "k = 4\n"
      "lambda1_tol = 1e-5\n"
      "[functional]\n"
      "energy_panels = 120\n"
      "e_max = 9.5\n"
      "eps_sep = 1e-7\n"
      "[dispersion]\n"
      "lambda_lo = 0.01\n"
      "lambda_hi = 2.5\n"
      "n_scan = 31\n"
      "vgrid_n = 101\n"
      "nx_cells = 16\n"
      "galerkin = true\n"
      "galerkin_k = 12\n"
      "[output]\n"
      "dir = results/run1\n"
      "formats = json\n"
      "verbosity = 2\n"
      "[sweep]\n"
      "thetas = 0.8, 1.0\n"
      "kappas = 0, 8, 16\n"
      "amps = 0.02,0.05\n";
  RunConfig c = parse_config(text);
  CHECK(c.profile.theta == 1.25);
  CHECK(c.profile.kappa == 8.0);
  CHECK(c.profile.m == 1);
  CHECK(c.profile.e_min == -0.125);
  CHECK(c.wave.synthetic_period == 16.5);
  CHECK(c.wave.grid_n == 512);
  CHECK(c.spectral.k == 4);
  CHECK(c.spectral.lambda1_tol == 1e-5);
  CHECK(c.functional.energy_panels == 120);
  CHECK(c.functional.e_max == 9.5);
  CHECK(c.functional.eps_sep == 1e-7);
  CHECK(c.dispersion.lambda_lo == 0.01);
  CHECK(c.dispersion.lambda_hi == 2.5);
  CHECK(c.dispersion.n_scan == 31);
  CHECK(c.dispersion.vgrid_n == 101);
  CHECK(c.dispersion.nx_cells == 16);
  CHECK(c.dispersion.galerkin);
  CHECK(c.dispersion.galerkin_k == 12);
  CHECK(c.output.dir == "results/run1");
  CHECK(c.output.json);
  CHECK_FALSE(c.output.csv);
  CHECK(c.output.verbosity == 2);
  CHECK(c.sweep.thetas == std::vector<double>{0.8, 1.0});
  CHECK(c.sweep.kappas == std::vector<double>{0.0, 8.0, 16.0});
  CHECK(c.sweep.amps == std::vector<double>{0.02, 0.05});
}

TEST_CASE("comments, blank lines and stray spacing are ignored") {
  RunConfig c = parse_config(
      "# leading comment\n"
      "\n"
      "  [wave]  \n"
      "  phi_plus   =  0.1   # trailing comment\n"
      "\t\n"
      "[output]\n"
      "dir = padded   \n");
  CHECK(c.wave.phi_plus == 0.1);
  CHECK(c.output.dir == "padded");
}

TEST_CASE("unknown structure is rejected, never skipped") {
  CHECK(code_of([] { parse_with("[units]\n"); }) == Status::Config);
  CHECK(code_of([] { parse_with("colour = red\n"); }) == Status::Config);
  CHECK(code_of([] { parse_with("[output]\nfoo = 1\n"); }) == Status::Config);
  CHECK(code_of([] { parse_config("phi_plus = 0.05\n"); }) == Status::Config);
  CHECK(code_of([] { parse_with("phi_plus = 0.06\n"); }) == Status::Config);
  CHECK(code_of([] { parse_with("[wave\n"); }) == Status::Config);
  CHECK(code_of([] { parse_with("grid_n\n"); }) == Status::Config);
  CHECK(code_of([] { parse_with("grid_n =\n"); }) == Status::Config);
  CHECK(code_of([] { parse_with("= 3\n"); }) == Status::Config);
}

TEST_CASE("malformed values name their line") {
  try {
    parse_config("[wave]\nphi_plus = 0.05\ngrid_n = twelve\n");
    FAIL("expected a config error");
  } catch (const Error& e) {
    CHECK(e.code() == Status::Config);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(code_of([] { parse_with("grid_n = 1e99\n"); }) == Status::Config);
  CHECK(code_of([] { parse_with("grid_n = 512x\n"); }) == Status::Config);
  CHECK(code_of([] { parse_with("phi_plus = 0.0.5\n"); }) == Status::Config);
  CHECK(code_of([] { parse_with("[dispersion]\ngalerkin = yes\n"); }) == Status::Config);
  CHECK(code_of([] { parse_with("[sweep]\nthetas = 1,,2\n"); }) == Status::Config);
  CHECK(code_of([] { parse_with("[output]\nformats = yaml\n"); }) == Status::Config);
}

TEST_CASE("range validation is strict on every knob") {
  auto rejects = [](const std::string& extra) {
    return code_of([&] { parse_with(extra); }) == Status::Config;
  };
  CHECK(rejects("[profile]\nfamily = cauchy\n"));
  CHECK(rejects("[profile]\ntheta = 0\n"));
  CHECK(rejects("[profile]\nkappa = -1\n"));
  CHECK(rejects("[profile]\nm = 3\n"));
  CHECK(rejects("grid_n = 62\n"));
  CHECK(rejects("grid_n = 65\n"));
  CHECK(rejects("grid_n = -512\n"));
  CHECK(rejects("steps_per_period = 32\n"));
  CHECK(rejects("[spectral]\nk = 0\n"));
  CHECK(rejects("[spectral]\nk = 17\n"));
  CHECK(rejects("[spectral]\nlambda1_tol = -1e-6\n"));
  CHECK(rejects("[functional]\nenergy_panels = 4\n"));
  CHECK(rejects("[functional]\ne_max = -2\n"));
  CHECK(rejects("[functional]\neps_sep = -1e-9\n"));
  CHECK(rejects("[dispersion]\nlambda_lo = 0.5\n"));
  CHECK(rejects("[dispersion]\nlambda_lo = 2\nlambda_hi = 1\n"));
  CHECK(rejects("[dispersion]\nlambda_lo = -1\nlambda_hi = 1\n"));
  CHECK(rejects("[dispersion]\nn_scan = 7\n"));
  CHECK(rejects("[dispersion]\nvgrid_n = 8\n"));
  CHECK(rejects("[dispersion]\nvgrid_n = 7\n"));
  CHECK(rejects("[dispersion]\nnx_cells = 4\n"));
  CHECK(rejects("[dispersion]\nnx_cells = 96\n"));
  CHECK(rejects("[dispersion]\ngalerkin_k = 1\n"));
  CHECK(rejects("[dispersion]\ngalerkin_k = 65\n"));
  CHECK(rejects("[output]\nverbosity = 3\n"));
  CHECK(rejects("[sweep]\nthetas = 1\n"));
  CHECK(rejects("[sweep]\nthetas = 1\nkappas = 0\namps = -0.1\n"));
  CHECK(rejects("[sweep]\nthetas = 0\nkappas = 0\namps = 0.1\n"));
  CHECK(code_of([] {
          parse_config("[wave]\nphi_plus = 0.05\nsynthetic_period = 10\n");
        }) == Status::Config);
  CHECK(code_of([] { parse_config("[wave]\ngrid_n = 512\n"); }) == Status::Config);
  RunConfig c = parse_config(kBase);
  c.output.json = c.output.csv = false;
  CHECK(code_of([&] { validate_config(c); }) == Status::Config);
}

TEST_CASE("a sweep grid lifts the single-wave selection rule") {
  RunConfig c = parse_config(
      "[sweep]\n"
      "thetas = 1\n"
      "kappas = 8\n"
      "amps = 0.05\n");
  CHECK(c.wave.phi_plus == 0.0);
  CHECK(c.sweep.amps == std::vector<double>{0.05});
}

TEST_CASE("load_config reads files and reports missing ones") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "bgkstab_cfg_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path file = dir / "run.cfg";
  {
    std::ofstream out(file, std::ios::binary);
    out << "[wave]\nphi_plus = 0.07\n[output]\ndir = " << (dir / "out").string() << "\n";
  }
  RunConfig c = load_config(file.string());
  CHECK(c.wave.phi_plus == 0.07);
  CHECK(code_of([&] { load_config((dir / "absent.cfg").string()); }) == Status::Io);
  fs::remove_all(dir);
}

TEST_CASE("numeric formatting round-trips and is diff friendly") {
  for (double v : {0.1, 1.0 / 3.0, -2.718281828459045e-7, 1e300, 16.62374619490313}) {
    const std::string s = fmt17(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
  CHECK(fmt17(0.0) == "0");
  CHECK(fmt17(std::nan("")) == "nan");
  CHECK(fmt17(-std::nan("")) == "nan");
  CHECK(csv_line({"a", "b", "c"}) == "a,b,c\n");
  CHECK(csv_line({"solo"}) == "solo\n");
}

TEST_CASE("write_file creates parents, truncates, and fails loudly") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "bgkstab_io_test";
  fs::remove_all(dir);
  const fs::path target = dir / "nested" / "table.csv";
  write_file(target.string(), "x,y\n1,2\n");
  CHECK(slurp(target) == "x,y\n1,2\n");
  write_file(target.string(), "z\n");
  CHECK(slurp(target) == "z\n");
  // a regular file cannot serve as a parent directory
  const fs::path blocked = target / "child.csv";
  CHECK(code_of([&] { write_file(blocked.string(), "no\n"); }) == Status::Io);
  fs::remove_all(dir);
}

}  // TEST_SUITE
