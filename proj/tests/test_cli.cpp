// SPDX-License-Identifier: Apache-2.0
//
// Drives the installed command-line binary (path in BGKSTAB_CLI) through
// std::system and checks exit codes, stdout, and the artifact files.
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "bgkstab/profile.hpp"
#include "bgkstab/wave.hpp"
#include "doctest.h"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const double kPi = 3.14159265358979323846;
const double kTwoStreamPeriod = 1.5 * 2.0 * kPi * std::sqrt(7.0);

fs::path case_dir(const char* leaf) {
  const fs::path dir = fs::temp_directory_path() / "bgk_cli_test" / leaf;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

fs::path write_config(const fs::path& dir, const std::string& body) {
  const fs::path file = dir / "run.cfg";
  std::ofstream out(file, std::ios::binary);
  out << body;
  return file;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(static_cast<bool>(in));
  return std::string(std::istreambuf_iterator<char>(in), {});
}

size_t line_count(const std::string& s) {
  size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const fs::path& dir, const std::string& args,
                  const std::string& env_prefix = "") {
  const char* bin = std::getenv("BGKSTAB_CLI");
  REQUIRE(bin != nullptr);
  const fs::path out_file = dir / "stdout.txt";
  const fs::path err_file = dir / "stderr.txt";
  const std::string cmd = env_prefix + "\"" + bin + "\" " + args + " > \"" +
                          out_file.string() + "\" 2> \"" + err_file.string() + "\"";
  const int rc = std::system(cmd.c_str());
  CliResult r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  return r;
}

// config body for the supercritical uniform state the growth oracle is
// pinned to in the dispersion suite
std::string growth_config(const fs::path& out) {
  return "[profile]\n"
         "kappa = 8\n"
         "[wave]\n"
         "synthetic_period = " + num17(kTwoStreamPeriod) + "\n"
         "grid_n = 512\n"
         "[dispersion]\n"
         "vgrid_n = 101\n"
         "nx_cells = 16\n"
         "[output]\n"
         "dir = " + out.string() + "\n";
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("growth run produces the full artifact set and a root") {
  const fs::path dir = case_dir("growth");
  const fs::path out = dir / "out";
  const fs::path cfg = write_config(dir, growth_config(out));

  const CliResult r = run_cli(dir, "growth --config \"" + cfg.string() + "\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: Unstable") != std::string::npos);
  CHECK(r.out.find("growth rate:") != std::string::npos);

  for (const char* name :
       {"wave.csv", "spectrum.csv", "criterion.json", "functional.json", "scan.json"})
    CHECK(fs::exists(out / name));

  const json scan = json::parse(slurp(out / "scan.json"));
  REQUIRE(scan["root_found"].get<bool>());
  CHECK(std::abs(scan["root"].get<double>() / 0.1911440099 - 1.0) <= 1e-6);
  CHECK(scan["bracket_found"].get<bool>());
  CHECK_FALSE(scan["caveat"].get<std::string>().empty());
  REQUIRE(scan.contains("mode"));
  CHECK(scan["mode"]["poisson_residual"].get<double>() >= 0.0);
  CHECK(scan["mode"]["transport_residual"].get<double>() >= 0.0);

  const json crit = json::parse(slurp(out / "criterion.json"));
  CHECK(crit["verdict"].get<std::string>() == "Unstable");
  CHECK(crit["criterion_integral"].get<double>() < 0.0);

  const json func = json::parse(slurp(out / "functional.json"));
  CHECK(func["total"].get<double>() < 0.0);
  CHECK(func["error_budget"].get<double>() > 0.0);

  // wave samples: header plus one row per grid node
  CHECK(line_count(slurp(out / "wave.csv")) == 1 + 513);
}

TEST_CASE("impossible equilibria exit 2 and write nothing") {
  const fs::path dir = case_dir("noosc");
  const fs::path out = dir / "out";
  const fs::path cfg = write_config(dir,
                                    "[profile]\n"
                                    "family = maxwellian\n"
                                    "[wave]\n"
                                    "phi_plus = 0.05\n"
                                    "[output]\n"
                                    "dir = " + out.string() + "\n");
  const CliResult r = run_cli(dir, "construct --config \"" + cfg.string() + "\"");
  CHECK(r.code == 2);
  CHECK(r.err.find("NonOscillatory") != std::string::npos);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("configuration mistakes exit 4 before any work") {
  const fs::path dir = case_dir("badcfg");
  const fs::path out = dir / "out";

  const fs::path neg = write_config(dir,
                                    "[wave]\n"
                                    "phi_plus = 0.05\n"
                                    "grid_n = -512\n"
                                    "[output]\n"
                                    "dir = " + out.string() + "\n");
  CliResult r = run_cli(dir, "criterion --config \"" + neg.string() + "\"");
  CHECK(r.code == 4);
  CHECK(r.err.find("Config") != std::string::npos);
  CHECK_FALSE(fs::exists(out));

  const fs::path unknown = write_config(dir,
                                        "[wave]\n"
                                        "phi_plus = 0.05\n"
                                        "wobble = 3\n");
  r = run_cli(dir, "growth --config \"" + unknown.string() + "\"");
  CHECK(r.code == 4);

  r = run_cli(dir, "growth");
  CHECK(r.code == 4);  // --config is required

  r = run_cli(dir, "");
  CHECK(r.code == 4);  // a subcommand is required

  const fs::path ok = write_config(dir, "[wave]\nphi_plus = 0.05\n[output]\ndir = " +
                                            out.string() + "\n");
  r = run_cli(dir, "construct --config \"" + ok.string() + "\" --grid-n -8");
  CHECK(r.code == 4);
  CHECK_FALSE(fs::exists(out));

  r = run_cli(dir, "construct --config \"" + (dir / "absent.cfg").string() + "\"");
  CHECK(r.code == 3);  // unreadable file is an io failure, not a config one
}

TEST_CASE("construct honors overrides and the orbit diagnostic") {
  const fs::path dir = case_dir("construct");
  const fs::path out = dir / "out";
  const fs::path cfg = write_config(dir,
                                    "[profile]\n"
                                    "kappa = 8\n"
                                    "[wave]\n"
                                    "phi_plus = 0.05\n"
                                    "grid_n = 256\n"
                                    "[output]\n"
                                    "dir = " + out.string() + "\n");

  // the mid-well energy for the diagnostic, from the same construction
  const auto p = bgk::make_profile(bgk::Family::Bump, 1.0, 8.0, 2,
                                   -std::numeric_limits<double>::infinity());
  const bgk::Wave w = bgk::construct_wave(p, 0.05, 128);
  const double e_mid = 0.5 * (w.phi_minus + w.phi_plus);

  CliResult r = run_cli(dir, "construct --config \"" + cfg.string() +
                                 "\" --grid-n 128 --orbit-energy " + num17(e_mid));
  CHECK(r.code == 0);
  CHECK(r.out.find("period:") != std::string::npos);
  CHECK(r.out.find("orbit period:") != std::string::npos);
  CHECK(line_count(slurp(out / "wave.csv")) == 1 + 129);  // --grid-n override
  CHECK(fs::exists(out / "orbit.csv"));
  CHECK(slurp(out / "orbit.csv").rfind("t,x,v\n", 0) == 0);
  CHECK_FALSE(fs::exists(out / "spectrum.csv"));

  // --out redirects everything
  const fs::path out2 = dir / "elsewhere";
  r = run_cli(dir, "construct --config \"" + cfg.string() + "\" --out \"" +
                       out2.string() + "\"");
  CHECK(r.code == 0);
  CHECK(fs::exists(out2 / "wave.csv"));

  // --quiet silences the summary but not the artifacts
  const fs::path out3 = dir / "quiet";
  r = run_cli(dir, "construct --config \"" + cfg.string() + "\" --out \"" +
                       out3.string() + "\" --quiet");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(fs::exists(out3 / "wave.csv"));
}

TEST_CASE("spectrum stage emits the eigenvalue table") {
  const fs::path dir = case_dir("spectrum");
  const fs::path out = dir / "out";
  const fs::path cfg = write_config(dir,
                                    "[profile]\n"
                                    "kappa = 8\n"
                                    "[wave]\n"
                                    "phi_plus = 0.05\n"
                                    "grid_n = 256\n"
                                    "[spectral]\n"
                                    "k = 3\n"
                                    "[output]\n"
                                    "dir = " + out.string() + "\n");
  const CliResult r = run_cli(dir, "spectrum --config \"" + cfg.string() + "\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("lambda0:") != std::string::npos);
  const std::string table = slurp(out / "spectrum.csv");
  CHECK(table.rfind("mode,lambda,lambda_fine\n", 0) == 0);
  CHECK(line_count(table) == 1 + 3);
  CHECK_FALSE(fs::exists(out / "criterion.json"));
}

TEST_CASE("sweep tables are deterministic across worker counts") {
  const fs::path dir = case_dir("sweep");
  const fs::path out1 = dir / "one";
  const fs::path out2 = dir / "four";
  const std::string body =
      "[wave]\n"
      "grid_n = 128\n"
      "[sweep]\n"
      "thetas = 1.0\n"
      "kappas = 0, 8\n"
      "amps = 0.05, 0.08\n"
      "[output]\n";
  const fs::path cfg1 = write_config(dir, body + "dir = " + out1.string() + "\n");

  CliResult r = run_cli(dir, "sweep --config \"" + cfg1.string() + "\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("sweep table:") != std::string::npos);
  const std::string t1 = slurp(out1 / "sweep.csv");
  CHECK(t1.rfind("theta,kappa,amp,P_phi,lambda0,criterion_integral,verdict\n", 0) == 0);
  CHECK(line_count(t1) == 1 + 4);
  CHECK(t1.find("NonOscillatory") != std::string::npos);  // the kappa = 0 rows

  // same grid on four workers, then byte compare
  r = run_cli(dir, "sweep --config \"" + cfg1.string() + "\" --out \"" +
                       out2.string() + "\"",
              "BGKSTAB_WORKERS=4 ");
  CHECK(r.code == 0);
  CHECK(slurp(out2 / "sweep.csv") == t1);

  // a second serial run reproduces the bytes too
  const fs::path out3 = dir / "rerun";
  r = run_cli(dir, "sweep --config \"" + cfg1.string() + "\" --out \"" +
                       out3.string() + "\"");
  CHECK(r.code == 0);
  CHECK(slurp(out3 / "sweep.csv") == t1);

  r = run_cli(dir, "sweep --config \"" + cfg1.string() + "\"", "BGKSTAB_WORKERS=soup ");
  CHECK(r.code == 4);

  // failed rows carry the error class instead of aborting the sweep
  const std::string rows = t1.substr(t1.find('\n') + 1);
  size_t verdicts = 0;
  for (const char* token : {"Unstable", "Inconclusive", "NonOscillatory",
                            "AmplitudeTooLarge", "SpectralOrder"}) {
    size_t pos = 0;
    while ((pos = rows.find(token, pos)) != std::string::npos) {
      ++verdicts;
      pos += std::string(token).size();
    }
  }
  CHECK(verdicts == 4);  // every row ends in a verdict or an error class
}

}  // TEST_SUITE
