#include <cmath>
#include <vector>

#include "bgkstab/tridiag.hpp"
#include "doctest.h"

using namespace bgk;

namespace {

// Dirichlet Laplacian on (0,L) with n interior points: the discrete eigenvalues
// are (4/h^2) sin^2(k pi h / (2 L)), eigenvectors sin(k pi x_i / L).
void laplacian(int n, double L, std::vector<double>& d, std::vector<double>& e, double& h) {
  h = L / (n + 1);
  d.assign(n, 2.0 / (h * h));
  e.assign(n - 1, -1.0 / (h * h));
}

}  // namespace

TEST_SUITE("tridiag") {

TEST_CASE("discrete Laplacian eigenvalues match the closed form") {
  std::vector<double> d, e;
  double h;
  const double L = 1.7;
  laplacian(200, L, d, e, h);
  auto lams = smallest_eigenvalues(d, e, 4);
  for (int k = 1; k <= 4; ++k) {
    const double s = std::sin(k * M_PI * h / (2.0 * L));
    const double exact = 4.0 / (h * h) * s * s;
    CHECK(lams[k - 1] == doctest::Approx(exact).epsilon(1e-12));
  }
  CHECK(lams[0] < lams[1]);
  CHECK(lams[1] < lams[2]);
}

TEST_CASE("sturm count brackets eigenvalues") {
  std::vector<double> d, e;
  double h;
  laplacian(64, 1.0, d, e, h);
  auto lams = smallest_eigenvalues(d, e, 3);
  CHECK(sturm_count(d, e, lams[0] - 1.0) == 0);
  CHECK(sturm_count(d, e, 0.5 * (lams[0] + lams[1])) == 1);
  CHECK(sturm_count(d, e, 0.5 * (lams[1] + lams[2])) == 2);
}

TEST_CASE("diagonal shift moves the spectrum exactly") {
  std::vector<double> d, e;
  double h;
  laplacian(100, 2.0, d, e, h);
  auto base = smallest_eigenvalues(d, e, 2);
  const double c = 7.25;
  for (double& x : d) x -= c;
  auto shifted = smallest_eigenvalues(d, e, 2);
  CHECK(shifted[0] == doctest::Approx(base[0] - c).epsilon(1e-12));
  CHECK(shifted[1] == doctest::Approx(base[1] - c).epsilon(1e-12));
}

TEST_CASE("inverse iteration recovers the sine eigenvector") {
  std::vector<double> d, e;
  double h;
  const int n = 150;
  const double L = 1.0;
  laplacian(n, L, d, e, h);
  auto lams = smallest_eigenvalues(d, e, 2);
  for (int k = 1; k <= 2; ++k) {
    auto v = inverse_iteration(d, e, lams[k - 1]);
    // cosine similarity against the analytic eigenvector
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (int i = 0; i < n; ++i) {
      const double u = std::sin(k * M_PI * (i + 1) * h / L);
      dot += u * v[i];
      na += u * u;
      nb += v[i] * v[i];
    }
    CHECK(std::abs(dot) / std::sqrt(na * nb) >= 1.0 - 1e-10);
    // residual || (T - lambda) v ||
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) {
      double t = (d[i] - lams[k - 1]) * v[i];
      if (i > 0) t += e[i - 1] * v[i - 1];
      if (i + 1 < n) t += e[i] * v[i + 1];
      r2 += t * t;
    }
    CHECK(std::sqrt(r2) <= 1e-8 * d[0]);
  }
}

}  // TEST_SUITE
