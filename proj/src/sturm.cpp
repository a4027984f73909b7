// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#include "bgkstab/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "bgkstab/error.hpp"
#include "bgkstab/numerics.hpp"
#include "bgkstab/tridiag.hpp"

namespace bgk {
namespace {

void fd_matrix(const std::vector<double>& q, double length, std::vector<double>& d,
               std::vector<double>& e) {
  const int n = static_cast<int>(q.size()) - 1;  // intervals
  const double h = length / static_cast<double>(n);
  d.resize(n - 1);
  e.assign(n - 2, -1.0 / (h * h));
  for (int i = 0; i < n - 1; ++i) d[i] = 2.0 / (h * h) - q[i + 1];
}

void normalize_unit(std::vector<double>& u, double h) {
  const int n = static_cast<int>(u.size()) - 1;
  std::vector<double> u2(n + 1);
  for (int i = 0; i <= n; ++i) u2[i] = u[i] * u[i];
  const double nrm = simpson(u2, h);
  if (!(nrm > 0.0)) fail(Status::SpectralOrder, "degenerate eigenvector norm");
  double sc = 1.0 / std::sqrt(nrm);
  int j = 1;
  while (j < n && u[j] == 0.0) ++j;
  if (u[j] < 0.0) sc = -sc;
  for (double& v : u) v *= sc;
}

// interior solution -> full grid with zero endpoints, unit norm, sign pinned
std::vector<double> embed_unit(const std::vector<double>& vin, int n, double h) {
  std::vector<double> u(n + 1, 0.0);
  for (int i = 0; i < n - 1; ++i) u[i + 1] = vin[i];
  normalize_unit(u, h);
  return u;
}

}  // namespace

Spectrum solve_eigen(const Wave& w, int count) {
  const int n = w.grid_n;
  if (count < 1) fail(Status::Domain, "eigenvalue count must be positive");
  if (count >= n / 8) fail(Status::Domain, "eigenvalue count too large for the grid");

  // nested grids share nodes, so the coarse coefficient is an exact subsample
  std::vector<double> qc(n / 2 + 1);
  for (int j = 0; j <= n / 2; ++j) qc[j] = w.q[2 * j];

  std::vector<double> d, e;
  fd_matrix(w.q, w.period, d, e);
  const std::vector<double> lf = smallest_eigenvalues(d, e, count);
  std::vector<double> dc, ec;
  fd_matrix(qc, w.period, dc, ec);
  const std::vector<double> lc = smallest_eigenvalues(dc, ec, count);

  Spectrum s;
  s.h = w.period / static_cast<double>(n);
  s.lambda_fine = lf;
  s.lambda.resize(count);
  for (int k = 0; k < count; ++k) s.lambda[k] = (4.0 * lf[k] - lc[k]) / 3.0;

  s.u.assign(count, {});
  const bool extrapolate_vectors = (n % 4 == 0) && n >= 64;
  for (int k = 0; k < count; ++k) {
    std::vector<double> u = embed_unit(inverse_iteration(d, e, lf[k]), n, s.h);
    if (extrapolate_vectors) {
      const std::vector<double> uc =
          embed_unit(inverse_iteration(dc, ec, lc[k]), n / 2, 2.0 * s.h);
      // the pointwise error carries a smooth h^2 leading term, so the nested
      // grids cancel it; odd fine nodes get the correction by midpoint cubic
      const int m = n / 2;
      std::vector<double> corr(m + 1);
      for (int j = 0; j <= m; ++j) corr[j] = (u[2 * j] - uc[j]) / 3.0;
      for (int j = 0; j <= m; ++j) u[2 * j] += corr[j];
      for (int j = 0; j < m; ++j) {
        double ch;
        if (j == 0)
          ch = (5.0 * corr[0] + 15.0 * corr[1] - 5.0 * corr[2] + corr[3]) / 16.0;
        else if (j == m - 1)
          ch = (5.0 * corr[m] + 15.0 * corr[m - 1] - 5.0 * corr[m - 2] + corr[m - 3]) / 16.0;
        else
          ch = (-corr[j - 1] + 9.0 * corr[j] + 9.0 * corr[j + 1] - corr[j + 2]) / 16.0;
        u[2 * j + 1] += ch;
      }
      normalize_unit(u, s.h);
    }
    s.u[k] = std::move(u);
  }
  return s;
}

GroundState ground_state(const Wave& w, double lambda1_tol) {
  if (lambda1_tol < 0.0) fail(Status::Domain, "lambda1_tol must be nonnegative");
  Spectrum s = solve_eigen(w, 2);
  GroundState g;
  g.lambda0 = s.lambda[0];
  g.lambda0_fine = s.lambda_fine[0];
  g.lambda1 = s.lambda[1];
  g.u0 = std::move(s.u[0]);
  g.u1 = std::move(s.u[1]);
  g.grid_h = s.h;
  if (!(g.lambda0 < 0.0))
    fail(Status::SpectralOrder, "lowest eigenvalue is not negative");
  if (!w.synthetic) {
    const double tol = lambda1_tol > 0.0
                           ? lambda1_tol
                           : std::max(1e-6, 10.0 * s.h * s.h * max_abs(w.q));
    if (std::abs(g.lambda1) > tol)
      fail(Status::SpectralOrder, "second eigenvalue misses the translation kernel");
  }
  return g;
}

}  // namespace bgk
