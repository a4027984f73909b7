// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#include "bgkstab/tridiag.hpp"

#include <algorithm>
#include <cmath>

#include "bgkstab/error.hpp"

namespace bgk {

int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x) {
  const std::size_t n = d.size();
  int count = 0;
  double q = 1.0;
  const double tiny = 1e-300;
  for (std::size_t i = 0; i < n; ++i) {
    const double off2 = (i == 0) ? 0.0 : e[i - 1] * e[i - 1];
    q = (d[i] - x) - off2 / q;
    if (q == 0.0) q = tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> smallest_eigenvalues(const std::vector<double>& d,
                                         const std::vector<double>& e, int k) {
  const std::size_t n = d.size();
  if (k < 1 || static_cast<std::size_t>(k) > n)
    fail(Status::Internal, "smallest_eigenvalues: bad k");
  // Gershgorin interval
  double lo = d[0], hi = d[0];
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < n ? std::abs(e[i]) : 0.0);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  const double span = hi - lo;
  std::vector<double> out(k);
  for (int j = 0; j < k; ++j) {
    double a = lo, b = hi;
    // eigenvalue_j = inf { x : count(x) >= j+1 }
    for (int it = 0; it < 140; ++it) {
      const double mid = 0.5 * (a + b);
      if (sturm_count(d, e, mid) >= j + 1) b = mid; else a = mid;
      if (b - a <= 1e-15 * std::max(1.0, std::abs(b)) + 1e-18 * span) break;
    }
    out[j] = 0.5 * (a + b);
  }
  return out;
}

namespace {

// Factor T - lambda*I (general tridiagonal LU with partial pivoting, the
// textbook gttrf layout with a second superdiagonal for fill-in), then solve.
void solve_shifted(const std::vector<double>& diag, const std::vector<double>& off,
                   double lambda, std::vector<double>& b) {
  const std::size_t n = diag.size();
  std::vector<double> d(n), dl(n > 1 ? n - 1 : 0), du(n > 1 ? n - 1 : 0),
      du2(n > 2 ? n - 2 : 0, 0.0);
  std::vector<int> swapped(n > 1 ? n - 1 : 0, 0);
  for (std::size_t i = 0; i < n; ++i) d[i] = diag[i] - lambda;
  for (std::size_t i = 0; i + 1 < n; ++i) { dl[i] = off[i]; du[i] = off[i]; }
  const double tiny = 1e-300;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == 0.0) d[i] = tiny;
      const double fact = dl[i] / d[i];
      dl[i] = fact;
      d[i + 1] -= fact * du[i];
    } else {
      const double fact = d[i] / dl[i];
      d[i] = dl[i];
      dl[i] = fact;
      const double t = du[i];
      du[i] = d[i + 1];
      d[i + 1] = t - fact * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -fact * du[i + 1];
      }
      swapped[i] = 1;
    }
  }
  if (d[n - 1] == 0.0) d[n - 1] = tiny;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!swapped[i]) {
      b[i + 1] -= dl[i] * b[i];
    } else {
      const double t = b[i];
      b[i] = b[i + 1];
      b[i + 1] = t - dl[i] * b[i];
    }
  }
  b[n - 1] /= d[n - 1];
  if (n >= 2) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
  for (std::size_t ii = n - 1; ii-- > 1;) {
    const std::size_t i = ii - 1;
    double v = b[i] - du[i] * b[i + 1];
    if (i + 2 < n) v -= du2[i] * b[i + 2];
    b[i] = v / d[i];
  }
}

}  // namespace

std::vector<double> inverse_iteration(const std::vector<double>& d,
                                      const std::vector<double>& e, double lambda) {
  const std::size_t n = d.size();
  std::vector<double> x(n);
  // fixed pseudo-random start vector, reproducible across runs
  unsigned long long state = 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = 0; i < n; ++i) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    x[i] = static_cast<double>((state >> 11) & 0xffffffffULL) / 4294967295.0 - 0.5;
  }
  for (int it = 0; it < 4; ++it) {
    solve_shifted(d, e, lambda, x);
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    if (m == 0.0) fail(Status::Internal, "inverse_iteration: zero vector");
    for (double& v : x) v /= m;
  }
  double nrm = 0.0;
  for (double v : x) nrm += v * v;
  nrm = std::sqrt(nrm);
  for (double& v : x) v /= nrm;
  return x;
}

}  // namespace bgk
