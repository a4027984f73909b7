// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "bgkstab/error.hpp"

namespace bgk {

// Composite Simpson on a uniform grid of n+1 values (n even).
inline double simpson(const std::vector<double>& f, double h) {
  const std::size_t n = f.size() - 1;
  if (n % 2 != 0 || n < 2) fail(Status::Internal, "simpson needs an even interval count");
  double s_odd = 0.0, s_even = 0.0;
  for (std::size_t i = 1; i < n; i += 2) s_odd += f[i];
  for (std::size_t i = 2; i < n; i += 2) s_even += f[i];
  return h / 3.0 * (f[0] + f[n] + 4.0 * s_odd + 2.0 * s_even);
}

// Fourth-order first derivative on a uniform grid; 5-point one-sided stencils
// at the boundary so endpoint values stay fourth order.
inline std::vector<double> d4_derivative(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  if (n < 5) fail(Status::Internal, "d4_derivative needs at least 5 nodes");
  std::vector<double> g(n);
  for (std::size_t i = 2; i + 2 < n; ++i)
    g[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
  g[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / (12.0 * h);
  g[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / (12.0 * h);
  g[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] +
              3.0 * f[n - 5]) / (12.0 * h);
  g[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] -
              f[n - 5]) / (12.0 * h);
  return g;
}

// Brent root finder on a sign-changing bracket.
inline double find_root_brent(const std::function<double(double)>& f, double a, double b,
                              double xtol, int max_iter = 200) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) fail(Status::Domain, "find_root_brent: no sign change on bracket");
  double c = a, fc = fa, d = b - a, e = b - a;
  for (int it = 0; it < max_iter; ++it) {
    if ((fb > 0.0) == (fc > 0.0)) { c = a; fc = fa; d = b - a; e = d; }
    if (std::abs(fc) < std::abs(fb)) { a = b; b = c; c = a; fa = fb; fb = fc; fc = fa; }
    const double tol1 = 2.0 * 2.220446049250313e-16 * std::abs(b) + 0.5 * xtol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) { p = 2.0 * xm * s; q = 1.0 - s; }
      else {
        q = fa / fc; r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d; d = p / q;
      } else { d = xm; e = d; }
    } else { d = xm; e = d; }
    a = b; fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
  }
  return b;
}

// |g_k|^2 for k = 0..n/2 of a real sequence sampled over one period,
// normalized by 1/n so g_0 is the mean. Plain O(n^2) sums: n stays small
// and the node set must be reproducible to the bit across platforms.
inline std::vector<double> power_spectrum(const std::vector<double>& g) {
  const std::size_t n = g.size();
  const std::size_t m = n / 2;
  std::vector<double> p(m + 1);
  const double two_pi_over_n = 2.0 * M_PI / static_cast<double>(n);
  for (std::size_t k = 0; k <= m; ++k) {
    double re = 0.0, im = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double ang = two_pi_over_n * static_cast<double>(k * j % n);
      re += g[j] * std::cos(ang);
      im -= g[j] * std::sin(ang);
    }
    re /= static_cast<double>(n);
    im /= static_cast<double>(n);
    p[k] = re * re + im * im;
  }
  return p;
}

inline double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace bgk
