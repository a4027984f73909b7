// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#include "bgkstab/dispersion.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>

#include "bgkstab/error.hpp"
#include "bgkstab/interp.hpp"
#include "bgkstab/numerics.hpp"
#include "bgkstab/orbit.hpp"
#include "bgkstab/quadrature.hpp"

namespace bgk {

namespace {

// Time samples per orbit period. The per-orbit signal psi(X(t)) is smooth and
// carries a handful of harmonics, so 128 nodes put the spectral tail far
// below the quadrature noise even for near-separatrix orbits.
constexpr int kM = 128;

constexpr const char* kRootCaveat =
    "root of the scalar dispersion projection along the supplied field shape; "
    "signals instability but is not a certified spectral eigenvalue";

const std::array<double, kM>& cos_table() {
  static const std::array<double, kM> t = [] {
    std::array<double, kM> a{};
    for (int r = 0; r < kM; ++r) a[r] = std::cos(2.0 * M_PI * r / kM);
    return a;
  }();
  return t;
}

const std::array<double, kM>& sin_table() {
  static const std::array<double, kM> t = [] {
    std::array<double, kM> a{};
    for (int r = 0; r < kM; ++r) a[r] = std::sin(2.0 * M_PI * r / kM);
    return a;
  }();
  return t;
}

// Half-width of the energy band excluded around the separatrix. The floor
// keeps the degenerate v = 0 row of a flat state out of the orbit machinery.
double sep_band(const Wave& w) {
  const double span = w.phi_plus - w.phi_minus;
  return std::max(span > 0.0 ? 1e-8 * span : 0.0, 1e-16 * w.profile.theta);
}

// Energy above which the profile tail is negligible at the 1e-16 level.
double energy_cutoff(const Wave& w) {
  const double t = moment_cutoff(w.profile, w.phi_plus);
  return w.phi_plus + t * t;
}

// kM positions equispaced in time along the forward characteristic from
// (x0, v0), spacing T / kM. Step count scales with both the period and the
// fast crossing speed so slow near-separatrix transits stay resolved.
std::vector<double> sample_cell_orbit(const Wave& w, double x0, double v0, double e,
                                      double T) {
  const double vm = std::sqrt(2.0 * std::max(e - w.phi_minus, 1e-300));
  double want = 256.0 * T * vm / w.period;
  const int total = static_cast<int>(std::min(1048576.0, std::max(2048.0, want)));
  const int sub = (total + kM - 1) / kM;
  const double h = T / kM / sub;
  std::vector<double> xs(kM);
  double x = x0, v = v0;
  for (int j = 0; j < kM; ++j) {
    xs[j] = x;
    for (int s = 0; s < sub; ++s) {
      // RK4 on x' = v, v' = -phi'(x)
      const double k1x = v, k1v = -w.dphi_at(x);
      const double k2x = v + 0.5 * h * k1v, k2v = -w.dphi_at(x + 0.5 * h * k1x);
      const double k3x = v + 0.5 * h * k2v, k3v = -w.dphi_at(x + 0.5 * h * k2x);
      const double k4x = v + h * k3v, k4v = -w.dphi_at(x + h * k3x);
      x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
      v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    }
  }
  return xs;
}

// History average from one period of samples taken backward in time:
// gr[j] = psi(X(-j T / kM)). Writing the trig interpolant
//   g(s) = a0 + sum_k a_k cos(w_k s) + b_k sin(w_k s),  w_k = 2 pi k / T,
// every harmonic integrates against lambda e^{lambda s} in closed form and
// the periodic closure cancels the 1 - e^{-lambda T} normalization exactly:
//   owa = a0 + sum_k (a_k lambda^2 - b_k lambda w_k) / (lambda^2 + w_k^2).
// With samples at s = -j T / kM the sine sum flips sign, so -b_k is the
// plain sine transform of gr. Exact in lambda; no underflow anywhere.
double owa_from_samples(const std::vector<double>& gr, double T, double lambda) {
  const auto& ct = cos_table();
  const auto& st = sin_table();
  double mean = 0.0;
  for (int j = 0; j < kM; ++j) mean += gr[j];
  mean /= kM;
  double out = mean;
  const double l2 = lambda * lambda;
  for (int k = 1; k <= kM / 2; ++k) {
    double cs = 0.0, sn = 0.0;
    std::size_t idx = 0;
    for (int j = 0; j < kM; ++j) {
      cs += gr[j] * ct[idx];
      sn += gr[j] * st[idx];
      idx += k;
      if (idx >= kM) idx -= kM;
    }
    double ak = 2.0 * cs / kM;
    double mbk = 2.0 * sn / kM;  // -b_k
    if (k == kM / 2) {
      ak *= 0.5;
      mbk = 0.0;
    }
    const double om = 2.0 * M_PI * k / T;
    out += (ak * l2 + mbk * lambda * om) / (l2 + om * om);
  }
  return out;
}

// One energy node of the orbit quadrature: gk weight folded with mu'(e) and
// the branch multiplicity (2 free directions, 1 closed trapped orbit).
struct OrbitNode {
  double e = 0.0;
  double wgt = 0.0;
  double T = 0.0;
  std::vector<double> xs;
};

struct OrbitTable {
  std::vector<OrbitNode> nodes;
};

// Energy panels graded geometrically into the separatrix from both sides,
// 15-point Kronrod nodes per panel. The grading resolves the logarithmic
// period blow-up; the excluded band itself carries O(eps log 1/eps) mass.
OrbitTable build_orbit_table(const Wave& w) {
  OrbitTable tab;
  const double span = w.phi_plus - w.phi_minus;
  const double e_top = energy_cutoff(w);
  auto add_panel = [&](double a, double b, double coeff) {
    if (!(b > a)) return;
    double xs15[15], ws15[15];
    gk15_points(a, b, xs15, ws15);
    for (int i = 0; i < 15; ++i) {
      OrbitNode nd;
      nd.e = xs15[i];
      Orbit o = trace_orbit(w, nd.e, kM, 2048);
      nd.T = o.period;
      nd.xs = std::move(o.xs);
      nd.wgt = ws15[i] * w.profile.mu_prime(nd.e) * coeff;
      tab.nodes.push_back(std::move(nd));
    }
  };
  if (span > 0.0) {
    const double eps = 1e-8 * span;
    std::vector<double> edges{w.phi_minus};
    for (double d = 0.5 * span; d > eps; d *= 0.5) edges.push_back(w.phi_plus - d);
    edges.push_back(w.phi_plus - eps);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
      add_panel(edges[i], edges[i + 1], 1.0);
  }
  const double lo = sep_band(w);
  std::vector<double> off{lo};
  while (off.back() < e_top - w.phi_plus) off.push_back(4.0 * off.back());
  off.back() = e_top - w.phi_plus;
  for (std::size_t i = 0; i + 1 < off.size(); ++i)
    add_panel(w.phi_plus + off[i], w.phi_plus + off[i + 1], 2.0);
  return tab;
}

// h(lambda) with the shape-dependent per-orbit power spectra baked in, so a
// scan re-evaluates only the rational weights.
struct ScalarEval {
  double gradient = 0.0;
  struct Node {
    double wgt = 0.0, T = 0.0;
    std::vector<double> p;
  };
  std::vector<Node> nodes;

  double operator()(double lambda) const {
    const double l2 = lambda * lambda;
    double kin = 0.0;
    for (const auto& nd : nodes) {
      double s = nd.p[0];
      for (int k = 1; k <= kM / 2; ++k) {
        const double om = 2.0 * M_PI * k / nd.T;
        const double mult = (k == kM / 2) ? 1.0 : 2.0;
        s += mult * nd.p[k] * l2 / (l2 + om * om);
      }
      kin += nd.wgt * nd.T * s;
    }
    return gradient + kin;
  }
};

void require_shape(const Wave& w, const std::vector<double>& psi) {
  if (psi.size() != static_cast<std::size_t>(w.grid_n) + 1)
    throw Error(Status::Domain, "field shape does not match the wave grid");
}

ScalarEval build_scalar(const Wave& w, const OrbitTable& tab,
                        const std::vector<double>& psi) {
  ScalarEval ev;
  const double h = w.period / w.grid_n;
  const auto dpsi = d4_derivative(psi, h);
  std::vector<double> f(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i)
    f[i] = dpsi[i] * dpsi[i] - w.q[i] * psi[i] * psi[i];
  ev.gradient = simpson(f, h);
  CubicHermite ps(0.0, h, psi, dpsi, true);
  std::vector<double> g(kM);
  ev.nodes.reserve(tab.nodes.size());
  for (const auto& nd : tab.nodes) {
    for (int j = 0; j < kM; ++j) g[j] = ps.eval(nd.xs[j]);
    ev.nodes.push_back({nd.wgt, nd.T, power_spectrum(g)});
  }
  return ev;
}

void check_scan_range(double lo, double hi, int n_scan) {
  if (!(lo > 0.0) || !(hi > lo))
    throw Error(Status::Domain, "scan range must satisfy 0 < lo < hi");
  if (n_scan < 8) throw Error(Status::Domain, "scan needs at least 8 nodes");
}

void default_scan_range(const Wave& w, double& lo, double& hi) {
  if (lo == 0.0 && hi == 0.0) {
    const double r0 = 2.0 * M_PI / w.period;
    lo = 1e-3 * r0;
    hi = 1e3 * r0;
  }
}

// RMS residuals of the assembled mode; lambda-sign aware so reflected modes
// are checked against their own rate.
void residual_norms(const Wave& w, GrowingMode& m) {
  const int nx = static_cast<int>(m.xs.size());
  const int nv = static_cast<int>(m.vs.size());
  const int stride = w.grid_n / nx;
  const double dx = w.period / nx;
  const double dv = m.vs[1] - m.vs[0];
  const double hw = w.period / w.grid_n;
  const auto dpsi = d4_derivative(m.psi, hw);

  double acc = 0.0;
  long cnt = 0;
  auto at = [&](int i, int j) { return m.dist[static_cast<std::size_t>(i) * nv + j]; };
  auto open = [&](int i, int j) { return m.excluded[static_cast<std::size_t>(i) * nv + j] == 0; };
  for (int i = 0; i < nx; ++i) {
    const int il = (i + nx - 1) % nx, ir = (i + 1) % nx;
    const int iw = i * stride;
    for (int j = 1; j + 1 < nv; ++j) {
      if (!open(i, j) || !open(il, j) || !open(ir, j) || !open(i, j - 1) || !open(i, j + 1))
        continue;
      const double v = m.vs[j];
      const double e = 0.5 * v * v + w.phi[iw];
      const double r = m.lambda * at(i, j) + v * (at(ir, j) - at(il, j)) / (2.0 * dx) -
                       w.dphi[iw] * (at(i, j + 1) - at(i, j - 1)) / (2.0 * dv) +
                       dpsi[iw] * v * w.profile.mu_prime(e);
      acc += r * r;
      ++cnt;
    }
  }
  m.transport_residual = std::sqrt(acc / std::max<long>(cnt, 1));

  double acc2 = 0.0;
  for (int i = 0; i < nx; ++i) {
    const int iw = i * stride;
    double mom = 0.0;
    for (int j = 0; j + 1 < nv; ++j) mom += 0.5 * dv * (at(i, j) + at(i, j + 1));
    const int left = (iw == 0) ? w.grid_n - 1 : iw - 1;
    const double d2 = (m.psi[iw + 1] - 2.0 * m.psi[iw] + m.psi[left]) / (hw * hw);
    const double r = d2 - mom;
    acc2 += r * r;
  }
  m.poisson_residual = std::sqrt(acc2 / nx);
}

// Smallest eigenvalue of a symmetric matrix by cyclic Jacobi rotations.
double jacobi_min_eig(std::vector<double> a, int n) {
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
    if (off < 1e-28) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t), s = t * c;
        for (int r = 0; r < n; ++r) {
          const double arp = a[r * n + p], arq = a[r * n + q];
          a[r * n + p] = c * arp - s * arq;
          a[r * n + q] = s * arp + c * arq;
        }
        for (int r = 0; r < n; ++r) {
          const double apr = a[p * n + r], aqr = a[q * n + r];
          a[p * n + r] = c * apr - s * aqr;
          a[q * n + r] = s * apr + c * aqr;
        }
      }
    }
  }
  double mn = a[0];
  for (int p = 1; p < n; ++p) mn = std::min(mn, a[p * n + p]);
  return mn;
}

}  // namespace

std::vector<double> make_vgrid(const Wave& w, int n) {
  if (n < 9 || n % 2 == 0)
    throw Error(Status::Domain, "velocity grid needs an odd node count of at least 9");
  const double vmax = std::sqrt(2.0 * (energy_cutoff(w) - w.phi_minus));
  const int c = (n - 1) / 2;
  const double dv = vmax / c;
  std::vector<double> vs(n);
  for (int j = 0; j < n; ++j) vs[j] = (j - c) * dv;
  return vs;
}

double orbit_weighted_average(const Wave& w, const std::vector<double>& psi,
                              double e, double x, double v, double lambda) {
  require_shape(w, psi);
  if (!(lambda > 0.0)) throw Error(Status::Domain, "orbit average needs a positive rate");
  const double e_chk = 0.5 * v * v + w.phi_at(x);
  if (std::abs(e - e_chk) > 1e-6 * (std::abs(e) + w.profile.theta))
    throw Error(Status::Domain, "energy inconsistent with the phase point");
  if (std::abs(e - w.phi_plus) <= sep_band(w))
    throw Error(Status::Domain, "energy inside the separatrix exclusion band");

  const double h = w.period / w.grid_n;
  CubicHermite ps(0.0, h, psi, d4_derivative(psi, h), true);
  const double span = w.phi_plus - w.phi_minus;
  if (e < w.phi_plus && e - w.phi_minus <= 1e-12 * std::max(span, w.profile.theta))
    return ps.eval(x);  // degenerate orbit at the well bottom never moves

  const double T = orbit_period_quadrature(w, e);
  // backward history of (x, v) is the forward trajectory of (x, -v)
  const auto xs = sample_cell_orbit(w, x, -v, e, T);
  std::vector<double> g(kM);
  for (int j = 0; j < kM; ++j) g[j] = ps.eval(xs[j]);
  return owa_from_samples(g, T, lambda);
}

GrowingMode assemble_mode(const Wave& w, const std::vector<double>& psi,
                          double lambda, const std::vector<double>& vgrid,
                          int nx_cells) {
  require_shape(w, psi);
  if (!(lambda > 0.0)) throw Error(Status::Domain, "mode assembly needs a positive rate");
  if (nx_cells < 8 || w.grid_n % nx_cells != 0)
    throw Error(Status::Domain, "mode columns must divide the wave grid");
  const int nv = static_cast<int>(vgrid.size());
  if (nv < 9 || nv % 2 == 0)
    throw Error(Status::Domain, "velocity grid needs an odd node count of at least 9");
  for (int j = 0; j < nv; ++j) {
    if (std::abs(vgrid[j] + vgrid[nv - 1 - j]) > 1e-12 * (std::abs(vgrid[j]) + 1.0))
      throw Error(Status::Domain, "velocity grid must be symmetric about zero");
    if (j > 0 && !(vgrid[j] > vgrid[j - 1]))
      throw Error(Status::Domain, "velocity grid must be strictly increasing");
  }

  GrowingMode m;
  m.lambda = lambda;
  m.psi = psi;
  const double h = w.period / w.grid_n;
  const auto dpsi = d4_derivative(psi, h);
  m.field_shape.resize(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) m.field_shape[i] = -dpsi[i];
  CubicHermite ps(0.0, h, psi, dpsi, true);

  const int stride = w.grid_n / nx_cells;
  m.xs.resize(nx_cells);
  for (int i = 0; i < nx_cells; ++i) m.xs[i] = w.x[static_cast<std::size_t>(i) * stride];
  m.vs = vgrid;
  m.dist.assign(static_cast<std::size_t>(nx_cells) * nv, 0.0);
  m.excluded.assign(static_cast<std::size_t>(nx_cells) * nv, 0);

  const double band = sep_band(w);
  const double span = w.phi_plus - w.phi_minus;
  const double bottom = 1e-12 * std::max(span, w.profile.theta);
  std::vector<double> g(kM);
  for (int i = 0; i < nx_cells; ++i) {
    const double xi = m.xs[i];
    const double phi_i = w.phi[static_cast<std::size_t>(i) * stride];
    const double psi_i = psi[static_cast<std::size_t>(i) * stride];
    double t_cache = -1.0;
    // v and -v share the energy, so the period carries across the mirror cell
    for (int half = 0; half <= (nv - 1) / 2; ++half) {
      t_cache = -1.0;
      for (int side = 0; side < 2; ++side) {
        const int j = (side == 0) ? (nv - 1) / 2 - half : (nv - 1) / 2 + half;
        if (side == 1 && half == 0) continue;
        const double v = vgrid[j];
        const double e = 0.5 * v * v + phi_i;
        const std::size_t cell = static_cast<std::size_t>(i) * nv + j;
        if (std::abs(e - w.phi_plus) <= band) {
          m.excluded[cell] = 1;
          continue;
        }
        if (e < w.phi_plus && e - w.phi_minus <= bottom) continue;  // fixed point, F = 0
        if (t_cache < 0.0) t_cache = orbit_period_quadrature(w, e);
        const auto xs = sample_cell_orbit(w, xi, -v, e, t_cache);
        for (int r = 0; r < kM; ++r) g[r] = ps.eval(xs[r]);
        m.dist[cell] = w.profile.mu_prime(e) *
                       (owa_from_samples(g, t_cache, lambda) - psi_i);
      }
    }
  }
  residual_norms(w, m);
  return m;
}

GrowingMode reflect_mode(const Wave& w, const GrowingMode& m) {
  GrowingMode r = m;
  r.lambda = -m.lambda;
  const int nv = static_cast<int>(m.vs.size());
  const int nx = static_cast<int>(m.xs.size());
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < nv; ++j) {
      const std::size_t dst = static_cast<std::size_t>(i) * nv + j;
      const std::size_t src = static_cast<std::size_t>(i) * nv + (nv - 1 - j);
      r.dist[dst] = m.dist[src];
      r.excluded[dst] = m.excluded[src];
    }
  }
  residual_norms(w, r);
  return r;
}

double dispersion_scalar(const Wave& w, const std::vector<double>& psi, double lambda) {
  require_shape(w, psi);
  if (!(lambda > 0.0))
    throw Error(Status::Domain, "dispersion function needs a positive rate");
  const OrbitTable tab = build_orbit_table(w);
  const ScalarEval ev = build_scalar(w, tab, psi);
  return ev(lambda);
}

DispersionScan find_growth_rate(const Wave& w, const std::vector<double>& psi,
                                double lambda_lo, double lambda_hi, int n_scan) {
  require_shape(w, psi);
  default_scan_range(w, lambda_lo, lambda_hi);
  check_scan_range(lambda_lo, lambda_hi, n_scan);

  const OrbitTable tab = build_orbit_table(w);
  const ScalarEval ev = build_scalar(w, tab, psi);

  DispersionScan scan;
  scan.caveat = kRootCaveat;
  scan.lambdas.resize(n_scan);
  scan.h_values.resize(n_scan);
  const double ratio = std::log(lambda_hi / lambda_lo);
  for (int i = 0; i < n_scan; ++i) {
    scan.lambdas[i] = lambda_lo * std::exp(ratio * i / (n_scan - 1));
    scan.h_values[i] = ev(scan.lambdas[i]);
    if (!std::isfinite(scan.h_values[i]))
      throw Error(Status::Internal, "dispersion scan produced a non-finite value");
  }

  int ib = -1;
  for (int i = 0; i + 1 < n_scan; ++i) {
    if (scan.h_values[i] == 0.0) {
      scan.bracket_found = scan.root_found = true;
      scan.bracket_lo = scan.bracket_hi = scan.root = scan.lambdas[i];
      return scan;
    }
    if ((scan.h_values[i] < 0.0) != (scan.h_values[i + 1] < 0.0)) {
      ib = i;
      break;
    }
  }
  if (ib < 0) {
    scan.caveat += "; no sign change on the scan range";
    return scan;
  }
  scan.bracket_found = true;
  scan.bracket_lo = scan.lambdas[ib];
  scan.bracket_hi = scan.lambdas[ib + 1];

  double a = scan.bracket_lo, b = scan.bracket_hi;
  double fa = scan.h_values[ib];
  const double tol = 1e-8 * std::abs(scan.h_values[ib + 1]);
  double mid = 0.5 * (a + b);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (a + b);
    const double fm = ev(mid);
    if (std::abs(fm) <= tol || (b - a) <= 1e-13 * b) break;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  scan.root_found = true;
  scan.root = mid;
  return scan;
}

GalerkinScan galerkin_scan(const Wave& w, int basis_size, double lambda_lo,
                           double lambda_hi, int n_scan) {
  if (basis_size < 2 || basis_size > 64)
    throw Error(Status::Domain, "galerkin basis size must lie in [2, 64]");
  default_scan_range(w, lambda_lo, lambda_hi);
  check_scan_range(lambda_lo, lambda_hi, n_scan);
  const int K = basis_size;
  const double P = w.period;

  // basis m: even -> sin(2 pi q x / P), odd -> cos(2 pi q x / P) - 1, q = m/2 + 1;
  // all vanish at x = 0 and the constant gauge mode stays out of the span
  auto bval = [&](int m, double x) {
    const double q = 2.0 * M_PI * (m / 2 + 1) / P;
    return (m % 2 == 0) ? std::sin(q * x) : std::cos(q * x) - 1.0;
  };
  auto bder = [&](int m, double x) {
    const double q = 2.0 * M_PI * (m / 2 + 1) / P;
    return (m % 2 == 0) ? q * std::cos(q * x) : -q * std::sin(q * x);
  };

  // static part integral b_m' b_n' - q b_m b_n on the wave grid
  std::vector<double> stat(static_cast<std::size_t>(K) * K, 0.0);
  {
    const double h = P / w.grid_n;
    std::vector<double> f(w.grid_n + 1);
    for (int mi = 0; mi < K; ++mi) {
      for (int ni = mi; ni < K; ++ni) {
        for (int i = 0; i <= w.grid_n; ++i) {
          const double x = w.x[i];
          f[i] = bder(mi, x) * bder(ni, x) - w.q[i] * bval(mi, x) * bval(ni, x);
        }
        stat[mi * K + ni] = stat[ni * K + mi] = simpson(f, h);
      }
    }
  }

  // per-orbit complex spectra of every basis shape
  const OrbitTable tab = build_orbit_table(w);
  const int nk = kM / 2 + 1;
  const std::size_t nn = tab.nodes.size();
  std::vector<double> re(nn * K * nk), im(nn * K * nk);
  {
    const auto& ct = cos_table();
    const auto& st = sin_table();
    std::vector<double> g(kM);
    for (std::size_t o = 0; o < nn; ++o) {
      for (int m = 0; m < K; ++m) {
        for (int j = 0; j < kM; ++j) g[j] = bval(m, tab.nodes[o].xs[j]);
        for (int k = 0; k < nk; ++k) {
          double cs = 0.0, sn = 0.0;
          std::size_t idx = 0;
          for (int j = 0; j < kM; ++j) {
            cs += g[j] * ct[idx];
            sn += g[j] * st[idx];
            idx += k;
            if (idx >= kM) idx -= kM;
          }
          re[(o * K + m) * nk + k] = cs / kM;
          im[(o * K + m) * nk + k] = sn / kM;
        }
      }
    }
  }

  // kinetic section: only Re(c_m conj(c_n)) survives symmetrization
  auto min_eig_at = [&](double lambda) {
    const double l2 = lambda * lambda;
    std::vector<double> a = stat;
    for (std::size_t o = 0; o < nn; ++o) {
      const double wT = tab.nodes[o].wgt * tab.nodes[o].T;
      for (int k = 0; k < nk; ++k) {
        const double om = 2.0 * M_PI * k / tab.nodes[o].T;
        const double mult = (k == 0 || k == kM / 2) ? 1.0 : 2.0;
        const double coef = wT * mult * (k == 0 ? 1.0 : l2 / (l2 + om * om));
        if (coef == 0.0) continue;
        for (int mi = 0; mi < K; ++mi) {
          const double rm = re[(o * K + mi) * nk + k], sm = im[(o * K + mi) * nk + k];
          for (int ni = mi; ni < K; ++ni) {
            const double t = coef * (rm * re[(o * K + ni) * nk + k] +
                                     sm * im[(o * K + ni) * nk + k]);
            a[mi * K + ni] += t;
            if (ni != mi) a[ni * K + mi] += t;
          }
        }
      }
    }
    return jacobi_min_eig(std::move(a), K);
  };

  GalerkinScan gs;
  gs.basis_size = K;
  gs.lambdas.resize(n_scan);
  gs.min_eigs.resize(n_scan);
  const double ratio = std::log(lambda_hi / lambda_lo);
  for (int i = 0; i < n_scan; ++i) {
    gs.lambdas[i] = lambda_lo * std::exp(ratio * i / (n_scan - 1));
    gs.min_eigs[i] = min_eig_at(gs.lambdas[i]);
    if (!std::isfinite(gs.min_eigs[i]))
      throw Error(Status::Internal, "galerkin scan produced a non-finite value");
  }
  int ib = -1;
  for (int i = 0; i + 1 < n_scan; ++i) {
    if ((gs.min_eigs[i] < 0.0) != (gs.min_eigs[i + 1] < 0.0)) {
      ib = i;
      break;
    }
  }
  if (ib < 0) return gs;
  double a = gs.lambdas[ib], b = gs.lambdas[ib + 1];
  double fa = gs.min_eigs[ib];
  double mid = 0.5 * (a + b);
  for (int it = 0; it < 100; ++it) {
    mid = 0.5 * (a + b);
    if ((b - a) <= 1e-10 * b) break;
    const double fm = min_eig_at(mid);
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  gs.root_found = true;
  gs.root = mid;
  return gs;
}

}  // namespace bgk
