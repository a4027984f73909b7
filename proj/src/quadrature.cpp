// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#include "bgkstab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "bgkstab/error.hpp"

namespace bgk {

namespace {

// 15-point Kronrod extension of 7-point Gauss-Legendre (QUADPACK dqk15 nodes).
// Even indices are the embedded Gauss points.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct Panel {
  double a, b, value, error;
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double hl = 0.5 * (b - a);
  double resg = kWg[3] * f(c);
  double resk = kWgk[7] * f(c);
  for (int j = 0; j < 7; ++j) {
    const double x = hl * kXgk[j];
    const double fsum = f(c - x) + f(c + x);
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  return {a, b, resk * hl, std::abs((resk - resg) * hl)};
}

}  // namespace

QuadResult gk15_panel(const std::function<double(double)>& f, double a, double b) {
  Panel p = eval_panel(f, a, b);
  return {p.value, p.error, 15, 1, true};
}

void gk15_points(double a, double b, double xs[15], double ws[15]) {
  const double c = 0.5 * (a + b);
  const double hl = 0.5 * (b - a);
  for (int j = 0; j < 7; ++j) {
    xs[j] = c - hl * kXgk[j];
    xs[14 - j] = c + hl * kXgk[j];
    ws[j] = kWgk[j] * hl;
    ws[14 - j] = kWgk[j] * hl;
  }
  xs[7] = c;
  ws[7] = kWgk[7] * hl;
}

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, double rel_tol, int max_panels) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::vector<Panel> panels;
  panels.reserve(64);
  panels.push_back(eval_panel(f, a, b));
  out.evals = 15;
  for (;;) {
    double total = 0.0, err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      total += panels[i].value;
      err += panels[i].error;
      if (panels[i].error > panels[worst].error) worst = i;
    }
    const double tol = std::max(abs_tol, rel_tol * std::abs(total));
    out.value = total;
    out.error = err;
    out.panels = static_cast<int>(panels.size());
    if (err <= tol) {
      out.converged = true;
      return out;
    }
    if (static_cast<int>(panels.size()) >= max_panels) return out;
    // split the worst panel; a panel too narrow to split stops refinement
    // there (works for either orientation of the limits)
    Panel w = panels[worst];
    const double mid = 0.5 * (w.a + w.b);
    if (mid == w.a || mid == w.b) return out;
    panels[worst] = eval_panel(f, w.a, mid);
    panels.push_back(eval_panel(f, mid, w.b));
    out.evals += 30;
  }
}

double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, double rel_tol, int max_panels, double* error_out) {
  QuadResult r = integrate_adaptive(f, a, b, abs_tol, rel_tol, max_panels);
  if (error_out) *error_out = r.error;
  if (!r.converged) {
    fail(Status::Quadrature,
         "quadrature did not converge: achieved error estimate " + std::to_string(r.error) +
             " over " + std::to_string(r.panels) + " panels");
  }
  return r.value;
}

QuadResult integrate_panels(const std::function<double(double)>& f,
                            const double* edges, int n_edges) {
  QuadResult out;
  for (int i = 0; i + 1 < n_edges; ++i) {
    Panel p = eval_panel(f, edges[i], edges[i + 1]);
    out.value += p.value;
    out.error += p.error;
    out.evals += 15;
    ++out.panels;
  }
  out.converged = true;
  return out;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "Ok";
    case Status::NonOscillatory: return "NonOscillatory";
    case Status::AmplitudeTooLarge: return "AmplitudeTooLarge";
    case Status::EventNotFound: return "EventNotFound";
    case Status::Quadrature: return "Quadrature";
    case Status::SpectralOrder: return "SpectralOrder";
    case Status::IdentityViolation: return "IdentityViolation";
    case Status::NoSignChange: return "NoSignChange";
    case Status::Domain: return "Domain";
    case Status::Config: return "Config";
    case Status::Io: return "Io";
    case Status::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace bgk
