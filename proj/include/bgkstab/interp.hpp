// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "bgkstab/error.hpp"

namespace bgk {

// Piecewise-cubic Hermite series on a uniform grid: matches (f, f') at nodes, C1.
// With periodic=true, evaluation wraps x into [x0, x0 + n*h).
class CubicHermite {
 public:
  CubicHermite() = default;
  CubicHermite(double x0, double h, std::vector<double> f, std::vector<double> d,
               bool periodic)
      : x0_(x0), h_(h), f_(std::move(f)), d_(std::move(d)), periodic_(periodic) {
    if (f_.size() != d_.size() || f_.size() < 2) fail(Status::Internal, "CubicHermite: bad sizes");
  }

  double operator()(double x) const { return eval(x); }

  double eval(double x) const {
    std::size_t i; double t;
    locate(x, i, t);
    const double df = f_[i + 1] - f_[i];
    const double c2 = 3.0 * df - (2.0 * d_[i] + d_[i + 1]) * h_;
    const double c3 = -2.0 * df + (d_[i] + d_[i + 1]) * h_;
    return f_[i] + t * (d_[i] * h_ + t * (c2 + t * c3));
  }

  double deriv(double x) const {
    std::size_t i; double t;
    locate(x, i, t);
    const double df = f_[i + 1] - f_[i];
    const double c2 = 3.0 * df - (2.0 * d_[i] + d_[i + 1]) * h_;
    const double c3 = -2.0 * df + (d_[i] + d_[i + 1]) * h_;
    return (d_[i] * h_ + t * (2.0 * c2 + 3.0 * t * c3)) / h_;
  }

  double period() const { return h_ * static_cast<double>(f_.size() - 1); }

 private:
  void locate(double x, std::size_t& i, double& t) const {
    const std::size_t n = f_.size() - 1;
    double u = (x - x0_) / h_;
    if (periodic_) {
      const double nn = static_cast<double>(n);
      u -= nn * std::floor(u / nn);
    } else {
      if (u < 0.0) u = 0.0;
      if (u > static_cast<double>(n)) u = static_cast<double>(n);
    }
    double fi = std::floor(u);
    if (fi > static_cast<double>(n - 1)) fi = static_cast<double>(n - 1);
    i = static_cast<std::size_t>(fi);
    t = u - fi;
  }

  double x0_ = 0.0, h_ = 1.0;
  std::vector<double> f_, d_;
  bool periodic_ = false;
};

// Piecewise-quintic Hermite: matches (f, f', f'') at nodes, C2. Used for the
// wave potential where f'' is available exactly from the field equation.
class QuinticHermite {
 public:
  QuinticHermite() = default;
  QuinticHermite(double x0, double h, std::vector<double> f, std::vector<double> d,
                 std::vector<double> s, bool periodic)
      : x0_(x0), h_(h), f_(std::move(f)), d_(std::move(d)), s_(std::move(s)),
        periodic_(periodic) {
    if (f_.size() != d_.size() || f_.size() != s_.size() || f_.size() < 2)
      fail(Status::Internal, "QuinticHermite: bad sizes");
  }

  double operator()(double x) const { return eval(x); }

  double eval(double x) const {
    double c[6];
    double t = coeffs(x, c);
    return c[0] + t * (c[1] + t * (c[2] + t * (c[3] + t * (c[4] + t * c[5]))));
  }

  double deriv(double x) const {
    double c[6];
    double t = coeffs(x, c);
    return (c[1] + t * (2.0 * c[2] + t * (3.0 * c[3] + t * (4.0 * c[4] + t * 5.0 * c[5])))) / h_;
  }

  double deriv2(double x) const {
    double c[6];
    double t = coeffs(x, c);
    return (2.0 * c[2] + t * (6.0 * c[3] + t * (12.0 * c[4] + t * 20.0 * c[5]))) / (h_ * h_);
  }

  double period() const { return h_ * static_cast<double>(f_.size() - 1); }

 private:
  double coeffs(double x, double c[6]) const {
    std::size_t i; double t;
    locate(x, i, t);
    const double h2 = h_ * h_;
    const double df = f_[i + 1] - f_[i];
    const double d0h = d_[i] * h_, d1h = d_[i + 1] * h_;
    const double s0h = s_[i] * h2, s1h = s_[i + 1] * h2;
    c[0] = f_[i];
    c[1] = d0h;
    c[2] = 0.5 * s0h;
    c[3] = 10.0 * df - 6.0 * d0h - 4.0 * d1h - 1.5 * s0h + 0.5 * s1h;
    c[4] = -15.0 * df + 8.0 * d0h + 7.0 * d1h + 1.5 * s0h - s1h;
    c[5] = 6.0 * df - 3.0 * (d0h + d1h) - 0.5 * (s0h - s1h);
    return t;
  }

  void locate(double x, std::size_t& i, double& t) const {
    const std::size_t n = f_.size() - 1;
    double u = (x - x0_) / h_;
    if (periodic_) {
      const double nn = static_cast<double>(n);
      u -= nn * std::floor(u / nn);
    } else {
      if (u < 0.0) u = 0.0;
      if (u > static_cast<double>(n)) u = static_cast<double>(n);
    }
    double fi = std::floor(u);
    if (fi > static_cast<double>(n - 1)) fi = static_cast<double>(n - 1);
    i = static_cast<std::size_t>(fi);
    t = u - fi;
  }

  double x0_ = 0.0, h_ = 1.0;
  std::vector<double> f_, d_, s_;
  bool periodic_ = false;
};

}  // namespace bgk
