// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#pragma once

#include <vector>

namespace bgk {

// Symmetric tridiagonal eigen-tools (diagonal d[0..n-1], off-diagonal e[0..n-2]).

// Number of eigenvalues strictly below x (Sturm count via the LDL^T recurrence).
int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x);

// The k smallest eigenvalues, ascending, by bisection on the Sturm count.
std::vector<double> smallest_eigenvalues(const std::vector<double>& d,
                                         const std::vector<double>& e, int k);

// Eigenvector for an isolated eigenvalue by inverse iteration with a partially
// pivoted tridiagonal solve; returned with unit Euclidean norm.
std::vector<double> inverse_iteration(const std::vector<double>& d,
                                      const std::vector<double>& e, double lambda);

}  // namespace bgk
