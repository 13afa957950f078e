// Copyright 2026-present the greedy-cs project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <vector>

#include "greedycs/dense.hpp"

// Small dense factorizations. Everything here targets the desk-scale shapes
// of this toolkit: tall-skinny n x m with m <= n and m around the sparsity
// level, and symmetric k x k Gram blocks with k <= ~20.

namespace greedycs::linalg {

struct LeastSquaresSolution {
  std::vector<double> coefficients;  // length m
  std::vector<double> residual;      // length n, b - A z
  double sigma_min = 0.0;            // smallest singular value of A
};

/// Minimizes ||b - A z||_2 by Householder QR (no normal equations).
/// Throws RankDeficient (with empty support; callers annotate) when the
/// smallest singular value of A is <= rank_tol.
LeastSquaresSolution least_squares(const DenseMatrix& a, std::span<const double> b,
                                   double rank_tol = 1e-10);

/// All singular values of A (rows >= cols), descending, by one-sided Jacobi
/// orthogonalization. High relative accuracy also for the small ones, which
/// is what the rank guard needs.
std::vector<double> singular_values(const DenseMatrix& a);

/// Eigenvalues of a symmetric matrix, ascending. Householder
/// tridiagonalization followed by implicitly shifted QL iteration.
/// Throws EigenFailure if the QL iteration does not converge.
std::vector<double> symmetric_eigenvalues(const DenseMatrix& s);

}  // namespace greedycs::linalg
