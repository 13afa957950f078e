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

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "greedycs/dense.hpp"

namespace greedycs {

/// Column tolerance for accepting a matrix as a dictionary: every atom must
/// have unit Euclidean norm within this bound.
inline constexpr double kUnitNormTol = 1e-12;

/// Norm below which a raw input column counts as the zero vector.
inline constexpr double kZeroColumnTol = 1e-14;

/// An n x d measurement matrix with unit-norm columns (atoms).
/// Immutable after construction; safe to share across threads. The full Gram
/// matrix is materialized lazily and cached.
class Dictionary {
public:
  /// Validates entries as-is: finite, n >= 1, d >= 2, every column unit norm
  /// within norm_tol. Off-norm inputs are rejected, not silently rescaled.
  static Dictionary from_matrix(DenseMatrix m, double norm_tol = kUnitNormTol);

  std::size_t rows() const { return impl_->mat.rows; }
  std::size_t cols() const { return impl_->mat.cols; }
  std::span<const double> atom(std::size_t j) const { return impl_->mat.col_span(j); }
  const DenseMatrix& matrix() const { return impl_->mat; }

  /// d x d Gram matrix, exactly symmetric by construction (entries computed
  /// once for i <= j and mirrored).
  const DenseMatrix& gram() const;

  /// Submatrix of the columns listed in `indices` (0-based, any order).
  DenseMatrix submatrix(std::span<const std::size_t> indices) const;

private:
  struct Impl {
    DenseMatrix mat;
    mutable std::once_flag gram_once;
    mutable DenseMatrix gram;
  };
  Dictionary() = default;
  std::shared_ptr<const Impl> impl_;
};

/// A sparse coefficient vector with explicit support. Support indices are
/// 0-based internally, strictly increasing, and every stored value is
/// nonzero.
class SparseVector {
public:
  static SparseVector from_dense(std::span<const double> dense);
  static SparseVector from_support(std::size_t dim, std::vector<std::size_t> support,
                                   std::vector<double> values);

  std::size_t dim() const { return dim_; }
  std::size_t sparsity() const { return support_.size(); }
  const std::vector<std::size_t>& support() const { return support_; }
  const std::vector<double>& values() const { return values_; }

  /// Smallest nonzero magnitude (the a_min of the recovery conditions).
  double min_magnitude() const;
  double norm2() const;
  std::vector<double> to_dense() const;

private:
  std::size_t dim_ = 0;
  std::vector<std::size_t> support_;
  std::vector<double> values_;
};

/// A measurement f together with its declared noise budget.
struct Observation {
  std::vector<double> f;
  double epsilon = 0.0;
};

/// Gram submatrix G = Phi_L^T Phi_L for an index subset, kept with its
/// provenance. Symmetric with (near-)unit diagonal by dictionary invariants.
struct GramView {
  const Dictionary* source = nullptr;
  std::vector<std::size_t> indices;  // 0-based
  DenseMatrix g;
};

GramView make_gram_view(const Dictionary& dict, std::span<const std::size_t> indices);

// ---- operations -------------------------------------------------------------

/// Scales every column of `raw` to unit norm. Throws ZeroColumn if a column
/// norm is <= kZeroColumnTol and NonFinite on NaN/Inf entries.
Dictionary normalize_columns(const DenseMatrix& raw);

/// f = Phi a + w with epsilon = ||w||_2 (0 when w is absent).
Observation synthesize(const Dictionary& dict, const SparseVector& a,
                       const std::vector<double>* noise = nullptr);

struct ProjectionResult {
  std::vector<double> coefficients;  // on `indices`, in their order
  std::vector<double> residual;      // f - Phi_L z
  double sigma_min = 0.0;            // smallest singular value of Phi_L
};

/// Least-squares projection of f onto the atoms in `indices` (0-based).
/// Throws RankDeficient (reported with 1-based support) when sigma_min of the
/// subdictionary is <= 1e-10.
ProjectionResult least_squares(const Dictionary& dict,
                               std::span<const std::size_t> indices,
                               std::span<const double> f);

/// Inner products <r, phi_i> for every atom, in atom order.
std::vector<double> correlations(const Dictionary& dict, std::span<const double> r);

}  // namespace greedycs
