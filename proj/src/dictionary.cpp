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

#include "greedycs/dictionary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "greedycs/errors.hpp"
#include "greedycs/kernels.hpp"
#include "greedycs/linalg.hpp"

namespace greedycs {

namespace {

void check_finite(const DenseMatrix& m, const char* what) {
  for (double v : m.data)
    if (!std::isfinite(v)) throw NonFinite(std::string(what) + ": non-finite entry");
}

}  // namespace

Dictionary Dictionary::from_matrix(DenseMatrix m, double norm_tol) {
  if (m.rows < 1) throw DimensionMismatch("dictionary needs at least one row");
  if (m.cols < 2) throw DimensionMismatch("dictionary needs at least two atoms");
  check_finite(m, "dictionary");
  for (std::size_t j = 0; j < m.cols; ++j) {
    const double norm = std::sqrt(kernels::scalar::sumsq(m.col(j), m.rows));
    if (std::abs(norm - 1.0) > norm_tol) throw NormViolation(j + 1, norm);
  }
  Dictionary dict;
  auto impl = std::make_shared<Impl>();
  impl->mat = std::move(m);
  dict.impl_ = std::move(impl);
  return dict;
}

const DenseMatrix& Dictionary::gram() const {
  const Impl& impl = *impl_;
  std::call_once(impl.gram_once, [&impl] {
    const std::size_t d = impl.mat.cols, n = impl.mat.rows;
    DenseMatrix g(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 0; i <= j; ++i) {
        const double v = kernels::dot(impl.mat.col(i), impl.mat.col(j), n);
        g(i, j) = v;
        g(j, i) = v;
      }
    }
    impl.gram = std::move(g);
  });
  return impl.gram;
}

DenseMatrix Dictionary::submatrix(std::span<const std::size_t> indices) const {
  DenseMatrix sub(rows(), indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= cols())
      throw DimensionMismatch("submatrix: column index out of range");
    std::copy_n(impl_->mat.col(indices[j]), rows(), sub.col(j));
  }
  return sub;
}

GramView make_gram_view(const Dictionary& dict, std::span<const std::size_t> indices) {
  const DenseMatrix& g = dict.gram();
  GramView view;
  view.source = &dict;
  view.indices.assign(indices.begin(), indices.end());
  view.g = DenseMatrix(indices.size(), indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j)
    for (std::size_t i = 0; i < indices.size(); ++i)
      view.g(i, j) = g(indices[i], indices[j]);
  return view;
}

// ---- SparseVector ----------------------------------------------------------

SparseVector SparseVector::from_dense(std::span<const double> dense) {
  SparseVector v;
  v.dim_ = dense.size();
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!std::isfinite(dense[i])) throw NonFinite("sparse vector: non-finite entry");
    if (dense[i] != 0.0) {
      v.support_.push_back(i);
      v.values_.push_back(dense[i]);
    }
  }
  return v;
}

SparseVector SparseVector::from_support(std::size_t dim,
                                        std::vector<std::size_t> support,
                                        std::vector<double> values) {
  if (support.size() != values.size())
    throw DimensionMismatch("sparse vector: support/value length mismatch");
  if (support.size() > dim) throw InvalidSparsity("sparse vector: k > d");
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] >= dim) throw InvalidSparsity("sparse vector: index out of range");
    if (i > 0 && support[i] <= support[i - 1])
      throw InvalidSparsity("sparse vector: support not strictly increasing");
    if (values[i] == 0.0) throw InvalidSparsity("sparse vector: stored zero value");
    if (!std::isfinite(values[i])) throw NonFinite("sparse vector: non-finite value");
  }
  SparseVector v;
  v.dim_ = dim;
  v.support_ = std::move(support);
  v.values_ = std::move(values);
  return v;
}

double SparseVector::min_magnitude() const {
  double m = std::numeric_limits<double>::infinity();
  for (double v : values_) m = std::min(m, std::abs(v));
  return m;
}

double SparseVector::norm2() const {
  return std::sqrt(kernels::sumsq(values_.data(), values_.size()));
}

std::vector<double> SparseVector::to_dense() const {
  std::vector<double> out(dim_, 0.0);
  for (std::size_t i = 0; i < support_.size(); ++i) out[support_[i]] = values_[i];
  return out;
}

// ---- operations -------------------------------------------------------------

Dictionary normalize_columns(const DenseMatrix& raw) {
  if (raw.rows < 1) throw DimensionMismatch("normalize_columns: empty matrix");
  if (raw.cols < 2) throw DimensionMismatch("normalize_columns: needs at least two columns");
  check_finite(raw, "normalize_columns");
  DenseMatrix m = raw;
  for (std::size_t j = 0; j < m.cols; ++j) {
    // Scalar kernels on purpose: generated dictionaries must not depend on
    // the SIMD backend in use.
    const double norm = std::sqrt(kernels::scalar::sumsq(m.col(j), m.rows));
    if (norm <= kZeroColumnTol) throw ZeroColumn(j + 1, norm);
    kernels::scalar::scal(1.0 / norm, m.col(j), m.rows);
  }
  return Dictionary::from_matrix(std::move(m));
}

Observation synthesize(const Dictionary& dict, const SparseVector& a,
                       const std::vector<double>* noise) {
  if (a.dim() != dict.cols())
    throw DimensionMismatch("synthesize: signal dimension != atom count");
  if (noise && noise->size() != dict.rows())
    throw DimensionMismatch("synthesize: noise length != measurement dimension");
  Observation obs;
  obs.f.assign(dict.rows(), 0.0);
  const auto& support = a.support();
  const auto& values = a.values();
  for (std::size_t i = 0; i < support.size(); ++i)
    kernels::axpy(values[i], dict.atom(support[i]).data(), obs.f.data(), dict.rows());
  if (noise) {
    for (std::size_t i = 0; i < obs.f.size(); ++i) obs.f[i] += (*noise)[i];
    obs.epsilon = kernels::nrm2(noise->data(), noise->size());
  }
  return obs;
}

ProjectionResult least_squares(const Dictionary& dict,
                               std::span<const std::size_t> indices,
                               std::span<const double> f) {
  if (f.size() != dict.rows())
    throw DimensionMismatch("least_squares: signal length != measurement dimension");
  if (indices.size() > dict.rows())
    throw DimensionMismatch("least_squares: |support| > measurement dimension");
  const DenseMatrix sub = dict.submatrix(indices);
  try {
    auto sol = linalg::least_squares(sub, f, 1e-10);
    return {std::move(sol.coefficients), std::move(sol.residual), sol.sigma_min};
  } catch (const RankDeficient& e) {
    std::vector<std::size_t> support_1based(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) support_1based[i] = indices[i] + 1;
    throw RankDeficient(std::move(support_1based), e.sigma_min);
  }
}

std::vector<double> correlations(const Dictionary& dict, std::span<const double> r) {
  if (r.size() != dict.rows())
    throw DimensionMismatch("correlations: vector length != measurement dimension");
  std::vector<double> c(dict.cols());
  for (std::size_t j = 0; j < dict.cols(); ++j)
    c[j] = kernels::dot(r.data(), dict.atom(j).data(), r.size());
  return c;
}

}  // namespace greedycs
