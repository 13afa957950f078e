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

// Shared test helpers and independent numerical oracles. Everything here is
// deliberately separate from the library's computational paths: eigenvalues
// via cyclic Jacobi (the library uses tridiagonal QL), structured dictionaries
// via explicit Cholesky factors.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "greedycs/dense.hpp"
#include "greedycs/dictionary.hpp"
#include "greedycs/rng.hpp"

namespace testutil {

using greedycs::DenseMatrix;
using greedycs::Dictionary;

/// Cyclic Jacobi eigenvalue iteration; independent oracle for the library's
/// tridiagonalization + QL solver.
inline std::vector<double> jacobi_eigenvalues(DenseMatrix a) {
  const std::size_t n = a.rows;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (off < 1e-30) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

inline DenseMatrix random_matrix(std::size_t n, std::size_t m, std::uint64_t seed) {
  greedycs::rng::Xoshiro256pp gen(seed);
  DenseMatrix a(n, m);
  for (double& v : a.data) v = gen.normal();
  return a;
}

inline DenseMatrix random_symmetric(std::size_t n, std::uint64_t seed) {
  greedycs::rng::Xoshiro256pp gen(seed);
  DenseMatrix a(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      const double v = gen.normal();
      a(i, j) = v;
      a(j, i) = v;
    }
  }
  return a;
}

inline Dictionary identity_dictionary(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return Dictionary::from_matrix(std::move(m));
}

/// The 2x3 worked example used throughout: atoms e1, e2, u = (e1+e2)/sqrt(2).
/// M = 1/sqrt(2), nu_2 = 1, delta_2 = 1/sqrt(2), delta_3 = 1.
inline Dictionary phi_ex() {
  DenseMatrix m(2, 3);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(0, 2) = 1.0 / std::sqrt(2.0);
  m(1, 2) = 1.0 / std::sqrt(2.0);
  return Dictionary::from_matrix(std::move(m));
}

/// Equiangular dictionary with Gram exactly (1-mu) I + mu J, built from its
/// Cholesky factor. n = d; delta_2 = mu and delta_3 = 2 mu in closed form.
inline Dictionary equiangular_dictionary(std::size_t d, double mu) {
  if (!(mu >= 0.0 && mu < 1.0)) throw std::invalid_argument("mu in [0,1)");
  DenseMatrix g(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) g(i, j) = i == j ? 1.0 : mu;
  // Lower Cholesky G = L L^T; the dictionary is L^T so Phi^T Phi = G.
  DenseMatrix l(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = j; i < d; ++i) {
      double sum = g(i, j);
      for (std::size_t t = 0; t < j; ++t) sum -= l(i, t) * l(j, t);
      if (i == j) {
        if (sum <= 0.0) throw std::runtime_error("cholesky: not positive definite");
        l(j, j) = std::sqrt(sum);
      } else {
        l(i, j) = sum / l(j, j);
      }
    }
  }
  DenseMatrix phi(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) phi(i, j) = l(j, i);
  return Dictionary::from_matrix(std::move(phi));
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace testutil
