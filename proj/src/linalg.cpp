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

#include "greedycs/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "greedycs/errors.hpp"
#include "greedycs/kernels.hpp"

namespace greedycs::linalg {

namespace {

double pythag(double a, double b) {
  double absa = std::abs(a), absb = std::abs(b);
  if (absa > absb) {
    double r = absb / absa;
    return absa * std::sqrt(1.0 + r * r);
  }
  if (absb == 0.0) return 0.0;
  double r = absa / absb;
  return absb * std::sqrt(1.0 + r * r);
}

}  // namespace

LeastSquaresSolution least_squares(const DenseMatrix& a, std::span<const double> b,
                                   double rank_tol) {
  const std::size_t n = a.rows, m = a.cols;
  if (b.size() != n) throw DimensionMismatch("least_squares: rhs length != rows");
  if (m > n) throw DimensionMismatch("least_squares: more columns than rows");

  DenseMatrix w = a;  // factored in place
  std::vector<double> qtb(b.begin(), b.end());

  // Householder QR, transforms applied to qtb as they are formed.
  for (std::size_t j = 0; j < m; ++j) {
    double* cj = w.col(j);
    const std::size_t len = n - j;
    double norm = std::sqrt(kernels::sumsq(cj + j, len));
    if (norm == 0.0) continue;  // exactly singular; caught by the rank guard
    const double alpha = (cj[j] >= 0.0) ? -norm : norm;
    // v = x - alpha e1, stored over the column
    cj[j] -= alpha;
    const double vtv = kernels::sumsq(cj + j, len);
    if (vtv > 0.0) {
      for (std::size_t c = j + 1; c < m; ++c) {
        double* cc = w.col(c);
        const double f = 2.0 * kernels::dot(cj + j, cc + j, len) / vtv;
        kernels::axpy(-f, cj + j, cc + j, len);
      }
      const double f = 2.0 * kernels::dot(cj + j, qtb.data() + j, len) / vtv;
      kernels::axpy(-f, cj + j, qtb.data() + j, len);
    }
    cj[j] = alpha;  // R_jj; the reflector below the diagonal is dead now
    std::fill(cj + j + 1, cj + n, 0.0);
  }

  // Rank guard on R (same singular values as A).
  DenseMatrix r(m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i <= j; ++i) r(i, j) = w(i, j);
  LeastSquaresSolution out;
  out.sigma_min = m == 0 ? 0.0 : singular_values(r).back();
  if (m > 0 && out.sigma_min <= rank_tol)
    throw RankDeficient({}, out.sigma_min);

  // Back substitution R z = (Q^T b)[0..m).
  out.coefficients.assign(m, 0.0);
  for (std::size_t ii = m; ii-- > 0;) {
    double s = qtb[ii];
    for (std::size_t j = ii + 1; j < m; ++j) s -= r(ii, j) * out.coefficients[j];
    out.coefficients[ii] = s / r(ii, ii);
  }

  // Explicit residual r = b - A z (the algorithmic definition, not Q-based).
  out.residual.assign(b.begin(), b.end());
  for (std::size_t j = 0; j < m; ++j)
    kernels::axpy(-out.coefficients[j], a.col(j), out.residual.data(), n);
  return out;
}

std::vector<double> singular_values(const DenseMatrix& a) {
  const std::size_t n = a.rows, m = a.cols;
  if (m > n) throw DimensionMismatch("singular_values: more columns than rows");
  DenseMatrix w = a;

  // Hestenes one-sided Jacobi: rotate column pairs until all are orthogonal.
  constexpr int kMaxSweeps = 60;
  const double eps2 = std::numeric_limits<double>::epsilon() *
                      std::numeric_limits<double>::epsilon();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        double* wi = w.col(i);
        double* wj = w.col(j);
        const double aii = kernels::sumsq(wi, n);
        const double ajj = kernels::sumsq(wj, n);
        const double aij = kernels::dot(wi, wj, n);
        if (aij * aij <= eps2 * aii * ajj) continue;
        rotated = true;
        const double zeta = (ajj - aii) / (2.0 * aij);
        const double t =
            (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        for (std::size_t r = 0; r < n; ++r) {
          const double vi = wi[r], vj = wj[r];
          wi[r] = cs * vi - sn * vj;
          wj[r] = sn * vi + cs * vj;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(m);
  for (std::size_t j = 0; j < m; ++j) sv[j] = std::sqrt(kernels::sumsq(w.col(j), n));
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

std::vector<double> symmetric_eigenvalues(const DenseMatrix& s) {
  const std::size_t n = s.rows;
  if (s.cols != n) throw DimensionMismatch("symmetric_eigenvalues: matrix not square");
  if (n == 0) return {};
  if (n == 1) return {s(0, 0)};

  DenseMatrix z = s;
  std::vector<double> d(n, 0.0), e(n, 0.0);

  // Householder reduction to tridiagonal form (no eigenvector accumulation).
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (std::size_t k = 0; k <= l; ++k) scale += std::abs(z(i, k));
      if (scale == 0.0) {
        e[i] = z(i, l);
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          z(i, k) /= scale;
          h += z(i, k) * z(i, k);
        }
        double f = z(i, l);
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        z(i, l) = f - g;
        f = 0.0;
        for (std::size_t j = 0; j <= l; ++j) {
          g = 0.0;
          for (std::size_t k = 0; k <= j; ++k) g += z(j, k) * z(i, k);
          for (std::size_t k = j + 1; k <= l; ++k) g += z(k, j) * z(i, k);
          e[j] = g / h;
          f += e[j] * z(i, j);
        }
        const double hh = f / (h + h);
        for (std::size_t j = 0; j <= l; ++j) {
          f = z(i, j);
          const double gj = e[j] - hh * f;
          e[j] = gj;
          for (std::size_t k = 0; k <= j; ++k) z(j, k) -= f * e[k] + gj * z(i, k);
        }
      }
    } else {
      e[i] = z(i, l);
    }
    d[i] = h;
  }
  e[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) d[i] = z(i, i);

  // Implicitly shifted QL iteration on the tridiagonal (d, e).
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 30)
          throw EigenFailure("symmetric_eigenvalues: QL iteration did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = pythag(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
        double sn = 1.0, cs = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t ii = m; ii-- > l;) {
          double f = sn * e[ii];
          const double bb = cs * e[ii];
          r = pythag(f, g);
          e[ii + 1] = r;
          if (r == 0.0) {
            d[ii + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          sn = f / r;
          cs = g / r;
          g = d[ii + 1] - p;
          r = (d[ii] - g) * sn + 2.0 * cs * bb;
          p = sn * r;
          d[ii + 1] = g + p;
          g = cs * r - bb;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace greedycs::linalg
