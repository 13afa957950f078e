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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "greedycs/errors.hpp"
#include "greedycs/kernels.hpp"
#include "greedycs/linalg.hpp"
#include "test_util.hpp"

using namespace greedycs;

TEST_CASE("least_squares: identity and orthogonal-complement cases") {
  DenseMatrix a(3, 1);
  a(1, 0) = 1.0;  // the atom e2
  std::vector<double> b = {0.0, 7.0, 0.0};
  auto sol = linalg::least_squares(a, b);
  CHECK(sol.coefficients[0] == doctest::Approx(7.0).epsilon(1e-15));
  CHECK(kernels::nrm2(sol.residual.data(), 3) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(sol.sigma_min == doctest::Approx(1.0).epsilon(1e-14));

  DenseMatrix e1(3, 1);
  e1(0, 0) = 1.0;
  std::vector<double> b2 = {1.0, 1.0, 0.0};
  auto sol2 = linalg::least_squares(e1, b2);
  CHECK(sol2.coefficients[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sol2.residual[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(sol2.residual[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sol2.residual[2] == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("least_squares: projection onto a single oblique atom") {
  // Atom u = (1,1)/sqrt(2), b = (1,2): z = <b,u> = 3/sqrt(2), r = (-1/2, 1/2).
  DenseMatrix a(2, 1);
  a(0, 0) = 1.0 / std::sqrt(2.0);
  a(1, 0) = 1.0 / std::sqrt(2.0);
  std::vector<double> b = {1.0, 2.0};
  auto sol = linalg::least_squares(a, b);
  CHECK(sol.coefficients[0] == doctest::Approx(3.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(sol.residual[0] == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(sol.residual[1] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("least_squares: residual orthogonality and consistent-system recovery") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 4 + seed % 7;
    const std::size_t m = 1 + seed % std::min<std::size_t>(n, 4);
    DenseMatrix a = testutil::random_matrix(n, m, 10'000 + seed);
    rng::Xoshiro256pp gen(20'000 + seed);

    // Consistent right-hand side b = A z*.
    std::vector<double> zstar(m);
    for (double& v : zstar) v = gen.normal();
    std::vector<double> b(n, 0.0);
    for (std::size_t j = 0; j < m; ++j)
      kernels::axpy(zstar[j], a.col(j), b.data(), n);

    auto sol = linalg::least_squares(a, b);
    const double bnorm = kernels::nrm2(b.data(), n);
    for (std::size_t j = 0; j < m; ++j)
      CHECK(std::abs(kernels::dot(sol.residual.data(), a.col(j), n)) <=
            1e-10 * bnorm * kernels::nrm2(a.col(j), n));
    for (std::size_t j = 0; j < m; ++j)
      CHECK(sol.coefficients[j] ==
            doctest::Approx(zstar[j]).epsilon(1e-9).scale(std::abs(zstar[j]) + 1.0));
  }
}

TEST_CASE("least_squares: rank-deficient input is rejected") {
  DenseMatrix a(3, 2);
  a(0, 0) = 1.0;
  a(0, 1) = 1.0;  // duplicate column
  std::vector<double> b = {1.0, 0.0, 0.0};
  CHECK_THROWS_AS(linalg::least_squares(a, b), RankDeficient);
}

TEST_CASE("singular_values: diagonal and cross-checked against the Gram route") {
  DenseMatrix a(3, 3);
  a(0, 0) = 3.0;
  a(1, 1) = -2.0;
  a(2, 2) = 0.5;
  const auto sv = linalg::singular_values(a);
  REQUIRE(sv.size() == 3);
  CHECK(sv[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(sv[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sv[2] == doctest::Approx(0.5).epsilon(1e-14));

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 3 + seed % 5;
    const std::size_t m = 1 + seed % n;
    DenseMatrix w = testutil::random_matrix(n, m, 777 + seed);
    const auto values = linalg::singular_values(w);
    // Oracle: sqrt of the Jacobi eigenvalues of W^T W.
    DenseMatrix g(m, m);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < m; ++i)
        g(i, j) = kernels::dot(w.col(i), w.col(j), n);
    auto eig = testutil::jacobi_eigenvalues(g);
    for (std::size_t j = 0; j < m; ++j) {
      const double expected = std::sqrt(std::max(0.0, eig[m - 1 - j]));
      CHECK(values[j] == doctest::Approx(expected).epsilon(1e-10));
    }
  }
}

TEST_CASE("symmetric_eigenvalues: closed forms") {
  SUBCASE("2x2 with off-diagonal g has eigenvalues 1 -/+ g") {
    const double g = 1.0 / std::sqrt(2.0);
    DenseMatrix a(2, 2);
    a(0, 0) = 1.0;
    a(1, 1) = 1.0;
    a(0, 1) = g;
    a(1, 0) = g;
    const auto eig = linalg::symmetric_eigenvalues(a);
    CHECK(eig[0] == doctest::Approx(1.0 - g).epsilon(1e-14));
    CHECK(eig[1] == doctest::Approx(1.0 + g).epsilon(1e-14));
  }
  SUBCASE("identity stays exactly at 1") {
    DenseMatrix a(4, 4);
    for (std::size_t i = 0; i < 4; ++i) a(i, i) = 1.0;
    for (double v : linalg::symmetric_eigenvalues(a)) CHECK(v == 1.0);
  }
  SUBCASE("rank-2 Gram of the worked 2x3 dictionary: {0, 1, 2}") {
    const auto dict = testutil::phi_ex();
    const auto eig = linalg::symmetric_eigenvalues(dict.gram());
    REQUIRE(eig.size() == 3);
    CHECK(eig[0] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(eig[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eig[2] == doctest::Approx(2.0).epsilon(1e-14));
  }
}

TEST_CASE("symmetric_eigenvalues: agrees with the Jacobi oracle") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 1 + seed % 9;
    DenseMatrix a = testutil::random_symmetric(n, 555 + seed);
    const auto fast = linalg::symmetric_eigenvalues(a);
    const auto oracle = testutil::jacobi_eigenvalues(a);
    double scale = 1.0;
    for (double v : oracle) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::abs(fast[i] - oracle[i]) <= 1e-12 * scale);
  }
}

TEST_CASE("symmetric_eigenvalues: trace is preserved") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 2 + seed % 8;
    DenseMatrix a = testutil::random_symmetric(n, 999 + seed);
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += a(i, i);
    double sum = 0.0;
    for (double v : linalg::symmetric_eigenvalues(a)) sum += v;
    CHECK(sum == doctest::Approx(trace).epsilon(1e-12).scale(std::abs(trace) + n));
  }
}
