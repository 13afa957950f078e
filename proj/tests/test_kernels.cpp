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
#include <cstdint>
#include <vector>

#include "greedycs/kernels.hpp"
#include "greedycs/rng.hpp"

using namespace greedycs;

namespace {

/// Restores the auto-detected backend when a test section ends.
struct BackendGuard {
  kernels::Backend saved = kernels::active_backend();
  ~BackendGuard() { kernels::set_backend(saved); }
};

std::vector<double> random_values(std::size_t n, std::uint64_t seed) {
  rng::Xoshiro256pp gen(seed);
  std::vector<double> v(n);
  for (double& x : v) x = gen.normal();
  return v;
}

}  // namespace

TEST_CASE("scalar kernels: exact small cases") {
  const double x[] = {1.0, 2.0, 3.0};
  const double y[] = {4.0, -5.0, 6.0};
  CHECK(kernels::scalar::dot(x, y, 3) == 12.0);  // 4 - 10 + 18
  CHECK(kernels::scalar::sumsq(x, 3) == 14.0);
  CHECK(kernels::scalar::dot(x, y, 0) == 0.0);

  double z[] = {1.0, 1.0, 1.0};
  kernels::scalar::axpy(2.0, x, z, 3);
  CHECK(z[0] == 3.0);
  CHECK(z[1] == 5.0);
  CHECK(z[2] == 7.0);
  kernels::scalar::scal(0.5, z, 3);
  CHECK(z[0] == 1.5);
  CHECK(z[1] == 2.5);
  CHECK(z[2] == 3.5);
}

TEST_CASE("dispatched kernels match the scalar reference") {
  BackendGuard guard;
  const std::vector<kernels::Backend> candidates = {
      kernels::Backend::Scalar, kernels::Backend::Avx2, kernels::Backend::Neon};
  const std::vector<std::size_t> sizes = {0, 1, 2, 3, 4, 5, 7, 8, 9,
                                          15, 16, 17, 31, 33, 64, 100, 513};

  for (auto backend : candidates) {
    kernels::set_backend(backend);
    if (kernels::active_backend() != backend) continue;  // not on this machine
    CAPTURE(kernels::backend_name(backend));

    for (std::size_t n : sizes) {
      // Offset by one so unaligned pointers get exercised too.
      const auto xs = random_values(n + 1, 1000 + n);
      const auto ys = random_values(n + 1, 2000 + n);
      const double* x = xs.data() + 1;
      const double* y = ys.data() + 1;

      // Reductions may reassociate: bound the deviation by the magnitude sum.
      double mag = 1.0;
      for (std::size_t i = 0; i < n; ++i) mag += std::abs(x[i] * y[i]);
      CHECK(std::abs(kernels::dot(x, y, n) - kernels::scalar::dot(x, y, n)) <=
            1e-14 * mag);
      double mag2 = 1.0;
      for (std::size_t i = 0; i < n; ++i) mag2 += x[i] * x[i];
      CHECK(std::abs(kernels::sumsq(x, n) - kernels::scalar::sumsq(x, n)) <=
            1e-14 * mag2);

      // Elementwise kernels must be bit-identical across backends.
      std::vector<double> a(x, x + n), b(x, x + n);
      kernels::axpy(-1.75, y, a.data(), n);
      kernels::scalar::axpy(-1.75, y, b.data(), n);
      CHECK(a == b);
      kernels::scal(3.5, a.data(), n);
      kernels::scalar::scal(3.5, b.data(), n);
      CHECK(a == b);
    }
  }
}

TEST_CASE("backend override falls back to scalar when unsupported") {
  BackendGuard guard;
  kernels::set_backend(kernels::Backend::Scalar);
  CHECK(kernels::active_backend() == kernels::Backend::Scalar);
#if !defined(__aarch64__)
  // NEON cannot be forced on x86 builds; the request degrades to scalar.
  kernels::set_backend(kernels::Backend::Neon);
  CHECK(kernels::active_backend() == kernels::Backend::Scalar);
#endif
}

TEST_CASE("nrm2 is the square root of sumsq") {
  const auto x = random_values(37, 7);
  CHECK(kernels::nrm2(x.data(), x.size()) ==
        doctest::Approx(std::sqrt(kernels::sumsq(x.data(), x.size())))
            .epsilon(1e-15));
}
