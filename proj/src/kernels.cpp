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

#include "greedycs/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>

namespace greedycs::kernels {

namespace scalar {

double dot(const double* x, const double* y, std::size_t n) noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double sumsq(const double* x, std::size_t n) noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scal(double alpha, double* x, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

}  // namespace scalar

#if GREEDYCS_HAVE_AVX2_TU
namespace avx2 {
double dot(const double* x, const double* y, std::size_t n) noexcept;
double sumsq(const double* x, std::size_t n) noexcept;
void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept;
void scal(double alpha, double* x, std::size_t n) noexcept;
}  // namespace avx2
#endif

#if GREEDYCS_HAVE_NEON_TU
namespace neon {
double dot(const double* x, const double* y, std::size_t n) noexcept;
double sumsq(const double* x, std::size_t n) noexcept;
void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept;
void scal(double alpha, double* x, std::size_t n) noexcept;
}  // namespace neon
#endif

namespace {

struct Vtable {
  double (*dot)(const double*, const double*, std::size_t) noexcept;
  double (*sumsq)(const double*, std::size_t) noexcept;
  void (*axpy)(double, const double*, double*, std::size_t) noexcept;
  void (*scal)(double, double*, std::size_t) noexcept;
  Backend backend;
};

constexpr Vtable kScalarTable{scalar::dot, scalar::sumsq, scalar::axpy,
                              scalar::scal, Backend::Scalar};

#if GREEDYCS_HAVE_AVX2_TU
constexpr Vtable kAvx2Table{avx2::dot, avx2::sumsq, avx2::axpy, avx2::scal,
                            Backend::Avx2};
#endif
#if GREEDYCS_HAVE_NEON_TU
constexpr Vtable kNeonTable{neon::dot, neon::sumsq, neon::axpy, neon::scal,
                            Backend::Neon};
#endif

bool backend_available(Backend b) noexcept {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if GREEDYCS_HAVE_AVX2_TU
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Backend::Neon:
#if GREEDYCS_HAVE_NEON_TU
      return true;  // NEON is baseline on aarch64
#else
      return false;
#endif
  }
  return false;
}

const Vtable* table_for(Backend b) noexcept {
  switch (b) {
    case Backend::Scalar:
      return &kScalarTable;
    case Backend::Avx2:
#if GREEDYCS_HAVE_AVX2_TU
      return &kAvx2Table;
#else
      break;
#endif
    case Backend::Neon:
#if GREEDYCS_HAVE_NEON_TU
      return &kNeonTable;
#else
      break;
#endif
  }
  return &kScalarTable;
}

Backend detect_backend() noexcept {
  if (const char* env = std::getenv("GREEDY_CS_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    if (std::strcmp(env, "avx2") == 0 && backend_available(Backend::Avx2))
      return Backend::Avx2;
    if (std::strcmp(env, "neon") == 0 && backend_available(Backend::Neon))
      return Backend::Neon;
    // "auto" or anything unrecognized falls through to detection
  }
  if (backend_available(Backend::Avx2)) return Backend::Avx2;
  if (backend_available(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

std::atomic<const Vtable*> g_table{nullptr};

const Vtable* table() noexcept {
  const Vtable* t = g_table.load(std::memory_order_acquire);
  if (!t) {
    t = table_for(detect_backend());
    g_table.store(t, std::memory_order_release);
  }
  return t;
}

}  // namespace

Backend active_backend() noexcept { return table()->backend; }

const char* backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
    case Backend::Neon:
      return "neon";
  }
  return "unknown";
}

void set_backend(Backend b) noexcept {
  if (!backend_available(b)) b = Backend::Scalar;
  g_table.store(table_for(b), std::memory_order_release);
}

double dot(const double* x, const double* y, std::size_t n) noexcept {
  return table()->dot(x, y, n);
}

double sumsq(const double* x, std::size_t n) noexcept {
  return table()->sumsq(x, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept {
  table()->axpy(alpha, x, y, n);
}

void scal(double alpha, double* x, std::size_t n) noexcept {
  table()->scal(alpha, x, n);
}

double nrm2(const double* x, std::size_t n) noexcept {
  return std::sqrt(table()->sumsq(x, n));
}

}  // namespace greedycs::kernels
