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
#include <span>

// Dense vector kernels underlying every inner loop in the toolkit.
//
// The scalar namespace is the reference semantics: plain sequential loops with
// a fixed left-to-right evaluation order. The dispatched entry points below
// pick an ISA variant once per process (AVX2 on x86-64, NEON on aarch64) and
// fall back to scalar otherwise. Reductions (dot, sumsq) may differ from the
// reference in the last few ulps because wide accumulators reassociate the
// sum; elementwise kernels (axpy, scal) are bit-identical across backends.
//
// Code that must produce backend-independent bytes (dictionary generation)
// calls the scalar namespace directly.

namespace greedycs::kernels {

namespace scalar {
double dot(const double* x, const double* y, std::size_t n) noexcept;
double sumsq(const double* x, std::size_t n) noexcept;
void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept;
void scal(double alpha, double* x, std::size_t n) noexcept;
}  // namespace scalar

enum class Backend { Scalar, Avx2, Neon };

/// Backend currently used by the dispatched entry points.
Backend active_backend() noexcept;
const char* backend_name(Backend b) noexcept;

/// Forces a backend; unsupported requests fall back to Scalar. Intended for
/// tests and the GREEDY_CS_KERNELS={auto,scalar,avx2,neon} override.
void set_backend(Backend b) noexcept;

double dot(const double* x, const double* y, std::size_t n) noexcept;
double sumsq(const double* x, std::size_t n) noexcept;
void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept;
void scal(double alpha, double* x, std::size_t n) noexcept;

double nrm2(const double* x, std::size_t n) noexcept;

inline double dot(std::span<const double> x, std::span<const double> y) noexcept {
  return dot(x.data(), y.data(), x.size());
}
inline double sumsq(std::span<const double> x) noexcept {
  return sumsq(x.data(), x.size());
}
inline double nrm2(std::span<const double> x) noexcept {
  return nrm2(x.data(), x.size());
}

}  // namespace greedycs::kernels
