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
#include <vector>

#include "greedycs/dictionary.hpp"

// Weak orthogonal matching pursuit. Per iteration: correlate the residual
// with every atom, pick an unselected atom whose correlation magnitude is
// within a factor rho of the maximum, extend the support, re-fit by least
// squares, recompute the residual. rho = 1 with MaxCorrelation is standard
// OMP.

namespace greedycs::pursuit {

enum class SelectionPolicy {
  MaxCorrelation,       // deterministic OMP behavior: the strongest atom
  FirstAboveThreshold,  // lowest admissible index: an arbitrary conforming pick
  MinAboveThreshold,    // weakest admissible atom: adversarial but conforming
};

enum class StopReason { ResidualBelowEpsilon, MaxIterations, RankDeficient };

struct PursuitConfig {
  double rho = 1.0;                  // weak parameter in (0, 1]
  double epsilon = 0.0;              // stopping noise level
  std::size_t max_iterations = 0;    // 0 means min(n, d)
  SelectionPolicy policy = SelectionPolicy::MaxCorrelation;
};

struct RecoveryResult {
  std::vector<std::size_t> support_trajectory;  // selection order, 0-based
  std::vector<double> estimate;                 // dense, length d
  std::vector<double> residual_norms;           // ||r_s||_2 for s = 0..S
  // max_{i in L_s} |<r_s, phi_i>| for s = 1..S; orthogonality diagnostic
  std::vector<double> on_support_correlations;
  std::size_t iterations = 0;
  StopReason stop_reason = StopReason::ResidualBelowEpsilon;
  // Effective stopping threshold: max(epsilon, 1e-12 ||f||_2). The relative
  // floor keeps the epsilon = 0 noiseless case from spinning on round-off.
  double stop_threshold = 0.0;
};

const char* to_string(StopReason r);
const char* to_string(SelectionPolicy p);

RecoveryResult womp(const Dictionary& dict, const Observation& obs,
                    const PursuitConfig& config);

/// Standard OMP: womp with rho = 1 and MaxCorrelation selection.
RecoveryResult omp(const Dictionary& dict, const Observation& obs, double epsilon,
                   std::size_t max_iterations = 0);

}  // namespace greedycs::pursuit
