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

#include "greedycs/pursuit.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

#include "greedycs/errors.hpp"
#include "greedycs/kernels.hpp"

namespace greedycs::pursuit {

namespace {

constexpr double kResidualFloorRel = 1e-12;

/// Index choice among the admissible set {i unselected : |c_i| >= rho * cmax}.
/// Ties always break to the lowest index, so every policy is deterministic.
std::size_t select_atom(const std::vector<double>& c,
                        const std::vector<char>& selected, double rho,
                        SelectionPolicy policy) {
  const double cmax = [&] {
    double m = -1.0;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!selected[i]) m = std::max(m, std::abs(c[i]));
    return m;
  }();
  assert(cmax >= 0.0 && "select_atom requires an unselected atom");
  const double threshold = rho * cmax;

  std::size_t pick = c.size();
  double pick_mag = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (selected[i]) continue;
    const double mag = std::abs(c[i]);
    if (mag < threshold) continue;
    switch (policy) {
      case SelectionPolicy::FirstAboveThreshold:
        return i;  // lowest admissible index
      case SelectionPolicy::MaxCorrelation:
        if (pick == c.size() || mag > pick_mag) {
          pick = i;
          pick_mag = mag;
        }
        break;
      case SelectionPolicy::MinAboveThreshold:
        if (pick == c.size() || mag < pick_mag) {
          pick = i;
          pick_mag = mag;
        }
        break;
    }
  }
  // The argmax is always admissible (rho <= 1), so the set cannot be empty.
  assert(pick < c.size());
  return pick;
}

}  // namespace

const char* to_string(StopReason r) {
  switch (r) {
    case StopReason::ResidualBelowEpsilon:
      return "ResidualBelowEpsilon";
    case StopReason::MaxIterations:
      return "MaxIterations";
    case StopReason::RankDeficient:
      return "RankDeficient";
  }
  return "unknown";
}

const char* to_string(SelectionPolicy p) {
  switch (p) {
    case SelectionPolicy::MaxCorrelation:
      return "max";
    case SelectionPolicy::FirstAboveThreshold:
      return "first";
    case SelectionPolicy::MinAboveThreshold:
      return "min";
  }
  return "unknown";
}

RecoveryResult womp(const Dictionary& dict, const Observation& obs,
                    const PursuitConfig& config) {
  if (!(config.rho > 0.0 && config.rho <= 1.0))
    throw UsageError("womp: weak parameter must lie in (0, 1]");
  if (config.epsilon < 0.0) throw UsageError("womp: epsilon must be >= 0");
  if (obs.f.size() != dict.rows())
    throw DimensionMismatch("womp: observation length != measurement dimension");

  const std::size_t n = dict.rows(), d = dict.cols();
  const std::size_t max_iter =
      config.max_iterations > 0 ? config.max_iterations : std::min(n, d);

  RecoveryResult out;
  std::vector<double> r = obs.f;
  const double f_norm = kernels::nrm2(r.data(), n);
  out.stop_threshold = std::max(config.epsilon, kResidualFloorRel * f_norm);
  out.residual_norms.push_back(f_norm);

  std::vector<char> selected(d, 0);
  std::vector<std::size_t> support;
  std::vector<double> coef;
  out.stop_reason = StopReason::ResidualBelowEpsilon;

  while (true) {
    if (out.residual_norms.back() <= out.stop_threshold) {
      out.stop_reason = StopReason::ResidualBelowEpsilon;
      break;
    }
    if (out.iterations >= max_iter || support.size() == d ||
        support.size() == n) {
      out.stop_reason = StopReason::MaxIterations;
      break;
    }

    const std::vector<double> c = correlations(dict, r);
    const std::size_t pick = select_atom(c, selected, config.rho, config.policy);

    support.push_back(pick);
    ProjectionResult proj;
    try {
      proj = least_squares(dict, support, obs.f);
    } catch (const RankDeficient&) {
      // Partial result: state as of the last completed iteration.
      support.pop_back();
      out.stop_reason = StopReason::RankDeficient;
      break;
    }
    selected[pick] = 1;
    coef = std::move(proj.coefficients);
    r = std::move(proj.residual);
    out.residual_norms.push_back(kernels::nrm2(r.data(), n));

    double on_support = 0.0;
    for (std::size_t i : support)
      on_support = std::max(
          on_support, std::abs(kernels::dot(r.data(), dict.atom(i).data(), n)));
    out.on_support_correlations.push_back(on_support);
    ++out.iterations;
  }

  out.support_trajectory = support;
  out.estimate.assign(d, 0.0);
  for (std::size_t i = 0; i < support.size(); ++i)
    out.estimate[support[i]] = coef[i];
  return out;
}

RecoveryResult omp(const Dictionary& dict, const Observation& obs, double epsilon,
                   std::size_t max_iterations) {
  PursuitConfig config;
  config.rho = 1.0;
  config.epsilon = epsilon;
  config.max_iterations = max_iterations;
  config.policy = SelectionPolicy::MaxCorrelation;
  return womp(dict, obs, config);
}

}  // namespace greedycs::pursuit
