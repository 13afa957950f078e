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

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "greedycs/dictionary.hpp"
#include "greedycs/pursuit.hpp"

// Recovery guarantees evaluated against concrete instances. Each check
// reports the decisive inequality with strict `<` exactly as stated; values
// within 1e-12 of the boundary are flagged borderline instead of being
// silently classified. When an exact delta_k is over the enumeration budget,
// its upper bound is substituted and the report is marked conservative: a
// conservative "satisfied" is still sound, a conservative "not satisfied" is
// inconclusive.

namespace greedycs::guarantees {

inline constexpr double kBorderlineTol = 1e-12;

enum class MetricMode { Exact, Upper, Lower };

struct MetricValue {
  double value = 0.0;
  MetricMode mode = MetricMode::Exact;
};

enum class PredictedOutcome { ExactSupportRecovery, NoGuarantee, Inconclusive };

struct GuaranteeReport {
  std::string condition;
  std::size_t k = 0;
  double rho = 1.0;
  double epsilon = 0.0;
  double lhs = 0.0;  // decisive inequality, left side
  double rhs = 0.0;  // decisive inequality, right side
  bool satisfied = false;
  bool conservative = false;
  bool borderline = false;
  PredictedOutcome predicted = PredictedOutcome::NoGuarantee;
  std::map<std::string, MetricValue> metrics;
};

const char* to_string(MetricMode m);
const char* to_string(PredictedOutcome o);

/// Correlation bounds for f = Phi a + w: with Omega a subset of supp(a) such
/// that <Phi a, phi_i> = 0 for the support indices outside Omega,
///   max off-support |<f, phi_i>|  <=  nu_k ||a||_2 + eps
///   max on-support  |<f, phi_i>|  >=  sqrt(1 - delta_k)/sqrt(m) ||Phi a||_2 - eps.
struct Lemma2Bounds {
  double off_support_max = 0.0;
  double on_support_max = 0.0;
  double upper = 0.0;  // nu_k ||a||_2 + eps
  double lower = 0.0;  // sqrt(1-delta_k)/sqrt(m) ||Phi a||_2 - eps
  std::size_t k = 0;
  std::size_t m = 0;  // |Omega|
  double epsilon = 0.0;
  double nu_k = 0.0;
  double delta_k = 0.0;
  bool upper_holds = false;  // off_support_max <= upper + slack
  bool lower_holds = false;  // on_support_max >= lower - slack
};

inline constexpr double kLemma2Slack = 1e-10;
inline constexpr double kHypothesisTol = 1e-10;

/// omega: 0-based subset of supp(a); pass empty to default to the full
/// support (m = k). Hypothesis <Phi a, phi_i> = 0 on supp(a) \ omega is
/// verified within kHypothesisTol; delta_k is exact (budget applies).
Lemma2Bounds lemma2_bounds(const Dictionary& dict, const SparseVector& a,
                           const std::vector<double>& w,
                           std::vector<std::size_t> omega = {});

/// Support-recovery guarantee: sqrt(k) nu_k < rho (1 - delta_k) and
/// eps < (rho (1 - delta_k) - sqrt(k) nu_k) / (1 + rho) * |a_min|. When both
/// hold, any conforming WOMP selection recovers supp(a) in k iterations and
/// ||a_hat - a||_2^2 <= eps^2 / (1 - delta_k).
GuaranteeReport theorem1_check(const Dictionary& dict, const SparseVector& a,
                               double rho, double epsilon);

struct ErrorBoundCheck {
  double lhs = 0.0;  // ||a_hat - a||_2^2
  double rhs = 0.0;  // eps^2 / (1 - delta_k)
  bool holds = false;
};

/// Verifies the error bound on a finished run. Throws NotApplicable when the
/// recovered support differs from supp(a), DegenerateDelta when delta_k >= 1.
ErrorBoundCheck error_bound_check(const Dictionary& dict, const SparseVector& a,
                                  const pursuit::RecoveryResult& result,
                                  double epsilon);

/// The three sufficient conditions (a) sqrt(k) delta_{k+1} < rho (1-delta_k),
/// (b) sqrt(k) nu_k < rho (1 - nu_{k-1} sqrt(k-1)), (c) kM < rho (1-(k-1)M).
std::array<GuaranteeReport, 3> corollary1_check(const Dictionary& dict, std::size_t k,
                                                double rho);

/// OMP condition delta_k + sqrt(k) delta_{k+1} < 1 (exact deltas required).
GuaranteeReport corollary2_check(const Dictionary& dict, std::size_t k);

struct BoundComparison {
  bool new_bound = false;    // delta_k + sqrt(k) delta_{k+1} < 1
  bool prior_bound = false;  // delta_{k+1} (1 + sqrt(k)) < 1
  bool separation = false;   // new_bound && !prior_bound
  double delta_k = 0.0;
  double delta_k1 = 0.0;
};

/// prior_bound implies new_bound on every instance (delta_k <= delta_{k+1}).
BoundComparison compare_with_prior_bound(const Dictionary& dict, std::size_t k);

}  // namespace greedycs::guarantees
