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

#include "greedycs/guarantees.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "greedycs/coherence.hpp"
#include "greedycs/errors.hpp"
#include "greedycs/kernels.hpp"
#include "greedycs/linalg.hpp"

namespace greedycs::guarantees {

namespace {

void require_rho(double rho) {
  if (!(rho > 0.0 && rho <= 1.0))
    throw UsageError("weak parameter rho must lie in (0, 1]");
}

bool is_borderline(double lhs, double rhs) {
  return std::abs(lhs - rhs) <= kBorderlineTol;
}

PredictedOutcome outcome_of(bool satisfied, bool conservative) {
  if (satisfied) return PredictedOutcome::ExactSupportRecovery;
  return conservative ? PredictedOutcome::Inconclusive : PredictedOutcome::NoGuarantee;
}

}  // namespace

const char* to_string(MetricMode m) {
  switch (m) {
    case MetricMode::Exact:
      return "exact";
    case MetricMode::Upper:
      return "upper";
    case MetricMode::Lower:
      return "lower";
  }
  return "unknown";
}

const char* to_string(PredictedOutcome o) {
  switch (o) {
    case PredictedOutcome::ExactSupportRecovery:
      return "ExactSupportRecovery";
    case PredictedOutcome::NoGuarantee:
      return "NoGuarantee";
    case PredictedOutcome::Inconclusive:
      return "Inconclusive";
  }
  return "unknown";
}

Lemma2Bounds lemma2_bounds(const Dictionary& dict, const SparseVector& a,
                           const std::vector<double>& w,
                           std::vector<std::size_t> omega) {
  const std::size_t n = dict.rows(), d = dict.cols();
  if (a.dim() != d) throw DimensionMismatch("lemma2_bounds: signal dimension != d");
  if (!w.empty() && w.size() != n)
    throw DimensionMismatch("lemma2_bounds: noise length != measurement dimension");

  const auto& support = a.support();
  const std::size_t k = support.size();
  if (k == 0) throw UsageError("lemma2_bounds: empty support");
  if (k > d - 1)
    throw OrderOutOfRange("lemma2_bounds: needs k <= d-1 so nu_k is defined");

  if (omega.empty()) omega = support;  // default: the full support, m = k
  std::sort(omega.begin(), omega.end());
  const std::set<std::size_t> support_set(support.begin(), support.end());
  for (std::size_t i : omega)
    if (!support_set.count(i))
      throw UsageError("lemma2_bounds: omega must be a subset of supp(a)");

  // Noiseless synthesis Phi a, used by the hypothesis check and the lower bound.
  const std::vector<double> phi_a = synthesize(dict, a, nullptr).f;
  const std::set<std::size_t> omega_set(omega.begin(), omega.end());
  for (std::size_t i : support) {
    if (omega_set.count(i)) continue;
    const double v = kernels::dot(phi_a.data(), dict.atom(i).data(), n);
    if (std::abs(v) > kHypothesisTol) throw HypothesisViolated(i + 1, v);
  }

  Lemma2Bounds out;
  out.k = k;
  out.m = omega.size();
  out.epsilon = w.empty() ? 0.0 : kernels::nrm2(w.data(), n);
  out.nu_k = coherence::global_2_coherence(dict, k);
  out.delta_k = coherence::ric_exact(dict, k);

  std::vector<double> f = phi_a;
  if (!w.empty())
    for (std::size_t i = 0; i < n; ++i) f[i] += w[i];

  const std::vector<double> corr = correlations(dict, f);
  for (std::size_t i = 0; i < d; ++i) {
    const double mag = std::abs(corr[i]);
    if (support_set.count(i))
      out.on_support_max = std::max(out.on_support_max, mag);
    else
      out.off_support_max = std::max(out.off_support_max, mag);
  }

  const double phi_a_norm = kernels::nrm2(phi_a.data(), n);
  out.upper = out.nu_k * a.norm2() + out.epsilon;
  out.lower = std::sqrt(std::max(0.0, 1.0 - out.delta_k)) /
                  std::sqrt(static_cast<double>(out.m)) * phi_a_norm -
              out.epsilon;
  out.upper_holds = out.off_support_max <= out.upper + kLemma2Slack;
  out.lower_holds = out.on_support_max >= out.lower - kLemma2Slack;
  return out;
}

GuaranteeReport theorem1_check(const Dictionary& dict, const SparseVector& a,
                               double rho, double epsilon) {
  require_rho(rho);
  if (epsilon < 0.0) throw UsageError("theorem1_check: epsilon must be >= 0");
  if (a.dim() != dict.cols())
    throw DimensionMismatch("theorem1_check: signal dimension != d");
  const std::size_t k = a.sparsity();
  if (k == 0) throw UsageError("theorem1_check: empty support");
  if (k > dict.cols() - 1)
    throw OrderOutOfRange("theorem1_check: needs k <= d-1 so nu_k is defined");

  GuaranteeReport rep;
  rep.condition = "theorem1";
  rep.k = k;
  rep.rho = rho;
  rep.epsilon = epsilon;

  const double nu_k = coherence::global_2_coherence(dict, k);
  double delta_k;
  MetricMode delta_mode = MetricMode::Exact;
  try {
    delta_k = coherence::ric_exact(dict, k);
  } catch (const BudgetExceeded&) {
    if (k < 2) throw;
    delta_k = coherence::ric_upper_bound(dict, k);
    delta_mode = MetricMode::Upper;
    rep.conservative = true;
  }

  const double a_min = a.min_magnitude();
  const double lhs1 = std::sqrt(static_cast<double>(k)) * nu_k;
  const double rhs1 = rho * (1.0 - delta_k);
  const bool cond1 = lhs1 < rhs1;
  const double noise_threshold = (rhs1 - lhs1) / (1.0 + rho) * a_min;
  const bool cond2 = epsilon < noise_threshold;

  rep.satisfied = cond1 && cond2;
  if (!cond1) {
    rep.lhs = lhs1;
    rep.rhs = rhs1;
  } else {
    rep.lhs = epsilon;
    rep.rhs = noise_threshold;
  }
  rep.borderline =
      is_borderline(lhs1, rhs1) || (cond1 && is_borderline(epsilon, noise_threshold));
  rep.predicted = outcome_of(rep.satisfied, rep.conservative);

  rep.metrics["nu_k"] = {nu_k, MetricMode::Exact};
  rep.metrics["delta_k"] = {delta_k, delta_mode};
  rep.metrics["a_min"] = {a_min, MetricMode::Exact};
  rep.metrics["norm_a"] = {a.norm2(), MetricMode::Exact};
  rep.metrics["noise_threshold"] = {
      noise_threshold, delta_mode == MetricMode::Exact ? MetricMode::Exact
                                                       : MetricMode::Lower};
  // Diagnostics from the selected subdictionary: the proof relates sigma_min
  // to delta_k both as sqrt(1-delta_k) and as the looser 1-delta_k; record
  // everything so either relation can be audited.
  const DenseMatrix sub = dict.submatrix(a.support());
  const double sigma_min = linalg::singular_values(sub).back();
  rep.metrics["sigma_min"] = {sigma_min, MetricMode::Exact};
  rep.metrics["sqrt_one_minus_delta"] = {
      std::sqrt(std::max(0.0, 1.0 - delta_k)),
      delta_mode == MetricMode::Exact ? MetricMode::Exact : MetricMode::Lower};
  rep.metrics["one_minus_delta"] = {
      1.0 - delta_k,
      delta_mode == MetricMode::Exact ? MetricMode::Exact : MetricMode::Lower};
  return rep;
}

ErrorBoundCheck error_bound_check(const Dictionary& dict, const SparseVector& a,
                                  const pursuit::RecoveryResult& result,
                                  double epsilon) {
  std::vector<std::size_t> recovered = result.support_trajectory;
  std::sort(recovered.begin(), recovered.end());
  if (recovered != a.support())
    throw NotApplicable("error_bound_check: recovered support != supp(a)");

  const double delta_k = coherence::ric_exact(dict, a.sparsity());
  if (delta_k >= 1.0)
    throw DegenerateDelta("error_bound_check: delta_k >= 1, bound undefined");

  const std::vector<double> dense = a.to_dense();
  double lhs = 0.0;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    const double diff = result.estimate[i] - dense[i];
    lhs += diff * diff;
  }
  ErrorBoundCheck out;
  out.lhs = lhs;
  out.rhs = epsilon * epsilon / (1.0 - delta_k);
  out.holds = out.lhs <= out.rhs + kBorderlineTol;
  return out;
}

std::array<GuaranteeReport, 3> corollary1_check(const Dictionary& dict, std::size_t k,
                                                double rho) {
  require_rho(rho);
  const std::size_t d = dict.cols();
  if (k < 1 || k + 1 > d)
    throw OrderOutOfRange("corollary1_check: needs 1 <= k <= d-1");

  const double sqrt_k = std::sqrt(static_cast<double>(k));
  const double sqrt_km1 = std::sqrt(static_cast<double>(k - 1));
  const double m = coherence::mutual_coherence(dict);
  const double nu_k = coherence::global_2_coherence(dict, k);
  const double nu_km1 = k >= 2 ? coherence::global_2_coherence(dict, k - 1) : 0.0;
  const double delta_k = coherence::ric_exact(dict, k);
  const double delta_k1 = coherence::ric_exact(dict, k + 1);

  auto base = [&](const char* name, double lhs, double rhs) {
    GuaranteeReport rep;
    rep.condition = name;
    rep.k = k;
    rep.rho = rho;
    rep.epsilon = 0.0;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.satisfied = lhs < rhs;
    rep.borderline = is_borderline(lhs, rhs);
    rep.predicted = outcome_of(rep.satisfied, false);
    return rep;
  };

  std::array<GuaranteeReport, 3> out = {
      base("corollary1a", sqrt_k * delta_k1, rho * (1.0 - delta_k)),
      base("corollary1b", sqrt_k * nu_k, rho * (1.0 - nu_km1 * sqrt_km1)),
      base("corollary1c", static_cast<double>(k) * m,
           rho * (1.0 - static_cast<double>(k - 1) * m)),
  };
  out[0].metrics["delta_k"] = {delta_k, MetricMode::Exact};
  out[0].metrics["delta_k1"] = {delta_k1, MetricMode::Exact};
  out[1].metrics["nu_k"] = {nu_k, MetricMode::Exact};
  out[1].metrics["nu_km1"] = {nu_km1, MetricMode::Exact};
  out[2].metrics["M"] = {m, MetricMode::Exact};
  return out;
}

GuaranteeReport corollary2_check(const Dictionary& dict, std::size_t k) {
  const std::size_t d = dict.cols();
  if (k < 1 || k + 1 > d)
    throw OrderOutOfRange("corollary2_check: needs 1 <= k <= d-1");
  const double delta_k = coherence::ric_exact(dict, k);
  const double delta_k1 = coherence::ric_exact(dict, k + 1);

  GuaranteeReport rep;
  rep.condition = "corollary2";
  rep.k = k;
  rep.rho = 1.0;
  rep.epsilon = 0.0;
  rep.lhs = delta_k + std::sqrt(static_cast<double>(k)) * delta_k1;
  rep.rhs = 1.0;
  rep.satisfied = rep.lhs < rep.rhs;
  rep.borderline = is_borderline(rep.lhs, rep.rhs);
  rep.predicted = outcome_of(rep.satisfied, false);
  rep.metrics["delta_k"] = {delta_k, MetricMode::Exact};
  rep.metrics["delta_k1"] = {delta_k1, MetricMode::Exact};
  return rep;
}

BoundComparison compare_with_prior_bound(const Dictionary& dict, std::size_t k) {
  const std::size_t d = dict.cols();
  if (k < 1 || k + 1 > d)
    throw OrderOutOfRange("compare_with_prior_bound: needs 1 <= k <= d-1");
  BoundComparison out;
  out.delta_k = coherence::ric_exact(dict, k);
  out.delta_k1 = coherence::ric_exact(dict, k + 1);
  const double sqrt_k = std::sqrt(static_cast<double>(k));
  out.new_bound = out.delta_k + sqrt_k * out.delta_k1 < 1.0;
  out.prior_bound = out.delta_k1 * (1.0 + sqrt_k) < 1.0;
  out.separation = out.new_bound && !out.prior_bound;
  return out;
}

}  // namespace greedycs::guarantees
