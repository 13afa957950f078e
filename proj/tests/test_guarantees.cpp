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

#include "greedycs/coherence.hpp"
#include "greedycs/errors.hpp"
#include "greedycs/guarantees.hpp"
#include "greedycs/harness.hpp"
#include "greedycs/kernels.hpp"
#include "greedycs/pursuit.hpp"
#include "test_util.hpp"

using namespace greedycs;
using guarantees::GuaranteeReport;
using guarantees::MetricMode;
using guarantees::PredictedOutcome;

namespace {

SparseVector dense_sv(std::vector<double> v) {
  return SparseVector::from_dense(v);
}

Dictionary perturbed_identity(std::size_t n, double scale, std::uint64_t seed) {
  harness::EnsembleSpec spec;
  spec.kind = harness::EnsembleKind::PartialIdentityPerturbed;
  spec.n = n;
  spec.d = n;
  spec.perturbation_scale = scale;
  spec.seed = seed;
  return harness::generate_dictionary(spec);
}

}  // namespace

TEST_CASE("lemma2_bounds: orthonormal case is tight on both sides") {
  const Dictionary id4 = testutil::identity_dictionary(4);
  const auto a = dense_sv({1.0, 1.0, 0.0, 0.0});
  const auto b = guarantees::lemma2_bounds(id4, a, {});
  CHECK(b.k == 2);
  CHECK(b.m == 2);
  CHECK(b.epsilon == 0.0);
  CHECK(b.off_support_max == 0.0);
  CHECK(b.upper == 0.0);  // nu_2 = 0
  CHECK(b.on_support_max == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(b.lower == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(b.upper_holds);
  CHECK(b.lower_holds);
}

TEST_CASE("lemma2_bounds: worked 2x3 instance, noiseless and perturbed") {
  const Dictionary dict = testutil::phi_ex();
  const auto a = dense_sv({1.0, 2.0, 0.0});

  const auto b = guarantees::lemma2_bounds(dict, a, {});
  CHECK(b.off_support_max == doctest::Approx(3.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(b.upper == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));  // nu_2 = 1
  CHECK(b.on_support_max == doctest::Approx(2.0).epsilon(1e-15));
  const double expected_lower =
      std::sqrt(1.0 - 1.0 / std::sqrt(2.0)) / std::sqrt(2.0) * std::sqrt(5.0);
  CHECK(b.lower == doctest::Approx(expected_lower).epsilon(1e-13));
  CHECK(b.upper_holds);
  CHECK(b.lower_holds);

  const std::vector<double> w = {0.05, 0.0};
  const auto bn = guarantees::lemma2_bounds(dict, a, w);
  CHECK(bn.epsilon == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(bn.upper == doctest::Approx(std::sqrt(5.0) + 0.05).epsilon(1e-14));
  CHECK(bn.lower == doctest::Approx(expected_lower - 0.05).epsilon(1e-12));
  CHECK(bn.upper_holds);
  CHECK(bn.lower_holds);
}

TEST_CASE("lemma2_bounds: violated orthogonality hypothesis is rejected") {
  const Dictionary id4 = testutil::identity_dictionary(4);
  const auto a = dense_sv({1.0, 2.0, 0.0, 0.0});
  // Omega = {0} declares atom 2 inactive, but <Phi a, e2> = 2.
  try {
    guarantees::lemma2_bounds(id4, a, {}, {0});
    FAIL("expected HypothesisViolated");
  } catch (const HypothesisViolated& e) {
    CHECK(e.index == 2);  // 1-based
    CHECK(e.value == doctest::Approx(2.0).epsilon(1e-15));
  }
  CHECK_THROWS_AS(guarantees::lemma2_bounds(id4, a, {}, {3}), UsageError);
}

TEST_CASE("lemma2_bounds: random instances satisfy both bounds") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 6 + seed % 5;
    const std::size_t d = 8 + seed % 6;
    const Dictionary dict =
        normalize_columns(testutil::random_matrix(n, d, 70'000 + seed));
    const std::size_t k = 2 + seed % 3;
    const auto a = harness::generate_sparse_signal(
        d, k, 71'000 + seed, harness::ValueModel::GaussianMagnitudes);
    const auto w = harness::generate_noise(n, 72'000 + seed, 0.1 * (seed % 4));
    const auto b = guarantees::lemma2_bounds(dict, a, w);
    CHECK(b.upper_holds);
    CHECK(b.lower_holds);
  }
}

TEST_CASE("theorem1_check: orthonormal dictionary has closed-form thresholds") {
  const Dictionary id4 = testutil::identity_dictionary(4);
  const auto a = dense_sv({0.0, 5.0, 0.0, 3.0});  // a_min = 3, k = 2

  auto rep = guarantees::theorem1_check(id4, a, 1.0, 1.0);
  CHECK(rep.satisfied);
  CHECK(!rep.conservative);
  CHECK(rep.predicted == PredictedOutcome::ExactSupportRecovery);
  CHECK(rep.metrics.at("nu_k").value == 0.0);
  CHECK(rep.metrics.at("delta_k").value == 0.0);
  CHECK(rep.metrics.at("noise_threshold").value ==
        doctest::Approx(1.5).epsilon(1e-15));
  CHECK(rep.lhs == 1.0);  // decisive: the noise inequality
  CHECK(rep.rhs == doctest::Approx(1.5).epsilon(1e-15));

  auto rep2 = guarantees::theorem1_check(id4, a, 1.0, 2.0);
  CHECK(!rep2.satisfied);
  CHECK(rep2.predicted == PredictedOutcome::NoGuarantee);
}

TEST_CASE("theorem1_check: the worked instance fails condition 1") {
  const auto rep = guarantees::theorem1_check(testutil::phi_ex(),
                                              dense_sv({1.0, 2.0, 0.0}), 1.0, 0.0);
  CHECK(!rep.satisfied);
  CHECK(rep.lhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(rep.rhs == doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)).epsilon(1e-13));
  CHECK(rep.predicted == PredictedOutcome::NoGuarantee);
}

TEST_CASE("theorem1_check: small perturbation of the identity is guaranteed") {
  const Dictionary dict = perturbed_identity(8, 0.005, 7);
  CHECK(coherence::mutual_coherence(dict) < 0.05);
  const auto a = harness::generate_sparse_signal(8, 2, 11,
                                                 harness::ValueModel::UnitSigns);
  const auto rep = guarantees::theorem1_check(dict, a, 0.5, 0.0);
  CHECK(rep.satisfied);
  CHECK(!rep.conservative);
  // sigma_min diagnostics: the true relation and the looser recorded one.
  const double sigma = rep.metrics.at("sigma_min").value;
  CHECK(sigma >= rep.metrics.at("sqrt_one_minus_delta").value - 1e-9);
  CHECK(sigma >= rep.metrics.at("one_minus_delta").value - 1e-9);
}

TEST_CASE("theorem1_check: over-budget delta switches to a conservative report") {
  const Dictionary dict = perturbed_identity(40, 0.01, 3);
  const auto a = harness::generate_sparse_signal(40, 12, 13,
                                                 harness::ValueModel::UnitSigns);
  const auto rep = guarantees::theorem1_check(dict, a, 0.5, 0.0);
  CHECK(rep.conservative);
  CHECK(rep.metrics.at("delta_k").mode == MetricMode::Upper);
  if (rep.satisfied)
    CHECK(rep.predicted == PredictedOutcome::ExactSupportRecovery);
  else
    CHECK(rep.predicted == PredictedOutcome::Inconclusive);
}

TEST_CASE("theorem1_check: monotone in rho") {
  const Dictionary dict = perturbed_identity(10, 0.02, 21);
  const auto a = harness::generate_sparse_signal(10, 2, 22,
                                                 harness::ValueModel::UnitSigns);
  bool seen_satisfied = false;
  for (double rho : {0.2, 0.4, 0.6, 0.8, 1.0}) {
    const auto rep = guarantees::theorem1_check(dict, a, rho, 1e-3);
    if (seen_satisfied) CHECK(rep.satisfied);
    if (rep.satisfied) seen_satisfied = true;
  }
  CHECK(seen_satisfied);  // at rho = 1 this instance must qualify
}

TEST_CASE("error_bound_check: tight orthonormal case and error paths") {
  const Dictionary id4 = testutil::identity_dictionary(4);
  const auto a = dense_sv({2.0, 0.0, 0.0, 3.0});
  const std::vector<double> w = {0.1, 0.0, 0.0, 0.0};
  const Observation obs = synthesize(id4, a, &w);
  const auto run = pursuit::omp(id4, obs, obs.epsilon);
  const auto check = guarantees::error_bound_check(id4, a, run, obs.epsilon);
  CHECK(check.lhs == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(check.rhs == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(check.holds);

  // Noiseless exact recovery: both sides collapse to zero.
  const Observation clean = synthesize(id4, a);
  const auto run2 = pursuit::omp(id4, clean, 0.0);
  const auto check2 = guarantees::error_bound_check(id4, a, run2, 0.0);
  CHECK(check2.lhs <= 1e-12);
  CHECK(check2.holds);

  // Wrong support is not applicable rather than a failed bound.
  const Dictionary ex = testutil::phi_ex();
  const auto a_ex = dense_sv({1.0, 2.0, 0.0});
  const Observation obs_ex = synthesize(ex, a_ex);
  const auto run_ex = pursuit::omp(ex, obs_ex, 1e-12);
  CHECK_THROWS_AS(guarantees::error_bound_check(ex, a_ex, run_ex, 0.0),
                  NotApplicable);
}

TEST_CASE("error_bound_check: degenerate delta is reported, not divided by") {
  // Equiangular mu = 0.6 has delta_3 = 1.2: order-3 RIP fails outright.
  const Dictionary dict = testutil::equiangular_dictionary(4, 0.6);
  const auto a = SparseVector::from_support(4, {0, 1, 2}, {1.0, 1.0, 1.0});
  pursuit::RecoveryResult fake;
  fake.support_trajectory = {0, 1, 2};
  fake.estimate = {1.0, 1.0, 1.0, 0.0};
  CHECK_THROWS_AS(guarantees::error_bound_check(dict, a, fake, 0.0),
                  DegenerateDelta);
}

TEST_CASE("corollary1_check: identity, algebraic identity at rho = 1, worked case") {
  const auto reports = guarantees::corollary1_check(testutil::identity_dictionary(5),
                                                    2, 1.0);
  for (const auto& rep : reports) CHECK(rep.satisfied);
  CHECK(reports[0].condition == "corollary1a");
  CHECK(reports[1].condition == "corollary1b");
  CHECK(reports[2].condition == "corollary1c");

  // (c) at rho = 1 is the classical (2k-1) M < 1.
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Dictionary dict =
        normalize_columns(testutil::random_matrix(5 + seed % 4, 8, 80'000 + seed));
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto rep = guarantees::corollary1_check(dict, k, 1.0)[2];
      const double m = coherence::mutual_coherence(dict);
      CHECK(rep.satisfied == ((2.0 * static_cast<double>(k) - 1.0) * m < 1.0));
    }
  }

  const auto ex = guarantees::corollary1_check(testutil::phi_ex(), 2, 1.0);
  CHECK(!ex[2].satisfied);
  CHECK(ex[2].lhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("corollary1 implication lattice via the coherence chain") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const bool structured = seed % 2 == 0;
    const Dictionary dict = structured
                                ? perturbed_identity(8, 0.02 * (1 + seed % 4), seed)
                                : normalize_columns(testutil::random_matrix(
                                      6 + seed % 4, 9 + seed % 4, 90'000 + seed));
    const double rho = (seed % 3 == 0) ? 0.7 : 1.0;
    for (std::size_t k = 2; k <= 3; ++k) {
      const auto reports = guarantees::corollary1_check(dict, k, rho);
      const double nu_k = coherence::global_2_coherence(dict, k);
      const double delta_k = coherence::ric_exact(dict, k);
      const bool thm_cond1 = std::sqrt(static_cast<double>(k)) * nu_k <
                             rho * (1.0 - delta_k) + 1e-9;
      if (reports[0].satisfied) CHECK(thm_cond1);  // (a) => theorem condition
      if (reports[2].satisfied) CHECK(reports[1].satisfied);  // (c) => (b)
      if (reports[1].satisfied) CHECK(thm_cond1);             // (b) => condition
    }
  }
}

TEST_CASE("corollary2_check: identity, worked failure, closed-form separation") {
  CHECK(guarantees::corollary2_check(testutil::identity_dictionary(4), 2).satisfied);

  const auto ex = guarantees::corollary2_check(testutil::phi_ex(), 2);
  CHECK(!ex.satisfied);
  CHECK(ex.lhs ==
        doctest::Approx(1.0 / std::sqrt(2.0) + std::sqrt(2.0)).epsilon(1e-13));

  // Equiangular mu = 0.225: delta_2 = 0.225, delta_3 = 0.45, so the new bound
  // holds at 0.8614 while the prior bound fails at 1.0864.
  const Dictionary eq = testutil::equiangular_dictionary(8, 0.225);
  const auto rep = guarantees::corollary2_check(eq, 2);
  CHECK(rep.satisfied);
  CHECK(rep.lhs ==
        doctest::Approx(0.225 + std::sqrt(2.0) * 0.45).epsilon(1e-11));
}

TEST_CASE("compare_with_prior_bound: implication and separation") {
  const auto id = guarantees::compare_with_prior_bound(
      testutil::identity_dictionary(5), 2);
  CHECK(id.new_bound);
  CHECK(id.prior_bound);
  CHECK(!id.separation);

  const auto eq = guarantees::compare_with_prior_bound(
      testutil::equiangular_dictionary(8, 0.225), 2);
  CHECK(eq.new_bound);
  CHECK(!eq.prior_bound);
  CHECK(eq.separation);

  // prior => new on every instance: delta_k <= delta_{k+1}.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Dictionary dict = seed % 2 == 0
                                ? perturbed_identity(7, 0.05 * (seed % 5), seed)
                                : normalize_columns(testutil::random_matrix(
                                      6 + seed % 3, 8 + seed % 4, 95'000 + seed));
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto cmp = guarantees::compare_with_prior_bound(dict, k);
      if (cmp.prior_bound) CHECK(cmp.new_bound);
    }
  }
}

TEST_CASE("lemma2 bounds hold on the internal iterates of a guaranteed run") {
  const Dictionary dict = perturbed_identity(8, 0.02, 31);
  const std::size_t k = 3;
  const auto a = harness::generate_sparse_signal(8, k, 32,
                                                 harness::ValueModel::UnitSigns);

  // Pick the noise at half the certified threshold, then re-verify.
  const auto probe = guarantees::theorem1_check(dict, a, 1.0, 0.0);
  REQUIRE(probe.satisfied);
  const double eps = 0.5 * probe.metrics.at("noise_threshold").value;
  const auto w = harness::generate_noise(8, 33, eps);
  REQUIRE(guarantees::theorem1_check(dict, a, 1.0, eps).satisfied);

  const Observation obs = synthesize(dict, a, &w);
  const auto run = pursuit::omp(dict, obs, obs.epsilon);
  REQUIRE(run.iterations == k);
  std::vector<std::size_t> sorted = run.support_trajectory;
  std::sort(sorted.begin(), sorted.end());
  REQUIRE(sorted == a.support());

  const std::vector<double> phi_a = synthesize(dict, a).f;
  const double fnorm = kernels::nrm2(obs.f.data(), 8);
  const std::vector<double> a_dense = a.to_dense();

  std::vector<std::size_t> prefix;
  for (std::size_t s = 1; s < k; ++s) {
    prefix.push_back(run.support_trajectory[s - 1]);

    // a_s: the residual signal after projecting Phi a onto the prefix atoms.
    const auto proj_sig = least_squares(dict, prefix, phi_a);
    std::vector<double> a_s = a_dense;
    for (std::size_t j = 0; j < prefix.size(); ++j)
      a_s[prefix[j]] -= proj_sig.coefficients[j];
    const auto w_s = least_squares(dict, prefix, w).residual;

    // Appendix decomposition r_s = Phi a_s + w_s.
    const auto r_s = least_squares(dict, prefix, obs.f).residual;
    std::vector<double> reconstructed = w_s;
    const auto sv = SparseVector::from_dense(a_s);
    const auto phi_a_s = synthesize(dict, sv).f;
    for (std::size_t t = 0; t < reconstructed.size(); ++t)
      reconstructed[t] += phi_a_s[t];
    for (std::size_t t = 0; t < r_s.size(); ++t)
      CHECK(std::abs(r_s[t] - reconstructed[t]) <= 1e-10 * fnorm);

    // Lemma 2 on the iterate with Omega = supp(a) \ prefix, m = k - s.
    std::vector<std::size_t> omega;
    for (std::size_t i : a.support())
      if (std::find(prefix.begin(), prefix.end(), i) == prefix.end())
        omega.push_back(i);
    const auto bounds = guarantees::lemma2_bounds(dict, sv, w_s, omega);
    CHECK(bounds.m == k - s);
    CHECK(bounds.upper_holds);
    CHECK(bounds.lower_holds);
  }
}

TEST_CASE("guarantee argument validation") {
  const Dictionary id4 = testutil::identity_dictionary(4);
  const auto a = dense_sv({1.0, 0.0, 0.0, 0.0});
  CHECK_THROWS_AS(guarantees::theorem1_check(id4, a, 0.0, 0.0), UsageError);
  CHECK_THROWS_AS(guarantees::theorem1_check(id4, a, 1.0, -1.0), UsageError);
  CHECK_THROWS_AS(guarantees::corollary1_check(id4, 4, 1.0), OrderOutOfRange);
  CHECK_THROWS_AS(guarantees::corollary2_check(id4, 0), OrderOutOfRange);
  const auto full = dense_sv({1.0, 1.0, 1.0, 1.0});
  CHECK_THROWS_AS(guarantees::lemma2_bounds(id4, full, {}), OrderOutOfRange);
}
