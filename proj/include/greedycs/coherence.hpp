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
#include <cstdint>
#include <map>

#include "greedycs/dictionary.hpp"

// Dictionary metrics: mutual coherence M, global 2-coherence nu_k, and the
// restricted isometry constant delta_k, plus the inequality chain
//
//   M <= nu_{k-1} <= delta_k <= sqrt(k-1) nu_{k-1} <= (k-1) M      (k > 1)
//
// that sandwiches delta_k between coherence quantities. delta_k is computed
// exactly by subset enumeration within a budget; the coherence bounds are the
// product feature above it.

namespace greedycs::coherence {

/// Enumeration caps. ric: number of subsets; nu brute: subsets times atoms.
inline constexpr std::uint64_t kRicEnumerationBudget = 200000;
inline constexpr std::uint64_t kNuBruteBudget = 10000000;

/// Slack for comparisons along the inequality chain; absorbs eigensolver and
/// summation round-off. Exact equalities must not read as violations.
inline constexpr double kChainSlack = 1e-9;

/// max_{i != j} |<phi_i, phi_j>|, in [0, 1] for unit-norm atoms.
double mutual_coherence(const Dictionary& dict);

/// nu_k = max_i max_{|L| <= k, i not in L} sqrt(sum_{j in L} <phi_i, phi_j>^2).
/// Fast path: per atom, the maximizing L is the set of the k largest squared
/// off-diagonal Gram entries, because every summand is nonnegative.
/// Requires 1 <= k <= d-1.
double global_2_coherence(const Dictionary& dict, std::size_t k);

/// Enumeration oracle for nu_k straight from the definition. Must match the
/// fast path to 1e-12. Budget: C(d-1, k) * d subsets visited.
double global_2_coherence_brute(const Dictionary& dict, std::size_t k);

/// Second oracle route: nu_k = max_{|L| = k+1} ||G_L - I||_{inf,2}, where the
/// norm is the largest row Euclidean norm.
double global_2_coherence_brute_gram(const Dictionary& dict, std::size_t k);

/// Exact delta_k = max_{|L| = k} max(lambda_max(G_L) - 1, 1 - lambda_min(G_L))
/// by subset enumeration and symmetric eigensolves. Returns the value even
/// when >= 1 (order-k RIP then fails). Requires 1 <= k <= d.
double ric_exact(const Dictionary& dict, std::size_t k);

/// Gershgorin bound: max_{|L| = k} max_{i in L} sum_{j in L, j != i} |g_ij|,
/// always >= delta_k. Computed exactly without enumeration: per atom, sum the
/// k-1 largest off-diagonal magnitudes. Requires 2 <= k <= d.
double ric_gershgorin_upper(const Dictionary& dict, std::size_t k);

/// Best upper bound on delta_k available without enumeration:
/// min(sqrt(k-1) nu_{k-1}, (k-1) M, Gershgorin). Requires k >= 2.
double ric_upper_bound(const Dictionary& dict, std::size_t k);

struct ChainReport {
  std::size_t k = 0;
  double M = 0.0;
  double nu_km1 = 0.0;      // nu_{k-1}
  double delta_k = 0.0;     // exact, by enumeration
  double sqrt_bound = 0.0;  // sqrt(k-1) nu_{k-1}
  double M_bound = 0.0;     // (k-1) M
  bool holds = false;
};

/// Evaluates all five chain quantities independently (delta_k via ric_exact)
/// and checks each adjacent inequality within kChainSlack. Requires k >= 2.
ChainReport lemma1_chain(const Dictionary& dict, std::size_t k);

/// Metric profile of one dictionary: nu_k for k = 1..k_max and the delta
/// sandwich for each order where it is defined.
struct CoherenceProfile {
  double M = 0.0;
  std::map<std::size_t, double> nu;              // k -> nu_k
  std::map<std::size_t, double> delta_exact;     // k -> delta_k (within budget)
  std::map<std::size_t, double> delta_lower;     // k -> nu_{k-1}
  std::map<std::size_t, double> delta_upper_nu;  // k -> sqrt(k-1) nu_{k-1}
  std::map<std::size_t, double> delta_upper_M;   // k -> (k-1) M
  std::map<std::size_t, double> gershgorin_max;  // k -> Gershgorin radius bound
};

CoherenceProfile compute_profile(const Dictionary& dict, std::size_t k_max,
                                 bool with_exact_ric);

}  // namespace greedycs::coherence
