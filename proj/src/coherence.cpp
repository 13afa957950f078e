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

#include "greedycs/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "greedycs/errors.hpp"
#include "greedycs/linalg.hpp"
#include "greedycs/subsets.hpp"

namespace greedycs::coherence {

namespace {

void require_order(std::size_t k, std::size_t lo, std::size_t hi, const char* what) {
  if (k < lo || k > hi)
    throw OrderOutOfRange(std::string(what) + ": order k=" + std::to_string(k) +
                          " outside [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
}

/// Sum of the `k` largest entries of `vals`, accumulated in descending order
/// so the result does not depend on the pre-sort arrangement.
double top_k_sum(std::vector<double>& vals, std::size_t k) {
  std::partial_sort(vals.begin(), vals.begin() + static_cast<std::ptrdiff_t>(k),
                    vals.end(), std::greater<>());
  double acc = 0.0;
  for (std::size_t t = 0; t < k; ++t) acc += vals[t];
  return acc;
}

}  // namespace

double mutual_coherence(const Dictionary& dict) {
  const DenseMatrix& g = dict.gram();
  double m = 0.0;
  for (std::size_t j = 1; j < dict.cols(); ++j)
    for (std::size_t i = 0; i < j; ++i) m = std::max(m, std::abs(g(i, j)));
  return m;
}

double global_2_coherence(const Dictionary& dict, std::size_t k) {
  const std::size_t d = dict.cols();
  require_order(k, 1, d - 1, "global_2_coherence");
  // k = 1 collapses to the mutual coherence; share its code path exactly.
  if (k == 1) return mutual_coherence(dict);

  const DenseMatrix& g = dict.gram();
  std::vector<double> sq(d - 1);
  double best = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t t = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == i) continue;
      sq[t++] = g(i, j) * g(i, j);
    }
    best = std::max(best, top_k_sum(sq, k));
  }
  return std::sqrt(best);
}

double global_2_coherence_brute(const Dictionary& dict, std::size_t k) {
  const std::size_t d = dict.cols();
  require_order(k, 1, d - 1, "global_2_coherence_brute");
  const std::uint64_t count = binomial(d - 1, k) * static_cast<std::uint64_t>(d);
  if (count > kNuBruteBudget)
    throw BudgetExceeded("global_2_coherence_brute over budget", count);

  const DenseMatrix& g = dict.gram();
  std::vector<std::size_t> others(d - 1);
  double best = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t t = 0;
    for (std::size_t j = 0; j < d; ++j)
      if (j != i) others[t++] = j;
    for_each_subset(d - 1, k, [&](std::span<const std::size_t> pos) {
      double acc = 0.0;
      for (std::size_t p : pos) {
        const double v = g(i, others[p]);
        acc += v * v;
      }
      best = std::max(best, acc);
    });
  }
  return std::sqrt(best);
}

double global_2_coherence_brute_gram(const Dictionary& dict, std::size_t k) {
  const std::size_t d = dict.cols();
  require_order(k, 1, d - 1, "global_2_coherence_brute_gram");
  const std::size_t subset_size = k + 1;
  const std::uint64_t count =
      binomial(d, subset_size) * static_cast<std::uint64_t>(subset_size);
  if (count > kNuBruteBudget)
    throw BudgetExceeded("global_2_coherence_brute_gram over budget", count);

  const DenseMatrix& g = dict.gram();
  double best = 0.0;
  for_each_subset(d, subset_size, [&](std::span<const std::size_t> subset) {
    for (std::size_t i : subset) {
      double acc = 0.0;  // squared row norm of (G_L - I), row i
      for (std::size_t j : subset) {
        if (j == i) continue;
        const double v = g(i, j);
        acc += v * v;
      }
      best = std::max(best, acc);
    }
  });
  return std::sqrt(best);
}

double ric_exact(const Dictionary& dict, std::size_t k) {
  const std::size_t d = dict.cols();
  require_order(k, 1, d, "ric_exact");
  const std::uint64_t count = binomial(d, k);
  if (count > kRicEnumerationBudget)
    throw BudgetExceeded("ric_exact over budget", count);

  const DenseMatrix& g = dict.gram();
  DenseMatrix sub(k, k);
  double worst = 0.0;
  for_each_subset(d, k, [&](std::span<const std::size_t> subset) {
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < k; ++i) sub(i, j) = g(subset[i], subset[j]);
    const std::vector<double> eig = linalg::symmetric_eigenvalues(sub);
    worst = std::max({worst, eig.back() - 1.0, 1.0 - eig.front()});
  });
  return worst;
}

double ric_gershgorin_upper(const Dictionary& dict, std::size_t k) {
  const std::size_t d = dict.cols();
  require_order(k, 2, d, "ric_gershgorin_upper");
  // The maximizing subset for atom i is i plus the k-1 atoms with the largest
  // |<phi_i, phi_j>|, so no enumeration is needed.
  const DenseMatrix& g = dict.gram();
  std::vector<double> mags(d - 1);
  double best = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t t = 0;
    for (std::size_t j = 0; j < d; ++j)
      if (j != i) mags[t++] = std::abs(g(i, j));
    best = std::max(best, top_k_sum(mags, k - 1));
  }
  return best;
}

double ric_upper_bound(const Dictionary& dict, std::size_t k) {
  require_order(k, 2, dict.cols(), "ric_upper_bound");
  const double m = mutual_coherence(dict);
  const double nu = global_2_coherence(dict, k - 1);
  const double gersh = ric_gershgorin_upper(dict, k);
  return std::min({std::sqrt(static_cast<double>(k - 1)) * nu,
                   static_cast<double>(k - 1) * m, gersh});
}

ChainReport lemma1_chain(const Dictionary& dict, std::size_t k) {
  require_order(k, 2, dict.cols(), "lemma1_chain");
  ChainReport r;
  r.k = k;
  r.M = mutual_coherence(dict);
  r.nu_km1 = global_2_coherence(dict, k - 1);
  r.delta_k = ric_exact(dict, k);
  r.sqrt_bound = std::sqrt(static_cast<double>(k - 1)) * r.nu_km1;
  r.M_bound = static_cast<double>(k - 1) * r.M;
  r.holds = r.M <= r.nu_km1 + kChainSlack && r.nu_km1 <= r.delta_k + kChainSlack &&
            r.delta_k <= r.sqrt_bound + kChainSlack &&
            r.sqrt_bound <= r.M_bound + kChainSlack;
  return r;
}

CoherenceProfile compute_profile(const Dictionary& dict, std::size_t k_max,
                                 bool with_exact_ric) {
  const std::size_t d = dict.cols();
  require_order(k_max, 1, d - 1, "compute_profile");
  CoherenceProfile p;
  p.M = mutual_coherence(dict);
  for (std::size_t k = 1; k <= k_max; ++k) p.nu[k] = global_2_coherence(dict, k);
  for (std::size_t k = 2; k <= std::min(k_max + 1, d); ++k) {
    p.delta_lower[k] = p.nu[k - 1];
    p.delta_upper_nu[k] = std::sqrt(static_cast<double>(k - 1)) * p.nu[k - 1];
    p.delta_upper_M[k] = static_cast<double>(k - 1) * p.M;
    p.gershgorin_max[k] = ric_gershgorin_upper(dict, k);
    if (with_exact_ric && binomial(d, k) <= kRicEnumerationBudget)
      p.delta_exact[k] = ric_exact(dict, k);
  }
  return p;
}

}  // namespace greedycs::coherence
