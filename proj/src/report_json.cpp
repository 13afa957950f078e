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

#include "greedycs/report_json.hpp"

#include <nlohmann/json.hpp>

namespace greedycs::report_json {

using nlohmann::json;

std::string to_json(const coherence::ChainReport& r) {
  json j;
  j["k"] = r.k;
  j["M"] = r.M;
  j["nu_km1"] = r.nu_km1;
  j["delta_k"] = r.delta_k;
  j["sqrt_bound"] = r.sqrt_bound;
  j["M_bound"] = r.M_bound;
  j["holds"] = r.holds;
  return j.dump(2) + "\n";
}

std::string to_json(const guarantees::GuaranteeReport& r) {
  json j;
  j["condition"] = r.condition;
  j["k"] = r.k;
  j["rho"] = r.rho;
  j["epsilon"] = r.epsilon;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["satisfied"] = r.satisfied;
  j["conservative"] = r.conservative;
  j["borderline"] = r.borderline;
  json metrics;
  for (const auto& [name, mv] : r.metrics) {
    metrics[name] = {{"value", mv.value}, {"mode", guarantees::to_string(mv.mode)}};
  }
  j["metrics"] = std::move(metrics);
  return j.dump(2) + "\n";
}

std::string to_json(const guarantees::Lemma2Bounds& r) {
  json j;
  j["k"] = r.k;
  j["m"] = r.m;
  j["epsilon"] = r.epsilon;
  j["nu_k"] = r.nu_k;
  j["delta_k"] = r.delta_k;
  j["off_support_max"] = r.off_support_max;
  j["upper"] = r.upper;
  j["on_support_max"] = r.on_support_max;
  j["lower"] = r.lower;
  j["upper_holds"] = r.upper_holds;
  j["lower_holds"] = r.lower_holds;
  return j.dump(2) + "\n";
}

std::string to_json(const guarantees::BoundComparison& r, std::size_t k) {
  json j;
  j["k"] = k;
  j["delta_k"] = r.delta_k;
  j["delta_k1"] = r.delta_k1;
  j["new"] = r.new_bound;
  j["prior"] = r.prior_bound;
  j["separation"] = r.separation;
  return j.dump(2) + "\n";
}

std::string to_json(const pursuit::RecoveryResult& r) {
  json j;
  json traj = json::array();
  for (std::size_t i : r.support_trajectory) traj.push_back(i + 1);  // 1-based
  j["support_trajectory"] = std::move(traj);
  j["estimate"] = r.estimate;
  j["residual_norms"] = r.residual_norms;
  j["iterations"] = r.iterations;
  j["stop_reason"] = pursuit::to_string(r.stop_reason);
  j["stop_threshold"] = r.stop_threshold;
  return j.dump(2) + "\n";
}

}  // namespace greedycs::report_json
