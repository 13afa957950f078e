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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "greedycs/dictionary.hpp"
#include "greedycs/pursuit.hpp"

// Instance generation and experiment sweeps. Everything is deterministic in
// the seeds: a sweep config identifies its output byte for byte, and per-trial
// seeds are derived from the master seed by trial index.

namespace greedycs::harness {

enum class EnsembleKind { GaussianNormalized, PartialIdentityPerturbed, FromFile };

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::GaussianNormalized;
  std::size_t n = 0;
  std::size_t d = 0;
  double perturbation_scale = 0.0;  // PartialIdentityPerturbed only
  std::uint64_t seed = 0;
  std::string path;          // FromFile only
  bool renormalize = false;  // FromFile: rescale off-norm columns
};

/// Norm gate for file-loaded dictionaries; beyond it NormViolation is thrown
/// unless renormalize is set. Looser than the construction tolerance because
/// hand-written files carry fewer digits.
inline constexpr double kFileNormTol = 1e-8;

/// GaussianNormalized: i.i.d. standard normal entries, columns rescaled.
/// PartialIdentityPerturbed: identity columns plus scale * Gaussian noise,
/// rescaled; requires d <= n (scale 0 must give orthonormal columns).
/// FromFile: parse, validate unit norms within kFileNormTol.
Dictionary generate_dictionary(const EnsembleSpec& spec);

enum class ValueModel { UnitSigns, GaussianMagnitudes, MinMagnitude };

/// Support drawn uniformly without replacement; values per model (UnitSigns:
/// +-1, GaussianMagnitudes: standard normal, MinMagnitude: sign * a_min *
/// (1 + U[0,1))). Deterministic in the seed.
SparseVector generate_sparse_signal(std::size_t d, std::size_t k, std::uint64_t seed,
                                    ValueModel model, double a_min = 1.0);

/// Unit vector with Gaussian direction scaled to `norm`; the zero vector when
/// norm is 0.
std::vector<double> generate_noise(std::size_t n, std::uint64_t seed, double norm);

// ---- sweeps ------------------------------------------------------------------

/// Flat result row; tri-state flags are 1 (true), 0 (false), -1 (not
/// evaluated, e.g. metric over budget or bound not applicable).
struct TrialRecord {
  std::uint64_t trial = 0;
  std::size_t n = 0, d = 0, k = 0;
  double rho = 1.0;
  double epsilon = 0.0;  // noise norm of the instance
  double scale = 0.0;
  std::uint64_t seed = 0;  // derived per-trial seed
  std::string policy;

  double M = 0.0;
  double nu_k = 0.0;
  double delta_k = 0.0;
  std::string delta_mode;  // "exact" or "upper"
  double delta_k1 = 0.0;   // 0 when not evaluated
  int thm1 = -1;
  int thm1_conservative = -1;
  int cor1a = -1, cor1b = -1, cor1c = -1;
  int cor2 = -1;
  int prior = -1;

  int support_match = -1;
  std::size_t iterations = 0;
  double final_residual = 0.0;
  std::string stop_reason;
  int error_bound_holds = -1;
  double error_lhs = 0.0;
  double error_rhs = 0.0;
  std::string error;  // nonempty when the trial failed; other fields best-effort

  bool operator==(const TrialRecord&) const = default;
};

struct SweepConfig {
  EnsembleSpec ensemble;  // template; per-trial seed filled in by the sweep
  std::vector<std::size_t> k_values;
  std::vector<double> rho_values;
  std::vector<double> noise_values;
  std::size_t trials = 0;  // per combination
  std::uint64_t master_seed = 0;
  std::vector<pursuit::SelectionPolicy> policies;
  ValueModel value_model = ValueModel::UnitSigns;
  double a_min = 1.0;
  std::string axis;  // "k", "rho" or "noise"; used by plotdata
};

/// Flat key-value text: `key = value`, '#' comments. Unknown keys and
/// malformed values raise ConfigError.
SweepConfig parse_sweep_config(const std::string& text);

struct SweepOutput {
  std::vector<TrialRecord> records;
  std::string summary_json;
};

/// One record per (trial, policy). Per-trial failures are recorded in the
/// row's error field and the sweep continues. Deterministic given the config.
SweepOutput run_sweep(const SweepConfig& config, std::ostream* progress = nullptr);

// ---- report emission ----------------------------------------------------------

std::string records_to_csv(const std::vector<TrialRecord>& records);
std::vector<TrialRecord> records_from_csv(const std::string& csv);
std::string records_to_json(const std::vector<TrialRecord>& records);

/// Two-column table (axis value, support-recovery rate) over the chosen axis.
/// Throws EmptyInput when there are no records.
std::string plotdata(const std::vector<TrialRecord>& records, const std::string& axis);

enum class ReportFormat { Csv, Json, PlotData };

void emit_report(const std::vector<TrialRecord>& records, ReportFormat format,
                 const std::string& path, const std::string& axis = "");

}  // namespace greedycs::harness
