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

#include "greedycs/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "greedycs/coherence.hpp"
#include "greedycs/errors.hpp"
#include "greedycs/guarantees.hpp"
#include "greedycs/io.hpp"
#include "greedycs/kernels.hpp"
#include "greedycs/rng.hpp"
#include "greedycs/subsets.hpp"

namespace greedycs::harness {

namespace {

using nlohmann::json;

// Stream discipline for one trial: sub-seed 0 feeds the dictionary, 1 the
// sparse signal, 2 the noise vector.
constexpr std::uint64_t kDictStream = 0;
constexpr std::uint64_t kSignalStream = 1;
constexpr std::uint64_t kNoiseStream = 2;

DenseMatrix gaussian_matrix(std::size_t n, std::size_t d, std::uint64_t seed) {
  rng::Xoshiro256pp gen(seed);
  DenseMatrix m(n, d);
  for (std::size_t j = 0; j < d; ++j) {
    double* col = m.col(j);
    for (std::size_t i = 0; i < n; ++i) col[i] = gen.normal();
  }
  return m;
}

}  // namespace

Dictionary generate_dictionary(const EnsembleSpec& spec) {
  switch (spec.kind) {
    case EnsembleKind::GaussianNormalized: {
      if (spec.n < 1 || spec.d < 2)
        throw ConfigError("gaussian ensemble needs n >= 1, d >= 2");
      return normalize_columns(gaussian_matrix(spec.n, spec.d, spec.seed));
    }
    case EnsembleKind::PartialIdentityPerturbed: {
      if (spec.n < 1 || spec.d < 2)
        throw ConfigError("perturbed-identity ensemble needs n >= 1, d >= 2");
      if (spec.d > spec.n)
        throw ConfigError(
            "perturbed-identity ensemble needs d <= n (columns perturb distinct "
            "identity columns)");
      if (spec.perturbation_scale < 0.0)
        throw ConfigError("perturbation scale must be >= 0");
      DenseMatrix m(spec.n, spec.d);
      if (spec.perturbation_scale > 0.0)
        m = gaussian_matrix(spec.n, spec.d, spec.seed);
      for (std::size_t j = 0; j < spec.d; ++j) {
        double* col = m.col(j);
        kernels::scalar::scal(spec.perturbation_scale, col, spec.n);
        col[j] += 1.0;
      }
      return normalize_columns(m);
    }
    case EnsembleKind::FromFile: {
      DenseMatrix m = io::read_matrix(spec.path);
      if (spec.renormalize) return normalize_columns(m);
      return Dictionary::from_matrix(std::move(m), kFileNormTol);
    }
  }
  throw ConfigError("unknown ensemble kind");
}

SparseVector generate_sparse_signal(std::size_t d, std::size_t k, std::uint64_t seed,
                                    ValueModel model, double a_min) {
  if (k < 1 || k > d)
    throw InvalidSparsity("generate_sparse_signal: needs 1 <= k <= d");
  if (model == ValueModel::MinMagnitude && !(a_min > 0.0))
    throw InvalidSparsity("generate_sparse_signal: a_min must be > 0");

  rng::Xoshiro256pp gen(seed);
  // Partial Fisher-Yates: first k entries of a shuffled [0, d).
  std::vector<std::size_t> pool(d);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i)
    std::swap(pool[i], pool[i + gen.bounded(d - i)]);
  std::vector<std::size_t> support(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(support.begin(), support.end());

  std::vector<double> values(k);
  for (std::size_t i = 0; i < k; ++i) {
    switch (model) {
      case ValueModel::UnitSigns:
        values[i] = (gen.next() & 1) ? 1.0 : -1.0;
        break;
      case ValueModel::GaussianMagnitudes: {
        double v;
        do {
          v = gen.normal();
        } while (v == 0.0);
        values[i] = v;
        break;
      }
      case ValueModel::MinMagnitude: {
        const double mag = a_min * (1.0 + gen.uniform01());
        values[i] = (gen.next() & 1) ? mag : -mag;
        break;
      }
    }
  }
  return SparseVector::from_support(d, std::move(support), std::move(values));
}

std::vector<double> generate_noise(std::size_t n, std::uint64_t seed, double norm) {
  std::vector<double> w(n, 0.0);
  if (norm == 0.0) return w;
  if (norm < 0.0) throw ConfigError("noise norm must be >= 0");
  rng::Xoshiro256pp gen(seed);
  double len = 0.0;
  do {
    for (std::size_t i = 0; i < n; ++i) w[i] = gen.normal();
    len = std::sqrt(kernels::scalar::sumsq(w.data(), n));
  } while (len == 0.0);
  kernels::scalar::scal(norm / len, w.data(), n);
  return w;
}

// ---- sweep configuration -------------------------------------------------------

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_cfg_double(const std::string& key, const std::string& value) {
  double v;
  if (!io::parse_double(value, v))
    throw ConfigError("config key '" + key + "': bad number '" + value + "'");
  return v;
}

std::uint64_t parse_cfg_u64(const std::string& key, const std::string& value) {
  std::uint64_t v{};
  auto res = std::from_chars(value.data(), value.data() + value.size(), v);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
    throw ConfigError("config key '" + key + "': bad integer '" + value + "'");
  return v;
}

bool parse_cfg_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError("config key '" + key + "': bad boolean '" + value + "'");
}

pursuit::SelectionPolicy parse_policy(const std::string& name) {
  if (name == "max") return pursuit::SelectionPolicy::MaxCorrelation;
  if (name == "first") return pursuit::SelectionPolicy::FirstAboveThreshold;
  if (name == "min") return pursuit::SelectionPolicy::MinAboveThreshold;
  throw ConfigError("unknown policy '" + name + "' (use max|first|min)");
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& text) {
  SweepConfig cfg;
  cfg.rho_values = {1.0};
  cfg.noise_values = {0.0};
  cfg.policies = {pursuit::SelectionPolicy::MaxCorrelation};

  bool have_ensemble = false, have_k = false, have_trials = false, have_seed = false;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = line;
    if (auto pos = t.find('#'); pos != std::string::npos) t = t.substr(0, pos);
    // trim
    auto b = t.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = t.find_last_not_of(" \t\r");
    t = t.substr(b, e - b + 1);
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected 'key = value'");
    auto trim = [](std::string s) {
      auto sb = s.find_first_not_of(" \t");
      if (sb == std::string::npos) return std::string{};
      auto se = s.find_last_not_of(" \t");
      return s.substr(sb, se - sb + 1);
    };
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": empty key or value");

    if (key == "ensemble") {
      if (value == "gaussian")
        cfg.ensemble.kind = EnsembleKind::GaussianNormalized;
      else if (value == "perturbed-identity")
        cfg.ensemble.kind = EnsembleKind::PartialIdentityPerturbed;
      else if (value == "from-file")
        cfg.ensemble.kind = EnsembleKind::FromFile;
      else
        throw ConfigError("unknown ensemble '" + value + "'");
      have_ensemble = true;
    } else if (key == "matrix_file") {
      cfg.ensemble.path = value;
    } else if (key == "renormalize") {
      cfg.ensemble.renormalize = parse_cfg_bool(key, value);
    } else if (key == "n") {
      cfg.ensemble.n = parse_cfg_u64(key, value);
    } else if (key == "d") {
      cfg.ensemble.d = parse_cfg_u64(key, value);
    } else if (key == "scale") {
      cfg.ensemble.perturbation_scale = parse_cfg_double(key, value);
    } else if (key == "k") {
      cfg.k_values.clear();
      for (const auto& item : split_list(value))
        cfg.k_values.push_back(parse_cfg_u64(key, item));
      have_k = true;
    } else if (key == "rho") {
      cfg.rho_values.clear();
      for (const auto& item : split_list(value)) {
        const double r = parse_cfg_double(key, item);
        if (!(r > 0.0 && r <= 1.0)) throw ConfigError("rho must lie in (0, 1]");
        cfg.rho_values.push_back(r);
      }
    } else if (key == "noise") {
      cfg.noise_values.clear();
      for (const auto& item : split_list(value)) {
        const double w = parse_cfg_double(key, item);
        if (w < 0.0) throw ConfigError("noise must be >= 0");
        cfg.noise_values.push_back(w);
      }
    } else if (key == "trials") {
      cfg.trials = parse_cfg_u64(key, value);
      have_trials = true;
    } else if (key == "seed") {
      cfg.master_seed = parse_cfg_u64(key, value);
      have_seed = true;
    } else if (key == "policies") {
      cfg.policies.clear();
      for (const auto& item : split_list(value))
        cfg.policies.push_back(parse_policy(item));
    } else if (key == "value_model") {
      if (value == "unit-signs")
        cfg.value_model = ValueModel::UnitSigns;
      else if (value == "gaussian")
        cfg.value_model = ValueModel::GaussianMagnitudes;
      else if (value == "min-magnitude")
        cfg.value_model = ValueModel::MinMagnitude;
      else
        throw ConfigError("unknown value_model '" + value + "'");
    } else if (key == "a_min") {
      cfg.a_min = parse_cfg_double(key, value);
      if (!(cfg.a_min > 0.0)) throw ConfigError("a_min must be > 0");
    } else if (key == "axis") {
      if (value != "k" && value != "rho" && value != "noise")
        throw ConfigError("axis must be one of k|rho|noise");
      cfg.axis = value;
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }

  if (!have_ensemble) throw ConfigError("config missing 'ensemble'");
  if (!have_k) throw ConfigError("config missing 'k'");
  if (!have_trials || cfg.trials < 1)
    throw ConfigError("config needs 'trials' >= 1");
  if (!have_seed) throw ConfigError("config missing 'seed'");
  if (cfg.ensemble.kind == EnsembleKind::FromFile && cfg.ensemble.path.empty())
    throw ConfigError("from-file ensemble needs 'matrix_file'");
  if (cfg.ensemble.kind != EnsembleKind::FromFile) {
    if (cfg.ensemble.n < 1 || cfg.ensemble.d < 2)
      throw ConfigError("config needs n >= 1 and d >= 2");
    for (std::size_t k : cfg.k_values)
      if (k < 1 || k + 1 > cfg.ensemble.d)
        throw ConfigError("config needs 1 <= k <= d-1");
  }
  if (cfg.policies.empty()) throw ConfigError("config needs at least one policy");
  return cfg;
}

// ---- sweep execution -----------------------------------------------------------

SweepOutput run_sweep(const SweepConfig& cfg, std::ostream* progress) {
  SweepOutput out;
  const std::uint64_t total = cfg.k_values.size() * cfg.rho_values.size() *
                              cfg.noise_values.size() * cfg.trials;
  std::uint64_t global_trial = 0;

  for (std::size_t k : cfg.k_values) {
    for (double rho : cfg.rho_values) {
      for (double noise : cfg.noise_values) {
        for (std::size_t t = 0; t < cfg.trials; ++t, ++global_trial) {
          if (progress && global_trial % 100 == 0)
            *progress << "[sweep] trial " << global_trial << "/" << total << "\n";

          TrialRecord base;
          base.trial = global_trial;
          base.k = k;
          base.rho = rho;
          base.scale = cfg.ensemble.perturbation_scale;
          base.seed = rng::derive_seed(cfg.master_seed, global_trial);
          base.n = cfg.ensemble.n;
          base.d = cfg.ensemble.d;

          try {
            EnsembleSpec spec = cfg.ensemble;
            spec.seed = rng::derive_seed(base.seed, kDictStream);
            const Dictionary dict = generate_dictionary(spec);
            base.n = dict.rows();
            base.d = dict.cols();
            if (k + 1 > dict.cols())
              throw ConfigError("trial k exceeds d-1 for the loaded dictionary");

            const SparseVector a = generate_sparse_signal(
                dict.cols(), k, rng::derive_seed(base.seed, kSignalStream),
                cfg.value_model, cfg.a_min);
            std::vector<double> w;
            if (noise > 0.0)
              w = generate_noise(dict.rows(),
                                 rng::derive_seed(base.seed, kNoiseStream), noise);
            const Observation obs =
                synthesize(dict, a, w.empty() ? nullptr : &w);
            base.epsilon = obs.epsilon;

            base.M = coherence::mutual_coherence(dict);
            base.nu_k = coherence::global_2_coherence(dict, k);
            const auto thm1 =
                guarantees::theorem1_check(dict, a, rho, obs.epsilon);
            base.delta_k = thm1.metrics.at("delta_k").value;
            base.delta_mode = guarantees::to_string(thm1.metrics.at("delta_k").mode);
            base.thm1 = thm1.satisfied ? 1 : 0;
            base.thm1_conservative = thm1.conservative ? 1 : 0;

            try {
              const auto cor1 = guarantees::corollary1_check(dict, k, rho);
              base.cor1a = cor1[0].satisfied ? 1 : 0;
              base.cor1b = cor1[1].satisfied ? 1 : 0;
              base.cor1c = cor1[2].satisfied ? 1 : 0;
              const auto cmp = guarantees::compare_with_prior_bound(dict, k);
              base.cor2 = cmp.new_bound ? 1 : 0;
              base.prior = cmp.prior_bound ? 1 : 0;
              base.delta_k1 = cmp.delta_k1;
            } catch (const BudgetExceeded&) {
              // flags stay -1: metric not evaluated at this size
            }

            for (auto policy : cfg.policies) {
              TrialRecord rec = base;
              rec.policy = pursuit::to_string(policy);
              try {
                pursuit::PursuitConfig pc;
                pc.rho = rho;
                pc.epsilon = obs.epsilon;
                pc.policy = policy;
                const auto result = pursuit::womp(dict, obs, pc);
                std::vector<std::size_t> recovered = result.support_trajectory;
                std::sort(recovered.begin(), recovered.end());
                rec.support_match = recovered == a.support() ? 1 : 0;
                rec.iterations = result.iterations;
                rec.final_residual = result.residual_norms.back();
                rec.stop_reason = pursuit::to_string(result.stop_reason);
                if (rec.support_match == 1) {
                  try {
                    const auto eb = guarantees::error_bound_check(dict, a, result,
                                                                  obs.epsilon);
                    rec.error_bound_holds = eb.holds ? 1 : 0;
                    rec.error_lhs = eb.lhs;
                    rec.error_rhs = eb.rhs;
                  } catch (const NumericalError&) {
                    // degenerate delta or over budget: leave -1
                  }
                }
              } catch (const Error& e) {
                rec.error = e.what();
              }
              out.records.push_back(std::move(rec));
            }
          } catch (const Error& e) {
            for (auto policy : cfg.policies) {
              TrialRecord rec = base;
              rec.policy = pursuit::to_string(policy);
              rec.error = e.what();
              out.records.push_back(std::move(rec));
            }
          }
        }
      }
    }
  }

  // Summary: recovery rates conditioned on each guarantee flag. Corollary
  // statements address OMP, i.e. the rho = 1 rows.
  json summary;
  summary["trials"] = total;
  summary["records"] = out.records.size();
  auto rate_block = [&](auto pred) {
    std::uint64_t count = 0, recovered = 0;
    for (const auto& r : out.records) {
      if (!r.error.empty() || !pred(r)) continue;
      ++count;
      if (r.support_match == 1) ++recovered;
    }
    json j;
    j["records"] = count;
    j["recovered"] = recovered;
    if (count > 0)
      j["rate"] = static_cast<double>(recovered) / static_cast<double>(count);
    else
      j["rate"] = nullptr;
    return j;
  };
  summary["overall"] = rate_block([](const TrialRecord&) { return true; });
  summary["conditions"]["theorem1"] =
      rate_block([](const TrialRecord& r) { return r.thm1 == 1; });
  summary["conditions"]["corollary1a"] =
      rate_block([](const TrialRecord& r) { return r.cor1a == 1; });
  summary["conditions"]["corollary1b"] =
      rate_block([](const TrialRecord& r) { return r.cor1b == 1; });
  summary["conditions"]["corollary1c"] =
      rate_block([](const TrialRecord& r) { return r.cor1c == 1; });
  summary["conditions"]["corollary2"] = rate_block(
      [](const TrialRecord& r) { return r.cor2 == 1 && r.rho == 1.0; });
  summary["conditions"]["prior_bound"] = rate_block(
      [](const TrialRecord& r) { return r.prior == 1 && r.rho == 1.0; });
  out.summary_json = summary.dump(2) + "\n";
  return out;
}

// ---- report emission -----------------------------------------------------------

namespace {

constexpr const char* kCsvHeader =
    "trial,n,d,k,rho,epsilon,scale,seed,policy,M,nu_k,delta_k,delta_mode,"
    "delta_k1,thm1,thm1_conservative,cor1a,cor1b,cor1c,cor2,prior,"
    "support_match,iterations,final_residual,stop_reason,error_bound_holds,"
    "error_lhs,error_rhs,error";

std::string int_str(long long v) { return std::to_string(v); }

template <typename T>
T parse_int_field(const std::string& s) {
  T v{};
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw ParseError("bad integer field '" + s + "'", 0, 0);
  return v;
}

double parse_double_field(const std::string& s) {
  double v;
  if (!io::parse_double(s, v)) throw ParseError("bad double field '" + s + "'", 0, 0);
  return v;
}

}  // namespace

std::string records_to_csv(const std::vector<TrialRecord>& records) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : records) {
    std::vector<std::string> fields = {
        std::to_string(r.trial),
        std::to_string(r.n),
        std::to_string(r.d),
        std::to_string(r.k),
        io::format_double(r.rho),
        io::format_double(r.epsilon),
        io::format_double(r.scale),
        std::to_string(r.seed),
        r.policy,
        io::format_double(r.M),
        io::format_double(r.nu_k),
        io::format_double(r.delta_k),
        r.delta_mode,
        io::format_double(r.delta_k1),
        int_str(r.thm1),
        int_str(r.thm1_conservative),
        int_str(r.cor1a),
        int_str(r.cor1b),
        int_str(r.cor1c),
        int_str(r.cor2),
        int_str(r.prior),
        int_str(r.support_match),
        std::to_string(r.iterations),
        io::format_double(r.final_residual),
        r.stop_reason,
        int_str(r.error_bound_holds),
        io::format_double(r.error_lhs),
        io::format_double(r.error_rhs),
        r.error,
    };
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += io::csv_quote(fields[i]);
    }
    out += '\n';
  }
  return out;
}

std::vector<TrialRecord> records_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw ParseError("unexpected CSV header", 1, 1);
  std::vector<TrialRecord> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = io::csv_split_line(line);
    if (f.size() != 29)
      throw ParseError("expected 29 fields, got " + std::to_string(f.size()), lineno,
                       1);
    TrialRecord r;
    std::size_t i = 0;
    r.trial = parse_int_field<std::uint64_t>(f[i++]);
    r.n = parse_int_field<std::size_t>(f[i++]);
    r.d = parse_int_field<std::size_t>(f[i++]);
    r.k = parse_int_field<std::size_t>(f[i++]);
    r.rho = parse_double_field(f[i++]);
    r.epsilon = parse_double_field(f[i++]);
    r.scale = parse_double_field(f[i++]);
    r.seed = parse_int_field<std::uint64_t>(f[i++]);
    r.policy = f[i++];
    r.M = parse_double_field(f[i++]);
    r.nu_k = parse_double_field(f[i++]);
    r.delta_k = parse_double_field(f[i++]);
    r.delta_mode = f[i++];
    r.delta_k1 = parse_double_field(f[i++]);
    r.thm1 = parse_int_field<int>(f[i++]);
    r.thm1_conservative = parse_int_field<int>(f[i++]);
    r.cor1a = parse_int_field<int>(f[i++]);
    r.cor1b = parse_int_field<int>(f[i++]);
    r.cor1c = parse_int_field<int>(f[i++]);
    r.cor2 = parse_int_field<int>(f[i++]);
    r.prior = parse_int_field<int>(f[i++]);
    r.support_match = parse_int_field<int>(f[i++]);
    r.iterations = parse_int_field<std::size_t>(f[i++]);
    r.final_residual = parse_double_field(f[i++]);
    r.stop_reason = f[i++];
    r.error_bound_holds = parse_int_field<int>(f[i++]);
    r.error_lhs = parse_double_field(f[i++]);
    r.error_rhs = parse_double_field(f[i++]);
    r.error = f[i++];
    out.push_back(std::move(r));
  }
  return out;
}

std::string records_to_json(const std::vector<TrialRecord>& records) {
  json arr = json::array();
  for (const auto& r : records) {
    json j;
    j["trial"] = r.trial;
    j["n"] = r.n;
    j["d"] = r.d;
    j["k"] = r.k;
    j["rho"] = r.rho;
    j["epsilon"] = r.epsilon;
    j["scale"] = r.scale;
    j["seed"] = r.seed;
    j["policy"] = r.policy;
    j["M"] = r.M;
    j["nu_k"] = r.nu_k;
    j["delta_k"] = r.delta_k;
    j["delta_mode"] = r.delta_mode;
    j["delta_k1"] = r.delta_k1;
    j["thm1"] = r.thm1;
    j["thm1_conservative"] = r.thm1_conservative;
    j["cor1a"] = r.cor1a;
    j["cor1b"] = r.cor1b;
    j["cor1c"] = r.cor1c;
    j["cor2"] = r.cor2;
    j["prior"] = r.prior;
    j["support_match"] = r.support_match;
    j["iterations"] = r.iterations;
    j["final_residual"] = r.final_residual;
    j["stop_reason"] = r.stop_reason;
    j["error_bound_holds"] = r.error_bound_holds;
    j["error_lhs"] = r.error_lhs;
    j["error_rhs"] = r.error_rhs;
    j["error"] = r.error;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string plotdata(const std::vector<TrialRecord>& records,
                     const std::string& axis) {
  if (records.empty()) throw EmptyInput("plotdata needs at least one record");
  if (axis != "k" && axis != "rho" && axis != "noise")
    throw ConfigError("plotdata axis must be one of k|rho|noise");

  auto value_of = [&axis](const TrialRecord& r) {
    if (axis == "k") return static_cast<double>(r.k);
    if (axis == "rho") return r.rho;
    return r.epsilon;
  };
  std::vector<double> keys;
  for (const auto& r : records) keys.push_back(value_of(r));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  std::string out = axis + ",success_rate\n";
  for (double key : keys) {
    std::uint64_t count = 0, recovered = 0;
    for (const auto& r : records) {
      if (value_of(r) != key || !r.error.empty()) continue;
      ++count;
      if (r.support_match == 1) ++recovered;
    }
    const double rate =
        count ? static_cast<double>(recovered) / static_cast<double>(count) : 0.0;
    out += io::format_double(key) + "," + io::format_double(rate) + "\n";
  }
  return out;
}

void emit_report(const std::vector<TrialRecord>& records, ReportFormat format,
                 const std::string& path, const std::string& axis) {
  switch (format) {
    case ReportFormat::Csv:
      io::write_file(path, records_to_csv(records));
      return;
    case ReportFormat::Json:
      io::write_file(path, records_to_json(records));
      return;
    case ReportFormat::PlotData:
      io::write_file(path, plotdata(records, axis));
      return;
  }
  throw ConfigError("unknown report format");
}

}  // namespace greedycs::harness
