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

// greedy-cs command line. Subcommands: gen, coherence, ric, verify, recover,
// sweep. Results go to stdout or the requested files; diagnostics go to
// stderr. Exit codes: 0 success, 1 usage/config error, 2 numerical failure,
// 3 invariant violation detected.

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "greedycs/coherence.hpp"
#include "greedycs/dictionary.hpp"
#include "greedycs/errors.hpp"
#include "greedycs/guarantees.hpp"
#include "greedycs/harness.hpp"
#include "greedycs/io.hpp"
#include "greedycs/pursuit.hpp"
#include "greedycs/report_json.hpp"

namespace {

using namespace greedycs;

bool g_quiet = false;

void note(const std::string& msg) {
  if (!g_quiet) std::cerr << msg << "\n";
}

/// GREEDY_CS_SEED overrides any seed given on the command line or in a
/// config file.
bool env_seed(std::uint64_t& seed) {
  const char* env = std::getenv("GREEDY_CS_SEED");
  if (!env) return false;
  std::string s(env);
  std::uint64_t v{};
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw ConfigError("GREEDY_CS_SEED is not an unsigned integer: '" + s + "'");
  seed = v;
  return true;
}

Dictionary load_dictionary(const std::string& path, bool renormalize) {
  harness::EnsembleSpec spec;
  spec.kind = harness::EnsembleKind::FromFile;
  spec.path = path;
  spec.renormalize = renormalize;
  return harness::generate_dictionary(spec);
}

SparseVector load_signal(const std::string& path, std::size_t d) {
  const std::vector<double> dense = io::read_vector(path);
  if (dense.size() != d)
    throw DimensionMismatch("signal file has " + std::to_string(dense.size()) +
                            " entries, dictionary has " + std::to_string(d) +
                            " atoms");
  return SparseVector::from_dense(dense);
}

int run_gen(const std::string& kind, std::size_t n, std::size_t d, double scale,
            std::uint64_t seed, const std::string& out) {
  harness::EnsembleSpec spec;
  if (kind == "gaussian") {
    spec.kind = harness::EnsembleKind::GaussianNormalized;
  } else if (kind == "perturbed-identity") {
    spec.kind = harness::EnsembleKind::PartialIdentityPerturbed;
  } else {
    throw ConfigError("--kind must be gaussian or perturbed-identity");
  }
  spec.n = n;
  spec.d = d;
  spec.perturbation_scale = scale;
  env_seed(seed);
  spec.seed = seed;
  const Dictionary dict = harness::generate_dictionary(spec);
  io::write_matrix(out, dict.matrix());
  note("[gen] wrote " + std::to_string(n) + "x" + std::to_string(d) + " " + kind +
       " dictionary (seed " + std::to_string(seed) + ") to " + out);
  return 0;
}

int run_coherence(const std::string& matrix, std::size_t k, bool brute,
                  bool renormalize) {
  const Dictionary dict = load_dictionary(matrix, renormalize);
  const double m = coherence::mutual_coherence(dict);
  double nu = coherence::global_2_coherence(dict, k);
  int exit_code = 0;
  if (brute) {
    const double b1 = coherence::global_2_coherence_brute(dict, k);
    const double b2 = coherence::global_2_coherence_brute_gram(dict, k);
    if (std::abs(b1 - nu) > 1e-12 || std::abs(b2 - nu) > 1e-12) {
      std::cerr << "[coherence] oracle mismatch: fast " << io::format_double(nu)
                << ", brute " << io::format_double(b1) << ", gram "
                << io::format_double(b2) << "\n";
      exit_code = 3;
    }
    nu = b1;
  }
  std::cout << "{\n  \"M\": " << io::format_double(m)
            << ",\n  \"k\": " << k
            << ",\n  \"nu_k\": " << io::format_double(nu) << "\n}\n";
  return exit_code;
}

int run_ric(const std::string& matrix, std::size_t k, bool exact, bool bounds,
            bool renormalize) {
  const Dictionary dict = load_dictionary(matrix, renormalize);
  if (exact && bounds) throw ConfigError("--exact and --bounds are exclusive");
  if (bounds && k < 2)
    throw ConfigError("--bounds needs k >= 2 (the sandwich uses nu_{k-1})");
  if (!bounds) {
    try {
      const double delta = coherence::ric_exact(dict, k);
      std::cout << "{\n  \"k\": " << k
                << ",\n  \"delta_k\": " << io::format_double(delta) << "\n}\n";
      return 0;
    } catch (const BudgetExceeded& e) {
      if (exact) throw;
      note(std::string("[ric] ") + e.what() + "; reporting coherence bounds");
    }
  }
  // Sandwich from the coherence chain: nu_{k-1} below, the best of the nu/M/
  // Gershgorin bounds above.
  const double lower = coherence::global_2_coherence(dict, k - 1);
  const double upper = coherence::ric_upper_bound(dict, k);
  std::cout << "{\n  \"k\": " << k << ",\n  \"lower\": " << io::format_double(lower)
            << ",\n  \"upper\": " << io::format_double(upper) << "\n}\n";
  return 0;
}

int run_verify(const std::string& what, const std::string& matrix, std::size_t k,
               double rho, double eps, const std::string& signal,
               const std::string& noise, bool renormalize) {
  const Dictionary dict = load_dictionary(matrix, renormalize);
  if (what == "lemma1") {
    const auto chain = coherence::lemma1_chain(dict, k);
    std::cout << report_json::to_json(chain);
    if (!chain.holds) {
      std::cerr << "[verify] lemma1 chain violated\n";
      return 3;
    }
    return 0;
  }
  if (what == "lemma2") {
    if (signal.empty()) throw ConfigError("verify lemma2 needs --signal");
    const SparseVector a = load_signal(signal, dict.cols());
    std::vector<double> w;
    if (!noise.empty()) {
      w = io::read_vector(noise);
      if (w.size() != dict.rows())
        throw DimensionMismatch("noise file length != measurement dimension");
    }
    const auto bounds = guarantees::lemma2_bounds(dict, a, w);
    std::cout << report_json::to_json(bounds);
    if (!bounds.upper_holds || !bounds.lower_holds) {
      std::cerr << "[verify] lemma2 bound violated\n";
      return 3;
    }
    return 0;
  }
  if (what == "theorem1") {
    if (signal.empty()) throw ConfigError("verify theorem1 needs --signal");
    const SparseVector a = load_signal(signal, dict.cols());
    std::cout << report_json::to_json(guarantees::theorem1_check(dict, a, rho, eps));
    return 0;
  }
  if (what == "corollary1") {
    const auto reports = guarantees::corollary1_check(dict, k, rho);
    std::cout << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::string body = report_json::to_json(reports[i]);
      if (!body.empty() && body.back() == '\n') body.pop_back();
      std::cout << body << (i + 1 < reports.size() ? ",\n" : "\n");
    }
    std::cout << "]\n";
    return 0;
  }
  if (what == "corollary2") {
    std::cout << report_json::to_json(guarantees::corollary2_check(dict, k));
    return 0;
  }
  if (what == "compare") {
    const auto cmp = guarantees::compare_with_prior_bound(dict, k);
    std::cout << report_json::to_json(cmp, k);
    // prior => new is a theorem; a counterexample means broken metrics.
    if (cmp.prior_bound && !cmp.new_bound) {
      std::cerr << "[verify] prior bound held but new bound failed\n";
      return 3;
    }
    return 0;
  }
  throw ConfigError("unknown verify target '" + what + "'");
}

int run_recover(const std::string& matrix, const std::string& obs_path, double rho,
                double eps, const std::string& policy, std::size_t max_iter,
                bool renormalize) {
  const Dictionary dict = load_dictionary(matrix, renormalize);
  Observation obs;
  obs.f = io::read_vector(obs_path);
  obs.epsilon = eps;
  if (obs.f.size() != dict.rows())
    throw DimensionMismatch("observation length != measurement dimension");

  pursuit::PursuitConfig config;
  config.rho = rho;
  config.epsilon = eps;
  config.max_iterations = max_iter;
  if (policy == "max")
    config.policy = pursuit::SelectionPolicy::MaxCorrelation;
  else if (policy == "first")
    config.policy = pursuit::SelectionPolicy::FirstAboveThreshold;
  else if (policy == "min")
    config.policy = pursuit::SelectionPolicy::MinAboveThreshold;
  else
    throw ConfigError("--policy must be max, first or min");

  std::cout << report_json::to_json(pursuit::womp(dict, obs, config));
  return 0;
}

int run_sweep(const std::string& config_path, const std::string& out_csv,
              const std::string& out_summary, const std::string& out_plot) {
  harness::SweepConfig cfg = harness::parse_sweep_config(io::read_file(config_path));
  env_seed(cfg.master_seed);
  if (!out_plot.empty() && cfg.axis.empty())
    throw ConfigError("--out-plot needs an 'axis' key in the config");

  const auto out = harness::run_sweep(cfg, g_quiet ? nullptr : &std::cerr);
  io::write_file(out_csv, harness::records_to_csv(out.records));
  note("[sweep] wrote " + std::to_string(out.records.size()) + " records to " +
       out_csv);
  if (!out_summary.empty()) io::write_file(out_summary, out.summary_json);
  if (!out_plot.empty())
    io::write_file(out_plot, harness::plotdata(out.records, cfg.axis));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"greedy-cs: weak orthogonal matching pursuit with certified "
               "dictionary metrics"};
  app.require_subcommand(1);
  app.add_flag("--quiet", g_quiet, "suppress progress lines on stderr");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a dictionary file");
  std::string gen_kind;
  std::size_t gen_n = 0, gen_d = 0;
  double gen_scale = 0.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--kind", gen_kind, "gaussian | perturbed-identity")->required();
  gen->add_option("--n", gen_n, "rows (measurement dimension)")->required();
  gen->add_option("--d", gen_d, "columns (atoms)")->required();
  gen->add_option("--scale", gen_scale, "perturbation scale");
  gen->add_option("--seed", gen_seed, "generator seed")->required();
  gen->add_option("--out", gen_out, "output matrix file")->required();

  // coherence
  auto* coh = app.add_subcommand("coherence", "mutual and global 2-coherence");
  std::string coh_matrix;
  std::size_t coh_k = 1;
  bool coh_brute = false, coh_renorm = false;
  coh->add_option("--matrix", coh_matrix, "dictionary file")->required();
  coh->add_option("--k", coh_k, "coherence order")->required();
  coh->add_flag("--brute", coh_brute, "use (and cross-check) the enumeration oracle");
  coh->add_flag("--renormalize", coh_renorm, "rescale off-norm file columns");

  // ric
  auto* ric = app.add_subcommand("ric", "restricted isometry constant");
  std::string ric_matrix;
  std::size_t ric_k = 1;
  bool ric_exact_flag = false, ric_bounds_flag = false, ric_renorm = false;
  ric->add_option("--matrix", ric_matrix, "dictionary file")->required();
  ric->add_option("--k", ric_k, "RIP order")->required();
  ric->add_flag("--exact", ric_exact_flag, "require exact enumeration");
  ric->add_flag("--bounds", ric_bounds_flag, "report the coherence sandwich only");
  ric->add_flag("--renormalize", ric_renorm, "rescale off-norm file columns");

  // verify
  auto* verify = app.add_subcommand("verify", "check a lemma/theorem on an instance");
  std::string verify_what, verify_matrix, verify_signal, verify_noise;
  std::size_t verify_k = 2;
  double verify_rho = 1.0, verify_eps = 0.0;
  bool verify_renorm = false;
  verify->add_option("what", verify_what,
                     "lemma1|lemma2|theorem1|corollary1|corollary2|compare")
      ->required();
  verify->add_option("--matrix", verify_matrix, "dictionary file")->required();
  verify->add_option("--k", verify_k, "order / sparsity");
  verify->add_option("--rho", verify_rho, "weak parameter");
  verify->add_option("--eps", verify_eps, "noise level");
  verify->add_option("--signal", verify_signal, "dense sparse-signal file");
  verify->add_option("--noise", verify_noise, "noise vector file (lemma2)");
  verify->add_flag("--renormalize", verify_renorm, "rescale off-norm file columns");

  // recover
  auto* rec = app.add_subcommand("recover", "run WOMP on an observation");
  std::string rec_matrix, rec_obs, rec_policy = "max";
  double rec_rho = 1.0, rec_eps = 0.0;
  std::size_t rec_max_iter = 0;
  bool rec_renorm = false;
  rec->add_option("--matrix", rec_matrix, "dictionary file")->required();
  rec->add_option("--signal-obs", rec_obs, "observation vector file")->required();
  rec->add_option("--rho", rec_rho, "weak parameter in (0,1]")->required();
  rec->add_option("--eps", rec_eps, "stopping noise level")->required();
  rec->add_option("--policy", rec_policy, "max | first | min");
  rec->add_option("--max-iter", rec_max_iter, "iteration cap (default min(n,d))");
  rec->add_flag("--renormalize", rec_renorm, "rescale off-norm file columns");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run a randomized experiment sweep");
  std::string sweep_config, sweep_csv, sweep_summary, sweep_plot;
  sweep->add_option("--config", sweep_config, "sweep config file")->required();
  sweep->add_option("--out-csv", sweep_csv, "trial records CSV")->required();
  sweep->add_option("--out-summary", sweep_summary, "summary JSON file");
  sweep->add_option("--out-plot", sweep_plot, "plot-data file (needs config axis)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed())
      return run_gen(gen_kind, gen_n, gen_d, gen_scale, gen_seed, gen_out);
    if (coh->parsed()) return run_coherence(coh_matrix, coh_k, coh_brute, coh_renorm);
    if (ric->parsed())
      return run_ric(ric_matrix, ric_k, ric_exact_flag, ric_bounds_flag, ric_renorm);
    if (verify->parsed())
      return run_verify(verify_what, verify_matrix, verify_k, verify_rho, verify_eps,
                        verify_signal, verify_noise, verify_renorm);
    if (rec->parsed())
      return run_recover(rec_matrix, rec_obs, rec_rho, rec_eps, rec_policy,
                         rec_max_iter, rec_renorm);
    if (sweep->parsed())
      return run_sweep(sweep_config, sweep_csv, sweep_summary, sweep_plot);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
