#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "pathlab/config.hpp"
#include "pathlab/processes.hpp"

namespace pathlab {

enum class ExperimentKind { QvConvergence, Replicate, StrategyCompare, CovDecompose, Tails, Generate };

// Fully resolved run description. Unknown keys are rejected at parse time;
// every default is materialized so the emitted manifest reruns the same
// experiment byte-for-byte.
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::QvConvergence;

  // scheme
  double horizon = 1.0;
  int n_levels = 5;
  int base_intervals = 256;

  // ensemble
  int n_seeds = 20;
  std::uint64_t master_seed = 12345;

  // generator
  std::string generator_kind = "brownian";  // line|brownian|fbm|fou|icp|sicp|model
  double hurst = 0.75;
  double theta = 1.0;
  double lambda = 5.0;
  double alpha = 3.0;
  double epsilon = 0.2;
  double z_scale = 0.1;
  double drift = 0.0;
  std::string z_kind = "none";  // none|fbm|fou|icp|sicp
  std::string sigma = "linear:1.0";
  double s0 = 1.0;

  // functional / option selector
  std::string functional = "continuous-average";  // continuous-average|discrete-average|
                                                  // discrete-average-raw|power:2|geometric-asian
  int n_fixings = 8;
  double strike = 1.0;
  double vol = 0.2;

  // tolerances
  double replication_rel = 1e-3;
  double replication_abs = 1e-4;
  double compare_tol = 1e-12;
  double tail_rel_tol = 0.15;
  double hill_fraction = 0.05;  // top fraction used by the tail estimator

  // tails experiment
  long long min_jumps = 100000;

  // output
  std::string checkpoints = "final";  // final|all
  int format_version = 1;

  static ExperimentConfig from_keyvalues(const KeyValues& kv);
  KeyValues to_keyvalues() const;

  GeneratorConfig generator_config(const PartitionScheme& scheme, std::uint64_t seed) const;
  PartitionScheme scheme() const;
};

// exit-status contract: 0 all assertions pass, 1 an assertion failed,
// 2 invalid config (no artifacts), 3 generation/evaluation failure
struct RunResult {
  int exit_code = 0;
  std::string summary;
};

RunResult run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);

std::string csv_schemas_text();

}  // namespace pathlab
