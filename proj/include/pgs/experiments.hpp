#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgs/manifold.hpp"
#include "pgs/rng.hpp"
#include "pgs/solver.hpp"

namespace pgs {

/// Configuration of one experiment sweep. Defaults are overridden first by a
/// flat key=value config file, then by command-line flags.
struct ExperimentConfig {
  std::string subcommand;  ///< rayleigh | fundmat | assoc | selfcal | diagnostics

  Method method = Method::kPgs;
  StepsizeStrategy strategy = StepsizeStrategy::kLipschitzAdaptive;
  double tol_v = 1e-5;
  double tol_vt = 1e-3;
  int max_iters = 10000;

  std::uint64_t seed = 1;
  int runs = 20;
  int jobs = 1;
  std::string out_dir = ".";
  bool traces = false;   ///< also write trace_<run>.csv for the main solve
  bool timings = false;  ///< append a (non-reproducible) wall_time_s column

  // Scenario parameters; each subcommand documents which ones it reads.
  int dim = 9;                               ///< rayleigh: problem dimension
  double lambda = 0.01;                      ///< regularization weight (0 = none)
  double lambda2 = 0.02;                     ///< selfcal: spectral weight
  std::vector<double> delta_init = {0.1};    ///< rayleigh: initialization sweep
  std::vector<double> noise = {1.0};         ///< fundmat px / assoc pts / selfcal px sweep
  int m = 100;                               ///< fundmat pairs / assoc inliers
  int outliers = 5;                          ///< assoc
  double delta_d = 5.0;                      ///< assoc distance tolerance
  double delta_cam = 0.0;                    ///< selfcal orientation noise (rad)
  int early_stop = 1000;                     ///< selfcal nuclear early-stop cap
};

/// Applies `key=value` to a config. Throws ConfigError naming the field on
/// unknown keys or unparseable values. Keys match the CLI flag spellings.
void apply_config_entry(ExperimentConfig& cfg, const std::string& key,
                        const std::string& value);

/// Reads a flat key=value file ('#' comments, blank lines ignored).
void load_config_file(ExperimentConfig& cfg, const std::string& path);

/// Gaussian perturbation of every coordinate with standard deviation
/// delta_init, then normalization; delta_init = 0 returns x_ref unchanged.
/// Resamples in the measure-zero event of a vanishing perturbed vector.
SpherePoint init_from_sigma(const SpherePoint& x_ref, double delta_init, Rng& rng);
SpherePoint init_from_sigma(const SpherePoint& x_ref, double delta_init, std::uint64_t seed);

/// Runs the configured experiment: writes runs.csv, summary.csv and optional
/// trace_<run>.csv under cfg.out_dir. Deterministic given seed; individual
/// solver failures are recorded per run, never aborting the sweep. Throws
/// ConfigError / IoError on unusable configuration or output paths.
void run_experiment(const ExperimentConfig& cfg);

}  // namespace pgs
