// Experiment runner: seeded Monte-Carlo sweeps over the solver and the
// three applications, persisted as CSV for external plotting.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pgs/errors.hpp"
#include "pgs/experiments.hpp"

namespace {

/// Binds the shared experiment flags to one subcommand. Values parsed from
/// --config are applied before the command line so flags take precedence.
void add_common_options(CLI::App* cmd, pgs::ExperimentConfig& cfg, std::string& config_path) {
  cmd->add_option("--config", config_path, "flat key=value config file");
  cmd->add_option("--seed", cfg.seed, "base seed; run i uses seed + i");
  cmd->add_option("--runs", cfg.runs, "Monte-Carlo runs per swept value");
  cmd->add_option("--jobs", cfg.jobs, "worker pool size");
  cmd->add_option("--out", cfg.out_dir, "output directory");
  cmd->add_option("--method", [&cfg](const std::vector<std::string>& v) {
        pgs::apply_config_entry(cfg, "method", v.back());
        return true;
      }, "pgs|apgs|ampgs");
  cmd->add_option("--strategy", [&cfg](const std::vector<std::string>& v) {
        pgs::apply_config_entry(cfg, "strategy", v.back());
        return true;
      }, "lipschitz-fixed|lipschitz-adaptive|searched-fixed|searched-adaptive");
  cmd->add_option("--tol-v", cfg.tol_v, "stop tolerance on ||v||");
  cmd->add_option("--tol-vt", cfg.tol_vt, "stop tolerance on ||v/t||");
  cmd->add_option("--max-iters", cfg.max_iters, "iteration cap");
  cmd->add_option("--lambda", cfg.lambda, "regularization weight (0 = none)");
  cmd->add_option("--lambda2", cfg.lambda2, "spectral weight (selfcal)");
  cmd->add_option("--delta-init", cfg.delta_init, "initialization sweep values (rayleigh)")
      ->delimiter(',');
  cmd->add_option("--noise", cfg.noise, "noise sweep values")->delimiter(',');
  cmd->add_option("--dim", cfg.dim, "problem dimension (rayleigh)");
  cmd->add_option("--m", cfg.m, "correspondences (fundmat) / inliers (assoc)");
  cmd->add_option("--outliers", cfg.outliers, "outliers per cloud (assoc)");
  cmd->add_option("--delta-d", cfg.delta_d, "distance tolerance (assoc)");
  cmd->add_option("--delta-cam", cfg.delta_cam, "orientation noise, rad (selfcal)");
  cmd->add_option("--early-stop", cfg.early_stop, "nuclear early-stop cap (selfcal)");
  cmd->add_flag("--traces", cfg.traces, "write per-iteration trace_<run>.csv");
  cmd->add_flag("--timings", cfg.timings, "append a wall_time_s column (not reproducible)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proximal gradient on the sphere: experiment runner"};
  app.require_subcommand(1);

  struct Sub {
    CLI::App* cmd;
    pgs::ExperimentConfig cfg;
    std::string config_path;
  };
  std::vector<Sub> subs;
  const std::pair<const char*, const char*> kinds[] = {
      {"rayleigh", "random symmetric instances, initialization sweep"},
      {"fundmat", "two-view fundamental matrix estimation"},
      {"assoc", "correspondence association with l1 regularization"},
      {"selfcal", "linear self-calibration on critical motion scenes"},
      {"diagnostics", "proxy step-size mapping samples for the applications"},
  };
  subs.reserve(std::size(kinds));
  for (const auto& [name, desc] : kinds) {
    subs.push_back(Sub{app.add_subcommand(name, desc), pgs::ExperimentConfig{}, {}});
    subs.back().cfg.subcommand = name;
    add_common_options(subs.back().cmd, subs.back().cfg, subs.back().config_path);
  }

  // First pass only discovers --config; the file is applied and the command
  // line re-parsed on top, so flags override file entries.
  try {
    app.parse(argc, argv);
    for (auto& sub : subs) {
      if (!sub.cmd->parsed()) continue;
      if (!sub.config_path.empty()) {
        pgs::ExperimentConfig cfg;
        cfg.subcommand = sub.cfg.subcommand;
        pgs::load_config_file(cfg, sub.config_path);
        sub.cfg = cfg;
        sub.cmd->clear();
        app.clear();
        app.parse(argc, argv);
      }
      pgs::run_experiment(sub.cfg);
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const pgs::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const pgs::IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
