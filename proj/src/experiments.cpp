#include "pgs/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include <Eigen/SVD>

#include "pgs/apps/association.hpp"
#include "pgs/apps/selfcal.hpp"
#include "pgs/apps/two_view.hpp"
#include "pgs/errors.hpp"
#include "pgs/quadratic.hpp"

namespace pgs {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(std::uint64_t v) { return std::to_string(v); }
std::string fmt(int v) { return std::to_string(v); }

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(const std::filesystem::path& path, const Table& table) {
  std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
  if (!out) throw IoError("failed while writing " + path.string());
}

void write_trace_csv(const std::filesystem::path& dir, int run, const SolverTrace& trace) {
  Table t;
  t.columns = {"iter", "f", "g", "h", "v_norm", "v_over_t_norm", "t", "t_prime",
               "linesearch_iters", "accepted"};
  int k = 0;
  for (const auto& rec : trace.iterations) {
    t.rows.push_back({fmt(k++), fmt(rec.f), fmt(rec.g), fmt(rec.h), fmt(rec.v_norm),
                      fmt(rec.v_over_t_norm), fmt(rec.t), fmt(rec.t_prime),
                      fmt(rec.linesearch_iters), fmt(static_cast<int>(rec.accepted))});
  }
  write_csv(dir / ("trace_" + std::to_string(run) + ".csv"), t);
}

/// Per-run result produced by a subcommand runner.
struct RunOutput {
  std::vector<std::string> cells;  ///< everything after run,seed,<sweep>,status
  bool failed = false;
  std::optional<SolverTrace> trace;
};

double sample_mean(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double sample_stddev(const std::vector<double>& v, double mean) {
  if (v.size() < 2) return 0;
  double s = 0;
  for (double x : v) s += (x - mean) * (x - mean);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

Table summarize(const Table& runs, const std::string& sweep_column,
                const std::vector<double>& sweep_values, std::size_t metric_begin) {
  Table summary;
  summary.columns = {sweep_column, "metric", "mean", "stddev", "count"};
  const std::size_t sweep_idx = 2;  // run, seed, <sweep>, status, metrics...
  for (double value : sweep_values) {
    const std::string key = fmt(value);
    for (std::size_t col = metric_begin; col < runs.columns.size(); ++col) {
      std::vector<double> samples;
      for (const auto& row : runs.rows) {
        if (row[sweep_idx] != key) continue;
        const double x = std::strtod(row[col].c_str(), nullptr);
        if (std::isfinite(x)) samples.push_back(x);
      }
      if (samples.empty()) {
        summary.rows.push_back({key, runs.columns[col], fmt(kNan), fmt(kNan), "0"});
        continue;
      }
      const double mean = sample_mean(samples);
      summary.rows.push_back({key, runs.columns[col], fmt(mean),
                              fmt(sample_stddev(samples, mean)),
                              fmt(static_cast<int>(samples.size()))});
    }
  }
  return summary;
}

SolverConfig solver_config(const ExperimentConfig& cfg) {
  SolverConfig s;
  s.method = cfg.method;
  s.strategy = cfg.strategy;
  s.tol_v = cfg.tol_v;
  s.tol_vt = cfg.tol_vt;
  s.max_iters = cfg.max_iters;
  return s;
}

// ---------------------------------------------------------------------------
// rayleigh: random symmetric instances, a sweep over Gaussian perturbations
// of the eigenvector start, optimality ratio against that start.

const std::vector<std::string> kRayleighColumns = {
    "final_f", "final_g", "final_h", "accepted_iters", "linesearch_iters",
    "converged", "lambda_min_gap", "optimality"};

RunOutput run_rayleigh(const ExperimentConfig& cfg, std::uint64_t run_seed, double delta_init) {
  Rng rng(run_seed);
  Eigen::MatrixXd a(cfg.dim, cfg.dim);
  for (int i = 0; i < cfg.dim; ++i)
    for (int j = 0; j <= i; ++j) {
      a(i, j) = rng.gaussian();
      a(j, i) = a(i, j);
    }
  const QuadraticCost g(a);
  const ZeroReg zero;
  const L1Reg l1(cfg.lambda);
  const Regularizer* h =
      cfg.lambda > 0 ? static_cast<const Regularizer*>(&l1) : &zero;
  const ProblemInstance problem{&g, h, cfg.dim};

  const BottomEigenvector ref = g.bottom_eigenvector();
  const SpherePoint x0 = init_from_sigma(ref.point, delta_init, rng);

  const SolverConfig scfg = solver_config(cfg);
  SolveResult from_x0 = solve(problem, x0, scfg);
  const SolveResult from_ref = solve(problem, ref.point, scfg);

  const double f = from_x0.trace.iterations.empty() ? kNan : from_x0.trace.iterations.back().f;
  const double g_val = g.value(from_x0.x.coords());
  const double h_val = h->value(from_x0.x.coords());
  const double f_ref =
      from_ref.trace.iterations.empty() ? kNan : from_ref.trace.iterations.back().f;

  RunOutput out;
  out.cells = {fmt(f),
               fmt(g_val),
               fmt(h_val),
               fmt(from_x0.trace.accepted_iterations),
               fmt(from_x0.trace.linesearch_iterations),
               fmt(static_cast<int>(from_x0.trace.converged)),
               fmt(std::abs(g_val + h_val - (ref.eigenvalue + h->value(ref.point.coords())))),
               fmt(f / f_ref)};
  out.trace = std::move(from_x0.trace);
  return out;
}

// ---------------------------------------------------------------------------
// fundmat: synthetic two-view scenes, the normalized eight point baseline
// against the truncated and fully converged nuclear-norm runs.

const std::vector<std::string> kFundmatColumns = {
    "e_dist_8pt",  "e_dist_pgs5", "e_dist_pgs10", "e_dist_pgs",  "e_rep_8pt",
    "e_rep_pgs5",  "e_rep_pgs10", "e_rep_pgs",    "sigma3_ratio", "accepted_iters",
    "linesearch_iters"};

RunOutput run_fundmat(const ExperimentConfig& cfg, std::uint64_t run_seed, double noise_px) {
  using namespace apps;
  const TwoViewScene scene = gen_two_view(run_seed, cfg.m, noise_px);
  const SolverConfig scfg = solver_config(cfg);

  const Eigen::Matrix3d f_8pt = eight_point(scene.correspondences);
  const Eigen::Matrix3d f_5 =
      pgs_fundmat(scene.correspondences, cfg.lambda, FundmatVariant::kTrunc5, scfg);
  const Eigen::Matrix3d f_10 =
      pgs_fundmat(scene.correspondences, cfg.lambda, FundmatVariant::kTrunc10, scfg);
  FundmatEstimate full =
      pgs_fundmat_detailed(scene.correspondences, cfg.lambda, FundmatVariant::kFull, scfg);
  Eigen::Vector3d sigma = Eigen::Vector3d::Zero();
  sigma = Eigen::JacobiSVD<Eigen::Matrix3d>(full.f_unrounded).singularValues();
  const double sigma3_ratio = sigma[2] / sigma[0];

  RunOutput out;
  out.cells = {fmt(epipolar_distance(f_8pt, scene.correspondences)),
               fmt(epipolar_distance(f_5, scene.correspondences)),
               fmt(epipolar_distance(f_10, scene.correspondences)),
               fmt(epipolar_distance(full.f, scene.correspondences)),
               fmt(reprojection_error(f_8pt, scene.correspondences)),
               fmt(reprojection_error(f_5, scene.correspondences)),
               fmt(reprojection_error(f_10, scene.correspondences)),
               fmt(reprojection_error(full.f, scene.correspondences)),
               fmt(sigma3_ratio),
               fmt(full.trace.accepted_iterations),
               fmt(full.trace.linesearch_iterations)};
  out.trace = std::move(full.trace);
  return out;
}

// ---------------------------------------------------------------------------
// assoc: the spectral baseline (bottom eigenvector) against the l1
// regularized solve with the automatic weight.

const std::vector<std::string> kAssocColumns = {
    "lambda",      "correct_spectral", "correct_l1",      "support_spectral",
    "support_l1",  "final_f_l1",       "accepted_iters",  "linesearch_iters"};

int correct_matches(const std::vector<std::pair<int, int>>& matches, int inliers) {
  int n = 0;
  for (const auto& [i, ip] : matches)
    if (i == ip && i < inliers) ++n;
  return n;
}

int support_size(const Eigen::VectorXd& x) {
  return static_cast<int>((x.cwiseAbs().array() > 0.01).count());
}

RunOutput run_assoc(const ExperimentConfig& cfg, std::uint64_t run_seed, double delta_pts) {
  using namespace apps;
  const AssociationScene scene =
      simulate_association(run_seed, cfg.m, cfg.outliers, delta_pts);
  const AssociationProblem problem = build_association(scene.q, scene.q_prime, cfg.delta_d);
  const QuadraticCost g(-problem.affinity);

  const BottomEigenvector spectral = g.bottom_eigenvector();
  const int correct_spec = correct_matches(extract_matches(spectral.point, problem),
                                           scene.inliers);

  const double lambda = lambda_auto(problem);
  const L1Reg h(lambda);
  const ProblemInstance p{&g, &h, problem.dim()};
  SolveResult l1 = solve(p, spectral.point, solver_config(cfg));
  const int correct_reg = correct_matches(extract_matches(l1.x, problem), scene.inliers);

  RunOutput out;
  out.cells = {fmt(lambda),
               fmt(correct_spec),
               fmt(correct_reg),
               fmt(support_size(spectral.point.coords())),
               fmt(support_size(l1.x.coords())),
               fmt(l1.trace.iterations.empty() ? kNan : l1.trace.iterations.back().f),
               fmt(l1.trace.accepted_iterations),
               fmt(l1.trace.linesearch_iterations)};
  out.trace = std::move(l1.trace);
  return out;
}

// ---------------------------------------------------------------------------
// selfcal: CMS scenes; unregularized, nuclear, nuclear with early stop and
// nuclear-spectral pipelines, scored by relative reconstruction error.

const std::vector<std::string> kSelfcalColumns = {
    "err_none",      "fail_none",      "err_nuclear", "fail_nuclear", "err_nuc_early",
    "fail_nuc_early", "err_nucspec",   "fail_nucspec"};

RunOutput run_selfcal(const ExperimentConfig& cfg, std::uint64_t run_seed, double delta_img) {
  using namespace apps;
  const ProjectiveCameraSet scene = gen_cms_scene(run_seed, 50, 7, cfg.delta_cam, delta_img);
  const ProjectiveCameraSet rectified = quasi_euclidean_rectify(scene);
  const SolverConfig scfg = solver_config(cfg);

  RunOutput out;
  auto run_variant = [&](SelfcalReg reg, int early_stop) {
    SelfcalOptions opts;
    opts.reg = reg;
    opts.lambda1 = cfg.lambda;
    opts.lambda2 = cfg.lambda2;
    opts.early_stop = early_stop;
    try {
      SelfcalSolution sol = selfcal_solve(rectified, opts, scfg);
      const Eigen::MatrixXd est = selfcal_reconstruct(rectified, sol.upgrade);
      const double err = relative_reconstruction_error(est, rectified.gt_points);
      out.cells.push_back(fmt(err));
      out.cells.push_back("0");
      if (reg == SelfcalReg::kNuclearSpectral) out.trace = std::move(sol.trace);
    } catch (const Error&) {
      out.cells.push_back(fmt(kNan));
      out.cells.push_back("1");
    }
  };
  run_variant(SelfcalReg::kNone, 0);
  run_variant(SelfcalReg::kNuclear, 0);
  run_variant(SelfcalReg::kNuclear, cfg.early_stop);
  run_variant(SelfcalReg::kNuclearSpectral, 0);
  return out;
}

// ---------------------------------------------------------------------------
// diagnostics: the proxy-to-actual step-size mapping on seeded instances of
// the three applications, sampled on a grid inside (0, 1/h(x0)).

Table run_diagnostics(const ExperimentConfig& cfg) {
  using namespace apps;
  Table t;
  t.columns = {"instance", "sample", "t_prime", "c", "phi", "inv_lipschitz"};

  struct Instance {
    std::string name;
    QuadraticCost g;
    std::unique_ptr<Regularizer> h;
    SpherePoint x0;
  };
  std::vector<Instance> instances;

  {
    const TwoViewScene scene = gen_two_view(cfg.seed, cfg.m, 1.0);
    const NormalizedCorrespondences norm = hartley_normalize(scene.correspondences);
    QuadraticCost g = build_fundmat_design(norm.points);
    SpherePoint x0 = g.bottom_eigenvector().point;
    instances.push_back({"fundmat_nuclear", std::move(g),
                         std::make_unique<NuclearReg>(cfg.lambda, Matricizer::full(3, 3)),
                         std::move(x0)});
  }
  {
    const AssociationScene scene =
        simulate_association(cfg.seed, std::min(cfg.m, 15), cfg.outliers, 2.0);
    const AssociationProblem problem =
        build_association(scene.q, scene.q_prime, cfg.delta_d);
    QuadraticCost g(-problem.affinity);
    SpherePoint x0 = g.bottom_eigenvector().point;
    instances.push_back({"assoc_l1", std::move(g),
                         std::make_unique<L1Reg>(lambda_auto(problem)), std::move(x0)});
  }
  {
    const ProjectiveCameraSet scene = gen_cms_scene(cfg.seed, 50, 7, cfg.delta_cam, 1.0);
    const ProjectiveCameraSet rectified = quasi_euclidean_rectify(scene);
    QuadraticCost g = build_selfcal_design(rectified);
    Eigen::Matrix4d canonical = Eigen::Matrix4d::Identity();
    canonical(3, 3) = 0;
    const Matricizer sym4 = Matricizer::sym_upper_tri(4);
    instances.push_back(
        {"selfcal_nucspec", std::move(g),
         std::make_unique<NuclearSpectralReg>(cfg.lambda, cfg.lambda2, sym4),
         SpherePoint(sym4.to_vector(canonical))});
  }

  int instance_id = 0;
  for (const auto& inst : instances) {
    const TangentVector rgrad =
        riemannian_gradient(inst.x0, inst.g.euclid_grad(inst.x0.coords()));
    const double h_x0 = inst.h->value(inst.x0.coords());
    const double upper = 0.999 / h_x0;
    std::vector<double> grid;
    for (int i = 1; i <= 100; ++i) grid.push_back(upper * i / 100.0);
    const auto samples = phi_diagnostics(inst.x0, rgrad, *inst.h, grid);
    const double inv_l = 1.0 / *inst.g.lipschitz();
    for (std::size_t i = 0; i < samples.size(); ++i) {
      t.rows.push_back({fmt(instance_id), fmt(static_cast<int>(i)), fmt(samples[i].t_prime),
                        fmt(samples[i].c), fmt(samples[i].phi), fmt(inv_l)});
    }
    ++instance_id;
  }
  return t;
}

}  // namespace

void apply_config_entry(ExperimentConfig& cfg, const std::string& key,
                        const std::string& value) {
  auto parse_double = [&](const std::string& v) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
      throw ConfigError("field '" + key + "': cannot parse number '" + v + "'");
    return x;
  };
  auto parse_int = [&](const std::string& v) {
    const double x = parse_double(v);
    if (x != std::floor(x)) throw ConfigError("field '" + key + "': expected an integer");
    return static_cast<int>(x);
  };
  auto parse_list = [&](const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(item));
    if (out.empty()) throw ConfigError("field '" + key + "': empty list");
    return out;
  };

  if (key == "seed") {
    cfg.seed = static_cast<std::uint64_t>(parse_double(value));
  } else if (key == "runs") {
    cfg.runs = parse_int(value);
  } else if (key == "jobs") {
    cfg.jobs = parse_int(value);
  } else if (key == "out") {
    cfg.out_dir = value;
  } else if (key == "method") {
    if (value == "pgs") cfg.method = Method::kPgs;
    else if (value == "apgs") cfg.method = Method::kApgs;
    else if (value == "ampgs") cfg.method = Method::kAmpgs;
    else throw ConfigError("field 'method': unknown value '" + value + "'");
  } else if (key == "strategy") {
    if (value == "lipschitz-fixed") cfg.strategy = StepsizeStrategy::kLipschitzFixed;
    else if (value == "lipschitz-adaptive") cfg.strategy = StepsizeStrategy::kLipschitzAdaptive;
    else if (value == "searched-fixed") cfg.strategy = StepsizeStrategy::kSearchedFixed;
    else if (value == "searched-adaptive") cfg.strategy = StepsizeStrategy::kSearchedAdaptive;
    else throw ConfigError("field 'strategy': unknown value '" + value + "'");
  } else if (key == "tol-v") {
    cfg.tol_v = parse_double(value);
  } else if (key == "tol-vt") {
    cfg.tol_vt = parse_double(value);
  } else if (key == "max-iters") {
    cfg.max_iters = parse_int(value);
  } else if (key == "dim") {
    cfg.dim = parse_int(value);
  } else if (key == "lambda") {
    cfg.lambda = parse_double(value);
  } else if (key == "lambda2") {
    cfg.lambda2 = parse_double(value);
  } else if (key == "delta-init") {
    cfg.delta_init = parse_list(value);
  } else if (key == "noise") {
    cfg.noise = parse_list(value);
  } else if (key == "m") {
    cfg.m = parse_int(value);
  } else if (key == "outliers") {
    cfg.outliers = parse_int(value);
  } else if (key == "delta-d") {
    cfg.delta_d = parse_double(value);
  } else if (key == "delta-cam") {
    cfg.delta_cam = parse_double(value);
  } else if (key == "early-stop") {
    cfg.early_stop = parse_int(value);
  } else if (key == "traces") {
    cfg.traces = parse_int(value) != 0;
  } else if (key == "timings") {
    cfg.timings = parse_int(value) != 0;
  } else {
    throw ConfigError("unknown config field '" + key + "'");
  }
}

void load_config_file(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line is not key=value: '" + line + "'");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    apply_config_entry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

SpherePoint init_from_sigma(const SpherePoint& x_ref, double delta_init, Rng& rng) {
  if (delta_init < 0) throw ConfigError("init_from_sigma: delta_init must be nonnegative");
  if (delta_init == 0) return x_ref;
  while (true) {
    Eigen::VectorXd v = x_ref.coords();
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] += rng.gaussian(0, delta_init);
    if (v.norm() > 1e-12) return SpherePoint(std::move(v));
  }
}

SpherePoint init_from_sigma(const SpherePoint& x_ref, double delta_init, std::uint64_t seed) {
  Rng rng(seed);
  return init_from_sigma(x_ref, delta_init, rng);
}

void run_experiment(const ExperimentConfig& cfg) {
  if (cfg.runs <= 0) throw ConfigError("field 'runs': must be positive");
  if (cfg.jobs <= 0) throw ConfigError("field 'jobs': must be positive");
  if (cfg.m < 2) throw ConfigError("field 'm': must be at least 2");
  if (cfg.dim < 2) throw ConfigError("field 'dim': must be at least 2");
  if (cfg.outliers < 0) throw ConfigError("field 'outliers': must be nonnegative");
  if (cfg.lambda < 0) throw ConfigError("field 'lambda': must be nonnegative");
  if (cfg.lambda2 < 0) throw ConfigError("field 'lambda2': must be nonnegative");
  if (cfg.delta_d <= 0) throw ConfigError("field 'delta-d': must be positive");
  if (cfg.delta_cam < 0) throw ConfigError("field 'delta-cam': must be nonnegative");
  if (cfg.early_stop < 0) throw ConfigError("field 'early-stop': must be nonnegative");
  for (double v : cfg.noise)
    if (v < 0) throw ConfigError("field 'noise': values must be nonnegative");
  for (double v : cfg.delta_init)
    if (v < 0) throw ConfigError("field 'delta-init': values must be nonnegative");

  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + cfg.out_dir);
  const std::filesystem::path dir(cfg.out_dir);

  if (cfg.subcommand == "diagnostics") {
    const Table t = run_diagnostics(cfg);
    write_csv(dir / "runs.csv", t);
    Table summary;
    summary.columns = {"instance", "metric", "mean", "stddev", "count"};
    write_csv(dir / "summary.csv", summary);
    return;
  }

  std::string sweep_name;
  const std::vector<double>* sweep = nullptr;
  const std::vector<std::string>* metric_columns = nullptr;
  RunOutput (*runner)(const ExperimentConfig&, std::uint64_t, double) = nullptr;
  if (cfg.subcommand == "rayleigh") {
    sweep_name = "delta_init";
    sweep = &cfg.delta_init;
    metric_columns = &kRayleighColumns;
    runner = &run_rayleigh;
  } else if (cfg.subcommand == "fundmat") {
    sweep_name = "noise_px";
    sweep = &cfg.noise;
    metric_columns = &kFundmatColumns;
    runner = &run_fundmat;
  } else if (cfg.subcommand == "assoc") {
    sweep_name = "delta_pts";
    sweep = &cfg.noise;
    metric_columns = &kAssocColumns;
    runner = &run_assoc;
  } else if (cfg.subcommand == "selfcal") {
    sweep_name = "delta_img";
    sweep = &cfg.noise;
    metric_columns = &kSelfcalColumns;
    runner = &run_selfcal;
  } else {
    throw ConfigError("unknown subcommand '" + cfg.subcommand + "'");
  }

  const int total = static_cast<int>(sweep->size()) * cfg.runs;
  std::vector<RunOutput> outputs(total);
  std::vector<double> wall_time(total, 0.0);
  std::string deferred_error;

#pragma omp parallel for schedule(dynamic) num_threads(cfg.jobs)
  for (int idx = 0; idx < total; ++idx) {
    const double sweep_value = (*sweep)[idx / cfg.runs];
    const auto t0 = std::chrono::steady_clock::now();
    try {
      outputs[idx] = runner(cfg, cfg.seed + static_cast<std::uint64_t>(idx), sweep_value);
    } catch (const Error&) {
      outputs[idx].failed = true;
      outputs[idx].cells.assign(metric_columns->size(), fmt(kNan));
    } catch (const std::exception& e) {
#pragma omp critical
      if (deferred_error.empty()) deferred_error = e.what();
      outputs[idx].failed = true;
      outputs[idx].cells.assign(metric_columns->size(), fmt(kNan));
    }
    wall_time[idx] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  if (!deferred_error.empty()) throw Error("experiment run failed: " + deferred_error);

  Table runs;
  runs.columns = {"run", "seed", sweep_name, "status"};
  runs.columns.insert(runs.columns.end(), metric_columns->begin(), metric_columns->end());
  if (cfg.timings) runs.columns.push_back("wall_time_s");
  for (int idx = 0; idx < total; ++idx) {
    std::vector<std::string> row = {fmt(idx), fmt(cfg.seed + static_cast<std::uint64_t>(idx)),
                                    fmt((*sweep)[idx / cfg.runs]),
                                    fmt(static_cast<int>(outputs[idx].failed))};
    row.insert(row.end(), outputs[idx].cells.begin(), outputs[idx].cells.end());
    if (cfg.timings) row.push_back(fmt(wall_time[idx]));
    runs.rows.push_back(std::move(row));
  }
  write_csv(dir / "runs.csv", runs);
  write_csv(dir / "summary.csv", summarize(runs, sweep_name, *sweep, 4));

  if (cfg.traces) {
    for (int idx = 0; idx < total; ++idx)
      if (outputs[idx].trace) write_trace_csv(dir, idx, *outputs[idx].trace);
  }
}

}  // namespace pgs
