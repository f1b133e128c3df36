#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pgs/errors.hpp"
#include "pgs/experiments.hpp"
#include "pgs/quadratic.hpp"

using namespace pgs;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> header_of(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  std::vector<std::string> cols;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) cols.push_back(item);
  return cols;
}

struct TempDir {
  explicit TempDir(const std::string& name)
      : path(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove_all(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::filesystem::path path;
};

}  // namespace

TEST_CASE("init_from_sigma basics") {
  const SpherePoint ref(Eigen::Vector3d(3, 0, 4));
  CHECK(init_from_sigma(ref, 0.0, 7) == ref);
  const SpherePoint a = init_from_sigma(ref, 0.3, 7);
  const SpherePoint b = init_from_sigma(ref, 0.3, 7);
  CHECK(a == b);
  CHECK(a.coords().norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(a == ref);
  CHECK_THROWS_AS(init_from_sigma(ref, -0.1, 7), ConfigError);
}

TEST_CASE("large delta_init behaves like a random initialization") {
  const SpherePoint ref(Eigen::VectorXd::Unit(9, 0));
  Rng rng(5);
  double mean_align = 0;
  const int draws = 300;
  for (int i = 0; i < draws; ++i)
    mean_align += std::abs(init_from_sigma(ref, 50.0, rng).dot(ref));
  mean_align /= draws;
  // uniform on the 9-sphere gives E|cos| well below 1/2
  CHECK(mean_align < 0.5);
}

TEST_CASE("config entries parse and validate") {
  ExperimentConfig cfg;
  apply_config_entry(cfg, "seed", "42");
  apply_config_entry(cfg, "runs", "7");
  apply_config_entry(cfg, "method", "ampgs");
  apply_config_entry(cfg, "strategy", "searched-adaptive");
  apply_config_entry(cfg, "noise", "0,2,4");
  apply_config_entry(cfg, "lambda", "0.05");
  CHECK(cfg.seed == 42);
  CHECK(cfg.runs == 7);
  CHECK(cfg.method == Method::kAmpgs);
  CHECK(cfg.strategy == StepsizeStrategy::kSearchedAdaptive);
  CHECK(cfg.noise == std::vector<double>{0, 2, 4});
  CHECK(cfg.lambda == 0.05);

  CHECK_THROWS_AS(apply_config_entry(cfg, "nonsense", "1"), ConfigError);
  CHECK_THROWS_AS(apply_config_entry(cfg, "runs", "two"), ConfigError);
  CHECK_THROWS_AS(apply_config_entry(cfg, "method", "sgd"), ConfigError);
  try {
    apply_config_entry(cfg, "frobnicate", "1");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("frobnicate") != std::string::npos);
  }
}

TEST_CASE("config files support comments and whitespace") {
  TempDir dir("pgs_test_config");
  std::filesystem::create_directories(dir.path);
  const auto file = dir.path / "exp.cfg";
  std::ofstream out(file);
  out << "# experiment setup\n";
  out << "seed = 99\n";
  out << "\n";
  out << "runs=3   # trailing comment\n";
  out << "noise = 1,2\n";
  out.close();

  ExperimentConfig cfg;
  load_config_file(cfg, file.string());
  CHECK(cfg.seed == 99);
  CHECK(cfg.runs == 3);
  CHECK(cfg.noise == std::vector<double>{1, 2});
}

TEST_CASE("rayleigh experiment reaches the eigen oracle") {
  TempDir dir("pgs_test_rayleigh");
  ExperimentConfig cfg;
  cfg.subcommand = "rayleigh";
  cfg.runs = 5;
  cfg.lambda = 0.0;
  cfg.delta_init = {0.2};
  cfg.out_dir = dir.path.string();
  run_experiment(cfg);

  std::ifstream in(dir.path / "runs.csv");
  std::string line;
  std::getline(in, line);  // header
  const auto cols = header_of(dir.path / "runs.csv");
  int gap_col = -1, status_col = -1;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] == "lambda_min_gap") gap_col = static_cast<int>(i);
    if (cols[i] == "status") status_col = static_cast<int>(i);
  }
  REQUIRE(gap_col >= 0);
  int rows = 0;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    CHECK(cells[status_col] == "0");
    CHECK(std::stod(cells[gap_col]) <= 1e-6);
    ++rows;
  }
  CHECK(rows == 5);
}

TEST_CASE("experiment outputs are byte-identical across reruns and jobs") {
  TempDir d1("pgs_test_det1"), d2("pgs_test_det2"), d3("pgs_test_det3");
  ExperimentConfig cfg;
  cfg.subcommand = "assoc";
  cfg.runs = 3;
  cfg.m = 8;
  cfg.outliers = 2;
  cfg.noise = {1.0, 3.0};
  cfg.seed = 11;

  cfg.out_dir = d1.path.string();
  run_experiment(cfg);
  cfg.out_dir = d2.path.string();
  run_experiment(cfg);
  cfg.out_dir = d3.path.string();
  cfg.jobs = 2;
  run_experiment(cfg);

  CHECK(slurp(d1.path / "runs.csv") == slurp(d2.path / "runs.csv"));
  CHECK(slurp(d1.path / "summary.csv") == slurp(d2.path / "summary.csv"));
  CHECK(slurp(d1.path / "runs.csv") == slurp(d3.path / "runs.csv"));
  CHECK(slurp(d1.path / "summary.csv") == slurp(d3.path / "summary.csv"));
}

TEST_CASE("csv schemas are stable") {
  TempDir dir("pgs_test_schema");
  ExperimentConfig cfg;
  cfg.runs = 2;
  cfg.m = 8;
  cfg.outliers = 0;
  cfg.noise = {1.0};
  cfg.delta_init = {0.1};
  cfg.out_dir = dir.path.string();

  cfg.subcommand = "rayleigh";
  run_experiment(cfg);
  CHECK(header_of(dir.path / "runs.csv") ==
        std::vector<std::string>{"run", "seed", "delta_init", "status", "final_f", "final_g",
                                 "final_h", "accepted_iters", "linesearch_iters", "converged",
                                 "lambda_min_gap", "optimality"});
  CHECK(header_of(dir.path / "summary.csv") ==
        std::vector<std::string>{"delta_init", "metric", "mean", "stddev", "count"});

  cfg.subcommand = "fundmat";
  cfg.m = 30;
  run_experiment(cfg);
  CHECK(header_of(dir.path / "runs.csv") ==
        std::vector<std::string>{"run", "seed", "noise_px", "status", "e_dist_8pt",
                                 "e_dist_pgs5", "e_dist_pgs10", "e_dist_pgs", "e_rep_8pt",
                                 "e_rep_pgs5", "e_rep_pgs10", "e_rep_pgs", "sigma3_ratio",
                                 "accepted_iters", "linesearch_iters"});

  cfg.subcommand = "assoc";
  cfg.m = 8;
  run_experiment(cfg);
  CHECK(header_of(dir.path / "runs.csv") ==
        std::vector<std::string>{"run", "seed", "delta_pts", "status", "lambda",
                                 "correct_spectral", "correct_l1", "support_spectral",
                                 "support_l1", "final_f_l1", "accepted_iters",
                                 "linesearch_iters"});
}

TEST_CASE("traces are written on demand") {
  TempDir dir("pgs_test_traces");
  ExperimentConfig cfg;
  cfg.subcommand = "rayleigh";
  cfg.runs = 2;
  cfg.lambda = 0.1;
  cfg.traces = true;
  cfg.out_dir = dir.path.string();
  run_experiment(cfg);
  CHECK(std::filesystem::exists(dir.path / "trace_0.csv"));
  CHECK(std::filesystem::exists(dir.path / "trace_1.csv"));
  CHECK(header_of(dir.path / "trace_0.csv") ==
        std::vector<std::string>{"iter", "f", "g", "h", "v_norm", "v_over_t_norm", "t",
                                 "t_prime", "linesearch_iters", "accepted"});
}

TEST_CASE("wall time column appears only with timings enabled") {
  TempDir dir("pgs_test_timings");
  ExperimentConfig cfg;
  cfg.subcommand = "rayleigh";
  cfg.runs = 1;
  cfg.out_dir = dir.path.string();
  run_experiment(cfg);
  auto cols = header_of(dir.path / "runs.csv");
  CHECK(std::find(cols.begin(), cols.end(), "wall_time_s") == cols.end());

  cfg.timings = true;
  run_experiment(cfg);
  cols = header_of(dir.path / "runs.csv");
  CHECK(cols.back() == "wall_time_s");
}

TEST_CASE("invalid configurations are rejected with the field name") {
  ExperimentConfig cfg;
  cfg.subcommand = "rayleigh";
  cfg.runs = 0;
  CHECK_THROWS_AS(run_experiment(cfg), ConfigError);
  cfg.runs = 1;
  cfg.subcommand = "frobnicate";
  CHECK_THROWS_AS(run_experiment(cfg), ConfigError);
}

TEST_CASE("diagnostics subcommand samples a monotone mapping") {
  TempDir dir("pgs_test_diag");
  ExperimentConfig cfg;
  cfg.subcommand = "diagnostics";
  cfg.seed = 5;
  cfg.m = 20;
  cfg.out_dir = dir.path.string();
  run_experiment(cfg);
  std::ifstream in(dir.path / "runs.csv");
  std::string line;
  std::getline(in, line);
  CHECK(line == "instance,sample,t_prime,c,phi,inv_lipschitz");
  double prev_phi = -1e300;
  std::string prev_instance = "-1";
  int rows = 0;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string instance, sample, t_prime, c, phi;
    std::getline(ss, instance, ',');
    std::getline(ss, sample, ',');
    std::getline(ss, t_prime, ',');
    std::getline(ss, c, ',');
    std::getline(ss, phi, ',');
    if (instance != prev_instance) prev_phi = -1e300;
    CHECK(std::stod(phi) >= prev_phi - 1e-10);
    prev_phi = std::stod(phi);
    prev_instance = instance;
    ++rows;
  }
  CHECK(rows == 300);
}
