// Compares the OpenMP kernels against their serial references: the affinity
// matrix build and the Monte-Carlo association sweep. Validates equality of
// the outputs before timing.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pgs/apps/association.hpp"
#include "pgs/experiments.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_affinity(int m, int m_out) {
  using namespace pgs::apps;
  const AssociationScene scene = simulate_association(7, m, m_out, 2.0);

  auto t0 = std::chrono::steady_clock::now();
  const AssociationProblem serial = build_association_serial(scene.q, scene.q_prime, 5.0);
  const double t_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const AssociationProblem parallel = build_association(scene.q, scene.q_prime, 5.0);
  const double t_parallel = seconds_since(t0);

  const bool identical = serial.affinity == parallel.affinity;
  std::printf("affinity n=%5d  serial %.4fs  openmp %.4fs  speedup %.2fx  identical %s\n",
              static_cast<int>(serial.dim()), t_serial, t_parallel, t_serial / t_parallel,
              identical ? "yes" : "NO");
}

void bench_assoc_sweep(int jobs) {
  pgs::ExperimentConfig cfg;
  cfg.subcommand = "assoc";
  cfg.m = 15;
  cfg.outliers = 3;
  cfg.runs = 8;
  cfg.noise = {2.0};
  cfg.jobs = jobs;
  cfg.out_dir = "/tmp/pgs_bench_jobs" + std::to_string(jobs);
  const auto t0 = std::chrono::steady_clock::now();
  pgs::run_experiment(cfg);
  std::printf("assoc sweep (8 runs)  jobs=%d  %.3fs\n", jobs, seconds_since(t0));
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both paths run serially\n");
#endif
  for (int m : {10, 20, 30}) bench_affinity(m, 5);
  bench_assoc_sweep(1);
#ifdef _OPENMP
  bench_assoc_sweep(omp_get_max_threads());
#endif
  return 0;
}
