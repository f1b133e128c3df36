#pragma once

#include <vector>

#include <Eigen/Core>

#include "pgs/manifold.hpp"
#include "pgs/regularizers.hpp"
#include "pgs/smooth_cost.hpp"

namespace pgs {

enum class Method { kPgs, kApgs, kAmpgs };

/// How the maximum proxy step-size is initialized and maintained:
/// Lipschitz* starts from 1/L, Searched* from the adaptive search; the
/// *Adaptive variants update the maximum to the working proxy step-size
/// after every accepted iteration.
enum class StepsizeStrategy {
  kLipschitzFixed,
  kLipschitzAdaptive,
  kSearchedFixed,
  kSearchedAdaptive,
};

struct SolverConfig {
  Method method = Method::kPgs;
  StepsizeStrategy strategy = StepsizeStrategy::kLipschitzAdaptive;
  double tol_v = 1e-5;
  double tol_vt = 1e-3;
  int max_iters = 10000;
  double shrink = 0.8;
  int max_linesearch_iters = 100;
  /// Cap c in the interval bound t' <= c / h(x); 1 matches the line-search
  /// pseudocode, values below 1 match the strict-inequality convergence text.
  double interval_cap = 1.0;
};

/// One closed-form subproblem solve for a given proxy step-size.
struct ProxyStepResult {
  Eigen::VectorXd z;  ///< proximal point prox_{|t'| h}(x - t' grad)
  TangentVector v;    ///< tangent update, z / c - x
  double t;           ///< actual step-size, t' / c
  double t_prime;     ///< proxy step-size
  double c;           ///< x^T z
};

/// Solves the tangent-space subproblem in closed form for proxy step-size
/// t_prime > 0: z = prox_{t' h}(x - t' rgrad), c = x^T z, t = t'/c,
/// v = z/c - x. Throws DegenerateProx when c <= 1e-12; callers shrink t'.
ProxyStepResult proxy_step(const SpherePoint& x, const TangentVector& rgrad, double t_prime,
                           const Regularizer& h);

struct PhiSample {
  double t_prime;
  double c;
  double phi;  ///< t' / c; +-inf when c vanishes
};

/// Pointwise evaluation of the proxy-to-actual step-size mapping
/// t = phi(t') = t' / c(t') for plotting and monotonicity checks. Samples
/// with c <= 0 are reported, not rejected.
std::vector<PhiSample> phi_diagnostics(const SpherePoint& x, const TangentVector& rgrad,
                                       const Regularizer& h, const std::vector<double>& grid);

struct LineSearchResult {
  ProxyStepResult step;
  int iterations;  ///< criterion evaluations performed
};

/// Backtracking on the proxy step-size: starts at
/// min{t_max, interval_cap / h(x)} and shrinks by cfg.shrink until the
/// sufficient-decrease criterion on g holds:
///   g(R_x(v)) <= g(x) + <grad g, v> + (1/2t) <v, v>.
/// A degenerate proximal (c <= 1e-12) shrinks like a criterion failure.
/// Throws LineSearchExhausted after cfg.max_linesearch_iters shrinks.
LineSearchResult line_search(const SpherePoint& x, double t_max, const ProblemInstance& p,
                             const SolverConfig& cfg);

struct MaxStepsizeSearchResult {
  double t_prime_max;
  int iterations;  ///< criterion evaluations performed
};

/// Adaptive search for the maximum proxy step-size when no Lipschitz
/// constant is available. Starts from the interval upper bound
/// ub = 0.7 / h(x0); doubles after a success (capped at ub), returns half
/// the first failing trial once a success has been seen, and shrinks by 10x
/// while no trial has succeeded. Falls back to 1/L when h(x0) = 0 and g
/// stores a Lipschitz constant. Throws SearchExhausted after max_trials.
MaxStepsizeSearchResult search_max_proxy_stepsize(const SpherePoint& x0,
                                                  const ProblemInstance& p, int max_trials = 60);

/// alpha_{k+1} = (1 + sqrt(1 + 4 alpha_k^2)) / 2.
double nesterov_alpha_next(double alpha);

struct IterationRecord {
  double f, g, h;
  double v_norm;
  double v_over_t_norm;
  double t;
  double t_prime;
  int linesearch_iters;
  /// Whether the candidate replaced the estimate. Always true for PGS and
  /// A-PGS; false on AM-PGS fallback steps where the previous estimate is
  /// kept.
  bool accepted;
};

struct SolverTrace {
  double initial_f = 0;  ///< g + h at x0
  std::vector<IterationRecord> iterations;
  /// Outer iterations, each ending in one line-search-accepted step.
  int accepted_iterations = 0;
  /// Criterion evaluations across all line searches, including the
  /// initial maximum step-size search when one runs.
  int linesearch_iterations = 0;
  bool converged = false;  ///< false means the iteration cap was reached
};

struct SolveResult {
  SpherePoint x;
  SolverTrace trace;
};

/// Unified PGS / A-PGS / AM-PGS loop. Runs until both ||v_k|| < tol_v and
/// ||v_k / t|| < tol_vt, or max_iters (reported through trace.converged,
/// not an error).
SolveResult solve(const ProblemInstance& p, const SpherePoint& x0, const SolverConfig& cfg);

}  // namespace pgs
