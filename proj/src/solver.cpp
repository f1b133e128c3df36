#include "pgs/solver.hpp"

#include <cmath>
#include <limits>

#include "pgs/errors.hpp"

namespace pgs {
namespace {

void validate(const ProblemInstance& p, const SolverConfig& cfg) {
  if (p.g == nullptr || p.h == nullptr) throw ConfigError("problem instance is incomplete");
  if (cfg.tol_v <= 0 || cfg.tol_vt <= 0) throw ConfigError("tolerances must be positive");
  if (cfg.max_iters <= 0) throw ConfigError("max_iters must be positive");
  if (!(cfg.shrink > 0 && cfg.shrink < 1)) throw ConfigError("shrink must lie in (0,1)");
  if (cfg.max_linesearch_iters <= 0) throw ConfigError("max_linesearch_iters must be positive");
  if (!(cfg.interval_cap > 0 && cfg.interval_cap <= 1))
    throw ConfigError("interval_cap must lie in (0,1]");
}

double initial_trial_stepsize(double t_max, double cap, double h_at_x) {
  // h(x) = 0 makes the interval bound vacuous; use t_max directly.
  if (h_at_x <= 0) return t_max;
  return std::min(t_max, cap / h_at_x);
}

/// Momentum extrapolation y = R_anchor(scale * R^-1_anchor(toward)). Falls
/// back to `reset` when the inverse retraction is undefined (near-orthogonal
/// pair); the iteration then restarts without momentum instead of failing.
SpherePoint momentum_point(const SpherePoint& anchor, const SpherePoint& toward, double scale,
                           const SpherePoint& reset) {
  try {
    const TangentVector delta = inverse_retract(anchor, toward);
    return retract(anchor, TangentVector(anchor, scale * delta.dir()));
  } catch (const HemisphereViolation&) {
    return reset;
  }
}

}  // namespace

ProxyStepResult proxy_step(const SpherePoint& x, const TangentVector& rgrad, double t_prime,
                           const Regularizer& h) {
  if (!(rgrad.base() == x)) throw BaseMismatch("proxy_step: gradient based elsewhere");
  if (!(t_prime > 0)) throw ConfigError("proxy_step: t_prime must be positive");
  Eigen::VectorXd z = h.prox(x.coords() - t_prime * rgrad.dir(), t_prime);
  const double c = x.coords().dot(z);
  if (c <= 1e-12) throw DegenerateProx("proxy_step: proximal point left the hemisphere");
  const double t = t_prime / c;
  TangentVector v(x, z / c - x.coords());
  return ProxyStepResult{std::move(z), std::move(v), t, t_prime, c};
}

std::vector<PhiSample> phi_diagnostics(const SpherePoint& x, const TangentVector& rgrad,
                                       const Regularizer& h, const std::vector<double>& grid) {
  std::vector<PhiSample> samples;
  samples.reserve(grid.size());
  for (const double t_prime : grid) {
    if (t_prime == 0) throw ConfigError("phi_diagnostics: grid values must be nonzero");
    const Eigen::VectorXd z =
        h.prox(x.coords() - t_prime * rgrad.dir(), std::abs(t_prime));
    const double c = x.coords().dot(z);
    const double phi =
        c != 0 ? t_prime / c
               : std::copysign(std::numeric_limits<double>::infinity(), t_prime);
    samples.push_back(PhiSample{t_prime, c, phi});
  }
  return samples;
}

LineSearchResult line_search(const SpherePoint& x, double t_max, const ProblemInstance& p,
                             const SolverConfig& cfg) {
  if (!(t_max > 0)) throw ConfigError("line_search: t_max must be positive");
  const double g_x = p.g->value(x.coords());
  const TangentVector rgrad = riemannian_gradient(x, p.g->euclid_grad(x.coords()));
  double t_prime = initial_trial_stepsize(t_max, cfg.interval_cap, p.h->value(x.coords()));

  // Machine-level slack keeps the comparison meaningful near critical
  // points, where both sides agree to rounding error and an exact <= would
  // shrink forever.
  const double slack = 1e-14 * (1.0 + std::abs(g_x));
  int iterations = 0;
  for (int shrinks = 0; shrinks <= cfg.max_linesearch_iters; ++shrinks) {
    ++iterations;
    try {
      ProxyStepResult step = proxy_step(x, rgrad, t_prime, *p.h);
      const double quad_bound = g_x + rgrad.dir().dot(step.v.dir()) +
                                step.v.dir().squaredNorm() / (2.0 * step.t);
      if (p.g->value(retract(x, step.v).coords()) <= quad_bound + slack)
        return LineSearchResult{std::move(step), iterations};
    } catch (const DegenerateProx&) {
      // shrink exactly like a criterion failure
    }
    t_prime *= cfg.shrink;
  }
  throw LineSearchExhausted("line_search: no acceptable proxy step-size found");
}

MaxStepsizeSearchResult search_max_proxy_stepsize(const SpherePoint& x0,
                                                  const ProblemInstance& p, int max_trials) {
  const double h_x0 = p.h->value(x0.coords());
  if (h_x0 <= 0) {
    if (auto lip = p.g->lipschitz())
      return MaxStepsizeSearchResult{1.0 / *lip, 0};
    throw SearchExhausted(
        "search_max_proxy_stepsize: h(x0) = 0 and no Lipschitz constant available");
  }
  const double g_x0 = p.g->value(x0.coords());
  const TangentVector rgrad = riemannian_gradient(x0, p.g->euclid_grad(x0.coords()));

  const double ub = 0.7 / h_x0;
  const double slack = 1e-14 * (1.0 + std::abs(g_x0));
  double t_prime = ub;
  bool found = false;
  for (int trial = 1; trial <= max_trials; ++trial) {
    bool success = false;
    try {
      const ProxyStepResult step = proxy_step(x0, rgrad, t_prime, *p.h);
      const double quad_bound = g_x0 + rgrad.dir().dot(step.v.dir()) +
                                step.v.dir().squaredNorm() / (2.0 * step.t);
      success = p.g->value(retract(x0, step.v).coords()) <= quad_bound + slack;
    } catch (const DegenerateProx&) {
      success = false;
    }
    if (success) {
      if (t_prime == ub) return MaxStepsizeSearchResult{ub, trial};
      found = true;
      t_prime = std::min(2.0 * t_prime, ub);
    } else if (found) {
      return MaxStepsizeSearchResult{0.5 * t_prime, trial};
    } else {
      t_prime *= 0.1;
    }
  }
  throw SearchExhausted("search_max_proxy_stepsize: trial cap exceeded");
}

double nesterov_alpha_next(double alpha) {
  return 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * alpha * alpha));
}

SolveResult solve(const ProblemInstance& p, const SpherePoint& x0, const SolverConfig& cfg) {
  validate(p, cfg);
  if (x0.dim() != p.dim) throw DimensionMismatch("solve: x0 dimension mismatch");

  SolverTrace trace;
  double t_prime_max;
  if (cfg.strategy == StepsizeStrategy::kLipschitzFixed ||
      cfg.strategy == StepsizeStrategy::kLipschitzAdaptive) {
    const auto lip = p.g->lipschitz();
    if (!lip) throw ConfigError("solve: Lipschitz strategy requires a stored constant");
    t_prime_max = 1.0 / *lip;
  } else {
    const auto searched = search_max_proxy_stepsize(x0, p);
    t_prime_max = searched.t_prime_max;
    trace.linesearch_iterations += searched.iterations;
  }
  const bool adaptive = cfg.strategy == StepsizeStrategy::kLipschitzAdaptive ||
                        cfg.strategy == StepsizeStrategy::kSearchedAdaptive;

  SpherePoint x = x0;
  SpherePoint y = x0;
  double alpha = 1.0;
  double g_x = p.g->value(x.coords());
  double h_x = p.h->value(x.coords());
  trace.initial_f = g_x + h_x;

  for (int k = 0; k < cfg.max_iters; ++k) {
    LineSearchResult ls = line_search(y, t_prime_max, p, cfg);
    trace.linesearch_iterations += ls.iterations;
    ++trace.accepted_iterations;
    const SpherePoint y_star = retract(y, ls.step.v);
    if (adaptive) t_prime_max = ls.step.t_prime;

    bool accepted = true;
    if (cfg.method == Method::kPgs) {
      x = y_star;
      y = y_star;
      g_x = p.g->value(x.coords());
      h_x = p.h->value(x.coords());
    } else {
      const double alpha_next = nesterov_alpha_next(alpha);
      const double g_star = p.g->value(y_star.coords());
      const double h_star = p.h->value(y_star.coords());
      if (cfg.method == Method::kAmpgs && !(g_star + h_star < g_x + h_x)) {
        // Keep the previous estimate; ties count as no improvement.
        accepted = false;
        y = momentum_point(x, y_star, alpha / alpha_next, x);
      } else {
        const SpherePoint x_prev = x;
        x = y_star;
        g_x = g_star;
        h_x = h_star;
        y = momentum_point(y_star, x_prev, (1.0 - alpha) / alpha_next, y_star);
      }
      alpha = alpha_next;
    }

    const double v_norm = ls.step.v.norm();
    const double v_over_t = v_norm / ls.step.t;
    trace.iterations.push_back(IterationRecord{g_x + h_x, g_x, h_x, v_norm, v_over_t,
                                               ls.step.t, ls.step.t_prime, ls.iterations,
                                               accepted});
    if (v_norm < cfg.tol_v && v_over_t < cfg.tol_vt) {
      trace.converged = true;
      break;
    }
  }
  return SolveResult{std::move(x), std::move(trace)};
}

}  // namespace pgs
