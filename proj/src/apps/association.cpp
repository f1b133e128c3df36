#include "pgs/apps/association.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/Geometry>

#include "pgs/errors.hpp"
#include "pgs/rng.hpp"

namespace pgs::apps {
namespace {

Eigen::MatrixXd pairwise_distances(const std::vector<Eigen::Vector2d>& pts) {
  const auto n = static_cast<Eigen::Index>(pts.size());
  Eigen::MatrixXd d(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    d(i, i) = 0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      d(i, j) = (pts[i] - pts[j]).norm();
      d(j, i) = d(i, j);
    }
  }
  return d;
}

/// Affinity entry for hypothesis rows r = (i,i'), s = (j,j').
inline double affinity_entry(const Eigen::MatrixXd& da, const Eigen::MatrixXd& db, int i,
                             int ip, int j, int jp, double delta_d) {
  const double diff = da(i, j) - db(ip, jp);
  if (std::abs(diff) >= 3.0 * delta_d) return 0.0;
  return 4.5 - diff * diff / (2.0 * delta_d * delta_d);
}

template <bool Parallel>
AssociationProblem build_association_impl(const std::vector<Eigen::Vector2d>& qa,
                                          const std::vector<Eigen::Vector2d>& qb,
                                          double delta_d) {
  if (delta_d <= 0) throw ConfigError("build_association: delta_d must be positive");
  const int na = static_cast<int>(qa.size());
  const int nb = static_cast<int>(qb.size());
  const Eigen::MatrixXd da = pairwise_distances(qa);
  const Eigen::MatrixXd db = pairwise_distances(qb);

  AssociationProblem p;
  p.count_a = na;
  p.count_b = nb;
  p.delta_d = delta_d;
  const int n = na * nb;
  p.affinity.resize(n, n);

#pragma omp parallel for schedule(static) if (Parallel)
  for (int r = 0; r < n; ++r) {
    const int i = r / nb;
    const int ip = r % nb;
    for (int s = 0; s < n; ++s) {
      if (s == r) {
        p.affinity(r, s) = 0.0;
        continue;
      }
      const int j = s / nb;
      const int jp = s % nb;
      p.affinity(r, s) = affinity_entry(da, db, i, ip, j, jp, delta_d);
    }
  }
  return p;
}

}  // namespace

AssociationProblem build_association(const std::vector<Eigen::Vector2d>& qa,
                                     const std::vector<Eigen::Vector2d>& qb, double delta_d) {
  return build_association_impl<true>(qa, qb, delta_d);
}

AssociationProblem build_association_serial(const std::vector<Eigen::Vector2d>& qa,
                                            const std::vector<Eigen::Vector2d>& qb,
                                            double delta_d) {
  return build_association_impl<false>(qa, qb, delta_d);
}

double lambda_auto(const AssociationProblem& p) {
  const Eigen::Index n = p.dim();
  if (n < 2) throw ConfigError("lambda_auto: need at least 2 hypotheses");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p.affinity, Eigen::EigenvaluesOnly);
  const double sigma_max = es.eigenvalues().cwiseAbs().maxCoeff();
  return sigma_max / (std::sqrt(static_cast<double>(n)) - 1.0);
}

std::vector<std::pair<int, int>> extract_matches(const SpherePoint& x,
                                                 const AssociationProblem& p) {
  if (x.dim() != p.dim()) throw DimensionMismatch("extract_matches: dimension mismatch");
  Eigen::VectorXd weight = x.coords().cwiseAbs();
  std::vector<bool> used_a(p.count_a, false);
  std::vector<bool> used_b(p.count_b, false);
  std::vector<std::pair<int, int>> matches;

  while (weight.sum() >= 1e-6) {
    int best = -1;
    double best_w = -1;
    for (Eigen::Index r = 0; r < weight.size(); ++r) {
      if (weight[r] > best_w) {  // strict: ties keep the lowest index
        best_w = weight[r];
        best = static_cast<int>(r);
      }
    }
    const auto [i, ip] = p.hypothesis(best);
    matches.emplace_back(i, ip);
    used_a[i] = true;
    used_b[ip] = true;
    for (Eigen::Index r = 0; r < weight.size(); ++r) {
      const auto [j, jp] = p.hypothesis(static_cast<int>(r));
      if (used_a[j] || used_b[jp]) weight[r] = 0;
    }
  }
  return matches;
}

AssociationScene simulate_association(std::uint64_t seed, int m, int m_out, double delta_pts) {
  if (m < 2) throw ConfigError("simulate_association: need at least 2 inliers");
  Rng rng(seed);
  const double extent = 256.0 * std::sqrt(static_cast<double>(m) / 10.0);

  AssociationScene scene;
  scene.inliers = m;
  scene.outliers = m_out;
  scene.q.reserve(m + m_out);
  scene.q_prime.reserve(m + m_out);
  for (int i = 0; i < m; ++i)
    scene.q.emplace_back(rng.uniform(0, extent), rng.uniform(0, extent));

  const double angle = rng.uniform(0, 2 * M_PI);
  const Eigen::Rotation2Dd rot(angle);
  const Eigen::Vector2d shift(rng.uniform(-0.5 * extent, 0.5 * extent),
                              rng.uniform(-0.5 * extent, 0.5 * extent));
  for (int i = 0; i < m; ++i) {
    Eigen::Vector2d p = rot * scene.q[i] + shift;
    if (delta_pts > 0) p += delta_pts * Eigen::Vector2d(rng.gaussian(), rng.gaussian());
    scene.q_prime.push_back(p);
  }
  // Outliers are drawn independently for each cloud, in the same region.
  for (int i = 0; i < m_out; ++i)
    scene.q.emplace_back(rng.uniform(0, extent), rng.uniform(0, extent));
  for (int i = 0; i < m_out; ++i)
    scene.q_prime.emplace_back(rng.uniform(0, extent), rng.uniform(0, extent));
  return scene;
}

}  // namespace pgs::apps
