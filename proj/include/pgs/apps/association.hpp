#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "pgs/manifold.hpp"

namespace pgs::apps {

/// Pairwise-consistency affinity between association hypotheses. Hypothesis
/// (i, i') that point i of cloud Q matches point i' of cloud Q' lives at row
/// i * count_b + i'. The matrix is symmetric with zero diagonal and entries
/// in [0, 4.5]; the solver minimizes x^T (-M) x on the sphere.
struct AssociationProblem {
  Eigen::MatrixXd affinity;
  int count_a = 0;
  int count_b = 0;
  double delta_d = 0;

  int hypothesis_index(int i, int i_prime) const { return i * count_b + i_prime; }
  std::pair<int, int> hypothesis(int row) const { return {row / count_b, row % count_b}; }
  Eigen::Index dim() const { return affinity.rows(); }
};

/// Builds the affinity from the change of pairwise distances:
/// 4.5 - (d_ij - d_i'j')^2 / (2 delta_d^2) when |d_ij - d_i'j'| < 3 delta_d,
/// else 0; diagonal zero. Parallelized over rows when OpenMP is enabled.
AssociationProblem build_association(const std::vector<Eigen::Vector2d>& qa,
                                     const std::vector<Eigen::Vector2d>& qb, double delta_d);

/// Single-threaded reference used to validate the parallel build.
AssociationProblem build_association_serial(const std::vector<Eigen::Vector2d>& qa,
                                            const std::vector<Eigen::Vector2d>& qb,
                                            double delta_d);

/// Automatic regularization strength sigma_max(M) / (sqrt(n) - 1), the
/// largest weight under which a solution can still beat every one-hot
/// hypothesis vector e_k, whose total cost is exactly lambda.
double lambda_auto(const AssociationProblem& p);

/// Greedy one-to-one extraction: repeatedly take the largest remaining |x|
/// entry, emit its hypothesis, drop all hypotheses sharing either point.
/// Ties break toward the lowest hypothesis index. Stops when the remaining
/// mass falls below 1e-6 or no hypothesis is left.
std::vector<std::pair<int, int>> extract_matches(const SpherePoint& x,
                                                 const AssociationProblem& p);

struct AssociationScene {
  std::vector<Eigen::Vector2d> q;
  std::vector<Eigen::Vector2d> q_prime;
  int inliers = 0;   ///< ground truth: point i of q matches point i of q_prime
  int outliers = 0;  ///< appended after the inliers, independently drawn per cloud
};

/// Simulated association instance: m points uniform in
/// [0, 256 sqrt(m/10)]^2, Q' a rigid transform of Q plus Gaussian noise of
/// standard deviation delta_pts, plus m_out uniform outliers in both clouds.
AssociationScene simulate_association(std::uint64_t seed, int m, int m_out, double delta_pts);

}  // namespace pgs::apps
