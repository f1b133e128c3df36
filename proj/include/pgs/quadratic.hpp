#pragma once

#include <Eigen/Core>

#include "pgs/manifold.hpp"
#include "pgs/smooth_cost.hpp"

namespace pgs {

/// Result of the closed-form Rayleigh quotient solve: the unit eigenvector
/// of the smallest eigenvalue, with the gap to the next eigenvalue so
/// callers can detect a degenerate bottom eigenspace.
struct BottomEigenvector {
  SpherePoint point;
  double eigenvalue;
  double eigengap;
  bool degenerate() const { return eigengap < 1e-10; }
};

/// g(x) = x^T A x for a symmetric A. The matrix is symmetrized at
/// construction, (A + A^T)/2, since Gram products accumulate asymmetry in
/// floating point.
class QuadraticCost final : public SmoothCost {
 public:
  explicit QuadraticCost(const Eigen::MatrixXd& a);

  double value(const Eigen::VectorXd& x) const override;

  /// 2 A x.
  Eigen::VectorXd euclid_grad(const Eigen::VectorXd& x) const override;

  /// L = 2 sigma_max(A), the largest singular value, not the largest
  /// eigenvalue.
  std::optional<double> lipschitz() const override;

  /// Eigenvector of the smallest eigenvalue, sign fixed so the first
  /// nonzero coordinate is positive.
  BottomEigenvector bottom_eigenvector() const;

  const Eigen::MatrixXd& matrix() const { return a_; }
  Eigen::Index dim() const { return a_.rows(); }

 private:
  Eigen::MatrixXd a_;
};

}  // namespace pgs
