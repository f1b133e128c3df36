#pragma once

#include <Eigen/Core>

#include "pgs/errors.hpp"

namespace pgs {

/// A point on the unit sphere in R^n. Construction normalizes the input,
/// so the unit-norm invariant holds exactly up to rounding (within 1e-9).
class SpherePoint {
 public:
  /// Normalizes v onto the sphere. Throws ZeroVector if ||v|| <= 1e-12.
  explicit SpherePoint(Eigen::VectorXd v);

  const Eigen::VectorXd& coords() const { return coords_; }
  Eigen::Index dim() const { return coords_.size(); }

  double dot(const SpherePoint& other) const { return coords_.dot(other.coords_); }

  friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
    return a.coords_.size() == b.coords_.size() && a.coords_ == b.coords_;
  }

 private:
  Eigen::VectorXd coords_;
};

/// A tangent vector at a base point, i.e. dir with base^T dir = 0.
/// Carrying the base point makes cross-base arithmetic a detectable error
/// instead of a silent bug.
class TangentVector {
 public:
  /// Throws if the tangency invariant |<base, dir>| <= 1e-9 * max(1, ||dir||)
  /// is violated.
  TangentVector(SpherePoint base, Eigen::VectorXd dir);

  const SpherePoint& base() const { return base_; }
  const Eigen::VectorXd& dir() const { return dir_; }
  double norm() const { return dir_.norm(); }

 private:
  SpherePoint base_;
  Eigen::VectorXd dir_;
};

/// v / ||v||. Throws ZeroVector if ||v|| <= 1e-12.
SpherePoint normalize(const Eigen::VectorXd& v);

/// Orthogonal projection of w into the tangent space at x:
/// dir = w - <x, w> x.
TangentVector tangent_project(const SpherePoint& x, const Eigen::VectorXd& w);

/// Riemannian gradient: the Euclidean gradient orthogonally projected into
/// the tangent space at x.
TangentVector riemannian_gradient(const SpherePoint& x, const Eigen::VectorXd& euclid_grad);

/// Retraction R_x(v) = (x + v) / ||x + v||. Since <x, v> = 0 the denominator
/// is sqrt(1 + ||v||^2) >= 1 and never degenerates.
SpherePoint retract(const SpherePoint& x, const TangentVector& v);

/// Inverse retraction: the tangent vector at anchor that retracts onto
/// target, target / <target, anchor> - anchor. Requires both points in the
/// same open hemisphere, <target, anchor> > 1e-9; throws HemisphereViolation
/// otherwise.
TangentVector inverse_retract(const SpherePoint& anchor, const SpherePoint& target);

}  // namespace pgs
