#include "pgs/manifold.hpp"

#include <algorithm>
#include <cmath>

namespace pgs {

SpherePoint::SpherePoint(Eigen::VectorXd v) : coords_(std::move(v)) {
  const double n = coords_.norm();
  if (n <= 1e-12) throw ZeroVector("cannot place the zero vector on the sphere");
  coords_ /= n;
}

TangentVector::TangentVector(SpherePoint base, Eigen::VectorXd dir)
    : base_(std::move(base)), dir_(std::move(dir)) {
  if (base_.dim() != dir_.size())
    throw DimensionMismatch("tangent dir dimension does not match base point");
  const double radial = std::abs(base_.coords().dot(dir_));
  if (radial > 1e-9 * std::max(1.0, dir_.norm()))
    throw BaseMismatch("vector is not tangent at its base point");
}

SpherePoint normalize(const Eigen::VectorXd& v) { return SpherePoint(v); }

TangentVector tangent_project(const SpherePoint& x, const Eigen::VectorXd& w) {
  if (x.dim() != w.size()) throw DimensionMismatch("tangent_project: dim(w) != dim(x)");
  Eigen::VectorXd dir = w - x.coords().dot(w) * x.coords();
  return TangentVector(x, std::move(dir));
}

TangentVector riemannian_gradient(const SpherePoint& x, const Eigen::VectorXd& euclid_grad) {
  return tangent_project(x, euclid_grad);
}

SpherePoint retract(const SpherePoint& x, const TangentVector& v) {
  if (!(v.base() == x)) throw BaseMismatch("retract: tangent vector is based elsewhere");
  return SpherePoint(x.coords() + v.dir());
}

TangentVector inverse_retract(const SpherePoint& anchor, const SpherePoint& target) {
  if (anchor.dim() != target.dim())
    throw DimensionMismatch("inverse_retract: dimension mismatch");
  const double c = target.dot(anchor);
  if (c <= 1e-9)
    throw HemisphereViolation("inverse_retract: points are not in the same open hemisphere");
  Eigen::VectorXd dir = target.coords() / c - anchor.coords();
  return TangentVector(anchor, std::move(dir));
}

}  // namespace pgs
