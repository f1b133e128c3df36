#pragma once

#include <optional>

#include <Eigen/Core>

namespace pgs {

/// Smooth part g of the composite cost. Implementations must be safe for
/// shared read-only access.
class SmoothCost {
 public:
  virtual ~SmoothCost() = default;

  virtual double value(const Eigen::VectorXd& x) const = 0;
  virtual Eigen::VectorXd euclid_grad(const Eigen::VectorXd& x) const = 0;

  /// A constant L for which the pullback g(R_x(v)) satisfies the quadratic
  /// upper bound, when one is known in closed form.
  virtual std::optional<double> lipschitz() const { return std::nullopt; }
};

class Regularizer;

/// The composite problem min g(x) + h(x) on the unit sphere. Non-owning:
/// callers keep g and h alive for the duration of a solve.
struct ProblemInstance {
  const SmoothCost* g = nullptr;
  const Regularizer* h = nullptr;
  Eigen::Index dim = 0;
};

}  // namespace pgs
