#include "pgs/quadratic.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include <Eigen/Eigenvalues>

#include "pgs/errors.hpp"

namespace pgs {

QuadraticCost::QuadraticCost(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("QuadraticCost: matrix must be square");
  a_ = 0.5 * (a + a.transpose());
}

double QuadraticCost::value(const Eigen::VectorXd& x) const {
  if (x.size() != a_.rows()) throw DimensionMismatch("QuadraticCost::value: wrong dimension");
  return x.dot(a_ * x);
}

Eigen::VectorXd QuadraticCost::euclid_grad(const Eigen::VectorXd& x) const {
  if (x.size() != a_.rows())
    throw DimensionMismatch("QuadraticCost::euclid_grad: wrong dimension");
  return 2.0 * a_ * x;
}

namespace {

// Dense eigendecomposition is exact but cubic; association instances reach
// several hundred dimensions, where power iteration on the (shifted) matrix
// is orders of magnitude cheaper and still deterministic.
constexpr Eigen::Index kDenseEigenLimit = 64;

/// Dominant eigenpair of a symmetric PSD matrix by power iteration with a
/// deterministic start and a residual-based stop. Returns
/// (eigenvalue, eigenvector).
std::pair<double, Eigen::VectorXd> psd_dominant_eigenpair(const Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = 1.0 + static_cast<double>(i) / n;
  v.normalize();
  double lambda = 0;
  for (int iter = 0; iter < 200000; ++iter) {
    const Eigen::VectorXd w = m * v;
    lambda = v.dot(w);
    if ((w - lambda * v).norm() <= 1e-12 * std::max(1.0, std::abs(lambda))) break;
    const double norm = w.norm();
    if (norm == 0) return {0.0, v};
    v = w / norm;
  }
  return {lambda, v};
}

/// sigma_max of a symmetric matrix via power iteration on A^2, which is PSD
/// and immune to tied +-eigenvalues.
double power_sigma_max(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = 1.0 + static_cast<double>(i) / n;
  v.normalize();
  double lambda2 = 0;
  for (int iter = 0; iter < 200000; ++iter) {
    const Eigen::VectorXd w = a * (a * v);
    lambda2 = v.dot(w);
    if ((w - lambda2 * v).norm() <= 1e-12 * std::max(1.0, lambda2)) break;
    const double norm = w.norm();
    if (norm == 0) return 0.0;
    v = w / norm;
  }
  return std::sqrt(std::max(lambda2, 0.0));
}

}  // namespace

std::optional<double> QuadraticCost::lipschitz() const {
  if (a_.rows() <= kDenseEigenLimit) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a_, Eigen::EigenvaluesOnly);
    return 2.0 * es.eigenvalues().cwiseAbs().maxCoeff();
  }
  return 2.0 * power_sigma_max(a_);
}

BottomEigenvector QuadraticCost::bottom_eigenvector() const {
  Eigen::VectorXd v;
  double lambda_min, gap;
  if (a_.rows() <= kDenseEigenLimit) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a_);
    v = es.eigenvectors().col(0);
    lambda_min = es.eigenvalues()[0];
    gap = a_.rows() > 1 ? es.eigenvalues()[1] - es.eigenvalues()[0]
                        : std::numeric_limits<double>::infinity();
  } else {
    // Shift so the bottom of A becomes the dominant eigenvalue of the PSD
    // matrix s I - A.
    const double s = power_sigma_max(a_);
    const Eigen::MatrixXd shifted =
        Eigen::MatrixXd(s * Eigen::MatrixXd::Identity(a_.rows(), a_.cols()) - a_);
    auto [mu, vec] = psd_dominant_eigenpair(shifted);
    v = vec;
    lambda_min = s - mu;
    // Gap from one deflated power iteration.
    const Eigen::MatrixXd deflated = shifted - mu * v * v.transpose();
    gap = mu - psd_dominant_eigenpair(deflated).first;
  }
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] != 0.0) {
      if (v[i] < 0.0) v = -v;
      break;
    }
  }
  return BottomEigenvector{SpherePoint(v), lambda_min, gap};
}

}  // namespace pgs
