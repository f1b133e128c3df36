#include "pgs/regularizers.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace pgs {
namespace {

void require_nonnegative_scale(double s) {
  if (s < 0) throw NegativeScale("proximal scale must be nonnegative");
}

Eigen::JacobiSVD<Eigen::MatrixXd> svd_of(const Eigen::MatrixXd& m) {
  return Eigen::JacobiSVD<Eigen::MatrixXd>(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
}

/// Shrunken spectrum for the nuclear-spectral proximal. sigma must be sorted
/// descending (Eigen's SVD convention). Applies (sigma - s1)_+, then the
/// proximal of the sup-norm on the remainder: by Moreau's decomposition that
/// is u - proj onto the l1 ball of radius s2, which for u >= 0 clips at a
/// common water level.
Eigen::VectorXd shrink_spectrum(const Eigen::VectorXd& sigma, double s1, double s2) {
  Eigen::VectorXd u = (sigma.array() - s1).max(0.0);
  if (s2 == 0.0) return u;
  if (u.sum() <= s2) return Eigen::VectorXd::Zero(u.size());
  // Find theta with sum_i (u_i - theta)_+ = s2; u is sorted descending.
  double cumulative = 0.0;
  double theta = 0.0;
  for (Eigen::Index k = 0; k < u.size(); ++k) {
    cumulative += u[k];
    const double candidate = (cumulative - s2) / static_cast<double>(k + 1);
    const double next = (k + 1 < u.size()) ? u[k + 1] : 0.0;
    if (candidate >= next) {
      theta = candidate;
      break;
    }
  }
  return u.array().min(theta);
}

}  // namespace

Matricizer::Matricizer(Mode mode, Eigen::Index rows, Eigen::Index cols)
    : mode_(mode), rows_(rows), cols_(cols) {
  vec_size_ = (mode == Mode::kFull) ? rows * cols : rows * (rows + 1) / 2;
}

Matricizer Matricizer::full(Eigen::Index rows, Eigen::Index cols) {
  return Matricizer(Mode::kFull, rows, cols);
}

Matricizer Matricizer::sym_upper_tri(Eigen::Index dim) {
  return Matricizer(Mode::kSymUpperTri, dim, dim);
}

Eigen::MatrixXd Matricizer::to_matrix(const Eigen::VectorXd& v) const {
  if (v.size() != vec_size_) throw DimensionMismatch("matricizer: wrong vector length");
  if (mode_ == Mode::kFull) {
    return Eigen::Map<const Eigen::MatrixXd>(v.data(), rows_, cols_);
  }
  Eigen::MatrixXd m(rows_, rows_);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < rows_; ++j)
    for (Eigen::Index i = 0; i <= j; ++i) {
      m(i, j) = v[k];
      m(j, i) = v[k];
      ++k;
    }
  return m;
}

Eigen::VectorXd Matricizer::to_vector(const Eigen::MatrixXd& m) const {
  if (m.rows() != rows_ || m.cols() != cols_)
    throw DimensionMismatch("matricizer: wrong matrix shape");
  if (mode_ == Mode::kFull) {
    return Eigen::Map<const Eigen::VectorXd>(m.data(), vec_size_);
  }
  Eigen::VectorXd v(vec_size_);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < rows_; ++j)
    for (Eigen::Index i = 0; i <= j; ++i) v[k++] = 0.5 * (m(i, j) + m(j, i));
  return v;
}

Eigen::VectorXd l1_prox(const Eigen::VectorXd& w, double s) {
  require_nonnegative_scale(s);
  return w.array().sign() * (w.array().abs() - s).max(0.0);
}

Eigen::VectorXd nuclear_prox(const Eigen::VectorXd& w, double s, const Matricizer& m) {
  require_nonnegative_scale(s);
  if (s == 0.0) return w;
  const auto svd = svd_of(m.to_matrix(w));
  const Eigen::VectorXd shrunk = (svd.singularValues().array() - s).max(0.0);
  return m.to_vector(svd.matrixU() * shrunk.asDiagonal() * svd.matrixV().transpose());
}

Eigen::VectorXd nuclear_spectral_prox(const Eigen::VectorXd& w, double s1, double s2,
                                      const Matricizer& m) {
  require_nonnegative_scale(s1);
  require_nonnegative_scale(s2);
  if (s1 == 0.0 && s2 == 0.0) return w;
  const auto svd = svd_of(m.to_matrix(w));
  const Eigen::VectorXd shrunk = shrink_spectrum(svd.singularValues(), s1, s2);
  return m.to_vector(svd.matrixU() * shrunk.asDiagonal() * svd.matrixV().transpose());
}

Eigen::VectorXd ZeroReg::prox(const Eigen::VectorXd& w, double t) const {
  require_nonnegative_scale(t);
  return w;
}

L1Reg::L1Reg(double lambda) : lambda_(lambda) {
  if (lambda < 0) throw NegativeScale("L1Reg: lambda must be nonnegative");
}

double L1Reg::value(const Eigen::VectorXd& x) const { return lambda_ * x.lpNorm<1>(); }

Eigen::VectorXd L1Reg::prox(const Eigen::VectorXd& w, double t) const {
  require_nonnegative_scale(t);
  return l1_prox(w, t * lambda_);
}

NuclearReg::NuclearReg(double lambda, Matricizer m) : lambda_(lambda), m_(m) {
  if (lambda < 0) throw NegativeScale("NuclearReg: lambda must be nonnegative");
}

double NuclearReg::value(const Eigen::VectorXd& x) const {
  return lambda_ * svd_of(m_.to_matrix(x)).singularValues().sum();
}

Eigen::VectorXd NuclearReg::prox(const Eigen::VectorXd& w, double t) const {
  require_nonnegative_scale(t);
  if (t == 0.0) return w;
  return nuclear_prox(w, t * lambda_, m_);
}

NuclearSpectralReg::NuclearSpectralReg(double lambda1, double lambda2, Matricizer m)
    : lambda1_(lambda1), lambda2_(lambda2), m_(m) {
  if (lambda1 < 0 || lambda2 < 0)
    throw NegativeScale("NuclearSpectralReg: weights must be nonnegative");
}

double NuclearSpectralReg::value(const Eigen::VectorXd& x) const {
  const Eigen::VectorXd sigma = svd_of(m_.to_matrix(x)).singularValues();
  return lambda1_ * sigma.sum() + lambda2_ * sigma[0];
}

Eigen::VectorXd NuclearSpectralReg::prox(const Eigen::VectorXd& w, double t) const {
  require_nonnegative_scale(t);
  if (t == 0.0) return w;
  return nuclear_spectral_prox(w, t * lambda1_, t * lambda2_, m_);
}

}  // namespace pgs
