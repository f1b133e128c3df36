#pragma once

#include <memory>

#include <Eigen/Core>

#include "pgs/errors.hpp"

namespace pgs {

/// Bijection between a state vector and its matrix view.
///
/// Full(rows, cols) is the standard column-wise vectorization; the map is a
/// Euclidean isometry. SymUpperTri(dim) packs the upper triangle of a
/// symmetric matrix column by column, so vec_t(Q) for a 4x4 symmetric Q has
/// 10 entries in the order Q00, Q01, Q11, Q02, Q12, Q22, Q03, Q13, Q23, Q33.
/// SymUpperTri is *not* an isometry: off-diagonal entries appear once in the
/// vector but twice in the matrix.
class Matricizer {
 public:
  static Matricizer full(Eigen::Index rows, Eigen::Index cols);
  static Matricizer sym_upper_tri(Eigen::Index dim);

  Eigen::Index vec_size() const { return vec_size_; }
  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }

  /// mat / mat_t. Throws DimensionMismatch on a wrong-length vector.
  Eigen::MatrixXd to_matrix(const Eigen::VectorXd& v) const;
  /// vec / vec_t. Throws DimensionMismatch on a wrong-shape matrix.
  Eigen::VectorXd to_vector(const Eigen::MatrixXd& m) const;

 private:
  enum class Mode { kFull, kSymUpperTri };
  Matricizer(Mode mode, Eigen::Index rows, Eigen::Index cols);

  Mode mode_;
  Eigen::Index rows_, cols_, vec_size_;
};

/// Element-wise soft threshold sgn(w_i) (|w_i| - s)_+ with s >= 0.
Eigen::VectorXd l1_prox(const Eigen::VectorXd& w, double s);

/// Singular value soft thresholding: with mat(w) = U S V^T, returns
/// vec(U (S - s I)_+ V^T).
Eigen::VectorXd nuclear_prox(const Eigen::VectorXd& w, double s, const Matricizer& m);

/// Proximal of s1 * nuclear + s2 * spectral norm. Singular values are
/// shrunk by s1, then the spectral part clips the top of the spectrum at the
/// level theta solving sum_i (sigma_i - theta)_+ = s2 (or to zero when the
/// whole spectrum fits under s2). When the largest singular value stands
/// clear of the rest, sigma_1 - sigma_2 >= s2 after the s1 shrink, this
/// reduces to subtracting s2 from sigma_1 alone.
Eigen::VectorXd nuclear_spectral_prox(const Eigen::VectorXd& w, double s1, double s2,
                                      const Matricizer& m);

/// Convex, absolutely homogeneous regularizer h with a closed-form proximal.
class Regularizer {
 public:
  virtual ~Regularizer() = default;

  /// h(x) >= 0.
  virtual double value(const Eigen::VectorXd& x) const = 0;

  /// prox_{t h}(w) for t >= 0. Throws NegativeScale for t < 0.
  virtual Eigen::VectorXd prox(const Eigen::VectorXd& w, double t) const = 0;
};

/// h == 0; the proximal is the identity.
class ZeroReg final : public Regularizer {
 public:
  double value(const Eigen::VectorXd&) const override { return 0.0; }
  Eigen::VectorXd prox(const Eigen::VectorXd& w, double t) const override;
};

/// h(x) = lambda * ||x||_1.
class L1Reg final : public Regularizer {
 public:
  explicit L1Reg(double lambda);
  double value(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd prox(const Eigen::VectorXd& w, double t) const override;
  double lambda() const { return lambda_; }

 private:
  double lambda_;
};

/// h(x) = lambda * ||mat(x)||_* (sum of singular values).
class NuclearReg final : public Regularizer {
 public:
  NuclearReg(double lambda, Matricizer m);
  double value(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd prox(const Eigen::VectorXd& w, double t) const override;
  double lambda() const { return lambda_; }
  const Matricizer& matricizer() const { return m_; }

 private:
  double lambda_;
  Matricizer m_;
};

/// h(x) = lambda1 * ||mat(x)||_* + lambda2 * ||mat(x)||_2 (spectral norm).
class NuclearSpectralReg final : public Regularizer {
 public:
  NuclearSpectralReg(double lambda1, double lambda2, Matricizer m);
  double value(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd prox(const Eigen::VectorXd& w, double t) const override;
  double lambda1() const { return lambda1_; }
  double lambda2() const { return lambda2_; }
  const Matricizer& matricizer() const { return m_; }

 private:
  double lambda1_, lambda2_;
  Matricizer m_;
};

}  // namespace pgs
