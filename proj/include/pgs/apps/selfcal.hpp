#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "pgs/apps/two_view.hpp"
#include "pgs/quadratic.hpp"
#include "pgs/regularizers.hpp"
#include "pgs/solver.hpp"

namespace pgs::apps {

/// Projective reconstruction of a synthetic scene, expressed in normalized
/// image units (the common transformation of the target's step 1 already
/// applied), together with the Euclidean ground truth kept for scoring.
struct ProjectiveCameraSet {
  std::vector<Eigen::Matrix<double, 3, 4>> cameras;          ///< P~_i, unit Frobenius
  std::vector<std::vector<Eigen::Vector2d>> image_points;    ///< per camera, normalized units
  NormalizationTransform norm;                               ///< pixels <-> normalized units
  Eigen::MatrixXd gt_points;                                 ///< n_pts x 3, meters
  std::vector<Eigen::Matrix<double, 3, 4>> gt_cameras;       ///< pixel-unit Euclidean cameras
  double image_width = 1280;
  double image_height = 960;
  std::size_t camera_count() const { return cameras.size(); }
};

/// Row of a linear system in vec_t(Q): coefficients of the bilinear form
/// u^T Q v for symmetric 4x4 Q.
Eigen::Matrix<double, 1, 10> selfcal_bilinear_row(const Eigen::Vector4d& u,
                                                  const Eigen::Vector4d& v);

/// Linear self-calibration design for cameras with K_i = diag(f_i, f_i, 1):
/// per camera the four constraints a^T Q a = b^T Q b, a^T Q b = 0,
/// a^T Q c = 0, b^T Q c = 0 on vec_t(Q) in R^10 (rows normalized), assembled
/// as A = (1/n) sum M_i^T M_i. Requires at least 3 cameras.
QuadraticCost build_selfcal_design(const ProjectiveCameraSet& p);

/// Quasi-Euclidean rectification: guesses f_i = 2 sqrt(m_x^2 + m_y^2) from
/// the per-camera coordinate ranges, solves the DAQ constraints in least
/// squares with these fixed intrinsics, projects to rank 3 and applies the
/// extracted homography to all cameras. Throws RectificationDegenerate when
/// the system is rank-deficient beyond the scale ambiguity or the recovered
/// quadric has a non-positive spectrum.
ProjectiveCameraSet quasi_euclidean_rectify(const ProjectiveCameraSet& p);

enum class SelfcalReg { kNone, kNuclear, kNuclearSpectral };

struct SelfcalOptions {
  SelfcalReg reg = SelfcalReg::kNone;
  double lambda1 = 0.01;   ///< nuclear weight
  double lambda2 = 0.02;   ///< spectral weight (nuclear-spectral only)
  int early_stop = 0;      ///< iteration cap when positive; 0 runs to tolerance
};

struct SelfcalSolution {
  Eigen::Matrix4d daq;                  ///< rank-3 rounded estimate of Q*_inf
  Eigen::Matrix4d upgrade;              ///< H with Q*_inf ~ H diag(1,1,1,0) H^T
  std::vector<Eigen::Matrix3d> intrinsics;  ///< per camera, normalized units
  SolverTrace trace;
};

/// Regularized linear self-calibration on rectified cameras, initialized
/// from the canonical DAQ diag(1,1,1,0). Rounds the estimate to rank 3 by
/// eigendecomposition and extracts H = U diag(sqrt(l1), sqrt(l2), sqrt(l3), 1).
/// Throws NegativeEigenvalues when more than one of the kept eigenvalues is
/// non-positive after the sign fix (the rank-1 trap).
SelfcalSolution selfcal_solve(const ProjectiveCameraSet& p, const SelfcalOptions& opts,
                              const SolverConfig& cfg);

/// Metric point cloud: all image points triangulated under the upgraded
/// cameras P~_i * H.
Eigen::MatrixXd selfcal_reconstruct(const ProjectiveCameraSet& p, const Eigen::Matrix4d& h);

/// Synthetic critical-motion scene: n_pts points in a 3 m diameter ball,
/// n_cams cameras on a 30 m circle oriented towards the point centroid
/// (the exact CMS when delta_cam = 0), orientations perturbed by axis-angle
/// noise of delta_cam radians, image points by delta_img pixels. A seeded
/// random projective homography stands in for projective bundle adjustment:
/// cameras are resected from the noisy normalized image points against the
/// projectively transformed ground truth.
ProjectiveCameraSet gen_cms_scene(std::uint64_t seed, int n_pts, int n_cams, double delta_cam,
                                  double delta_img);

/// RMS residual after the best similarity alignment (scale, orthogonal
/// transform incl. reflection, translation) of est onto gt; rows are points.
/// Reflections are allowed because the metric upgrade is determined only up
/// to a similarity, whose orthogonal part may be improper.
double procrustes_error(const Eigen::MatrixXd& est, const Eigen::MatrixXd& gt);

/// procrustes_error divided by the diameter of the ground-truth cloud.
double relative_reconstruction_error(const Eigen::MatrixXd& est, const Eigen::MatrixXd& gt);

}  // namespace pgs::apps
