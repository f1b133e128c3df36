#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "pgs/quadratic.hpp"
#include "pgs/solver.hpp"

namespace pgs::apps {

/// Point correspondences between two images, in pixels.
struct CorrespondenceSet {
  std::vector<Eigen::Vector2d> points_a;
  std::vector<Eigen::Vector2d> points_b;
  std::size_t size() const { return points_a.size(); }
};

/// Similarity taking pixel coordinates to normalized units and back,
/// as homogeneous 3x3 matrices with T * T_inv = I.
struct NormalizationTransform {
  Eigen::Matrix3d to_normalized;
  Eigen::Matrix3d to_pixels;
};

struct NormalizedCorrespondences {
  CorrespondenceSet points;
  NormalizationTransform transform_a;
  NormalizationTransform transform_b;
};

/// Isotropic normalization per image: centroid to the origin, mean distance
/// sqrt(2). Throws DegenerateCloud when all points of an image coincide.
NormalizedCorrespondences hartley_normalize(const CorrespondenceSet& c);

/// A = (1/m) H^T H where row i of H is p_i^T kron p'_i^T, laid out so that
/// row * vec(F) = p'^T F p under column-wise vectorization. 9x9 positive
/// semidefinite. Requires m >= 8.
QuadraticCost build_fundmat_design(const CorrespondenceSet& c);

/// Normalized eight point algorithm: bottom eigenvector of the design in
/// normalized coordinates, rank-2 rounding by zeroing sigma_3,
/// de-normalization, Frobenius normalization.
Eigen::Matrix3d eight_point(const CorrespondenceSet& c);

enum class FundmatVariant { kFull, kTrunc5, kTrunc10 };

struct FundmatEstimate {
  Eigen::Matrix3d f;            ///< de-normalized, rank-2 rounded, unit Frobenius
  Eigen::Matrix3d f_unrounded;  ///< raw solver output in normalized coordinates
  SolverTrace trace;
};

/// Nuclear-norm regularized estimation: x^T A x + lambda ||mat(x)||_* on the
/// sphere, initialized at the bottom eigenvector of the design, lambda
/// applied in normalized coordinates. Trunc5/Trunc10 cap accepted iterations
/// at 5/10; all variants end with a rank-2 rounding.
FundmatEstimate pgs_fundmat_detailed(const CorrespondenceSet& c, double lambda,
                                     FundmatVariant variant, const SolverConfig& cfg);

/// The rounded estimate alone.
Eigen::Matrix3d pgs_fundmat(const CorrespondenceSet& c, double lambda, FundmatVariant variant,
                            const SolverConfig& cfg);

/// Mean point-to-epipolar-line distance over both images, in pixels:
/// d(p', F p) and d(p, F^T p') averaged over all pairs. Scale invariant in
/// F. Throws DegenerateLine when an epipolar line has no direction.
double epipolar_distance(const Eigen::Matrix3d& f, const CorrespondenceSet& c);

/// Mean reprojection distance of linearly triangulated points under the
/// canonical camera pair [I|0], [[e']x F | e']. Requires rank(F) = 2 within
/// sigma_3 / sigma_1 <= 1e-6; throws RankDeficiencyViolation otherwise.
double reprojection_error(const Eigen::Matrix3d& f, const CorrespondenceSet& c);

struct TwoViewScene {
  CorrespondenceSet correspondences;
  Eigen::Matrix3d f_true;
};

/// Synthetic two-view scene: random 3D points in a box seen by two pinhole
/// cameras, Gaussian pixel noise, ground-truth F from the camera matrices.
TwoViewScene gen_two_view(std::uint64_t seed, int m, double noise_px);

}  // namespace pgs::apps
