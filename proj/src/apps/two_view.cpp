#include "pgs/apps/two_view.hpp"

#include <cmath>

#include <Eigen/Geometry>
#include <Eigen/SVD>

#include "pgs/errors.hpp"
#include "pgs/rng.hpp"

namespace pgs::apps {
namespace {

NormalizationTransform normalize_cloud(const std::vector<Eigen::Vector2d>& pts) {
  Eigen::Vector2d centroid = Eigen::Vector2d::Zero();
  for (const auto& p : pts) centroid += p;
  centroid /= static_cast<double>(pts.size());
  double mean_dist = 0;
  for (const auto& p : pts) mean_dist += (p - centroid).norm();
  mean_dist /= static_cast<double>(pts.size());
  if (mean_dist <= 1e-12) throw DegenerateCloud("hartley_normalize: all points coincide");
  const double s = std::sqrt(2.0) / mean_dist;
  NormalizationTransform t;
  t.to_normalized << s, 0, -s * centroid.x(), 0, s, -s * centroid.y(), 0, 0, 1;
  t.to_pixels << 1 / s, 0, centroid.x(), 0, 1 / s, centroid.y(), 0, 0, 1;
  return t;
}

std::vector<Eigen::Vector2d> transform_points(const Eigen::Matrix3d& t,
                                   const std::vector<Eigen::Vector2d>& pts) {
  std::vector<Eigen::Vector2d> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    const Eigen::Vector3d q = t * p.homogeneous();
    out.push_back(q.hnormalized());
  }
  return out;
}

Eigen::Matrix3d rank2_rounded(const Eigen::Matrix3d& f) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(f, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Vector3d sigma = svd.singularValues();
  sigma[2] = 0.0;
  return svd.matrixU() * sigma.asDiagonal() * svd.matrixV().transpose();
}

Eigen::Matrix3d denormalize(const Eigen::Matrix3d& f_norm, const NormalizedCorrespondences& n) {
  // p_hat' = T_b p', p_hat = T_a p and p_hat'^T F_hat p_hat = 0, so the
  // pixel-space matrix is T_b^T F_hat T_a.
  Eigen::Matrix3d f = n.transform_b.to_normalized.transpose() * f_norm *
                      n.transform_a.to_normalized;
  return f / f.norm();
}

}  // namespace

NormalizedCorrespondences hartley_normalize(const CorrespondenceSet& c) {
  if (c.size() < 2 || c.points_a.size() != c.points_b.size())
    throw DimensionMismatch("hartley_normalize: need matched clouds with at least 2 points");
  NormalizedCorrespondences out;
  out.transform_a = normalize_cloud(c.points_a);
  out.transform_b = normalize_cloud(c.points_b);
  out.points.points_a = transform_points(out.transform_a.to_normalized, c.points_a);
  out.points.points_b = transform_points(out.transform_b.to_normalized, c.points_b);
  return out;
}

QuadraticCost build_fundmat_design(const CorrespondenceSet& c) {
  const auto m = static_cast<Eigen::Index>(c.size());
  if (m < 8) throw TooFewCorrespondences("build_fundmat_design: need at least 8 pairs");
  Eigen::MatrixXd h(m, 9);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Eigen::Vector3d p = c.points_a[i].homogeneous();
    const Eigen::Vector3d q = c.points_b[i].homogeneous();
    for (int col = 0; col < 3; ++col) h.block<1, 3>(i, 3 * col) = p[col] * q.transpose();
  }
  return QuadraticCost(h.transpose() * h / static_cast<double>(m));
}

Eigen::Matrix3d eight_point(const CorrespondenceSet& c) {
  const NormalizedCorrespondences norm = hartley_normalize(c);
  const QuadraticCost design = build_fundmat_design(norm.points);
  const Matricizer m33 = Matricizer::full(3, 3);
  const Eigen::Matrix3d f_norm =
      rank2_rounded(m33.to_matrix(design.bottom_eigenvector().point.coords()));
  return denormalize(f_norm, norm);
}

FundmatEstimate pgs_fundmat_detailed(const CorrespondenceSet& c, double lambda,
                                     FundmatVariant variant, const SolverConfig& cfg) {
  SolverConfig run_cfg = cfg;
  if (variant == FundmatVariant::kTrunc5) run_cfg.max_iters = 5;
  if (variant == FundmatVariant::kTrunc10) run_cfg.max_iters = 10;

  const NormalizedCorrespondences norm = hartley_normalize(c);
  const QuadraticCost design = build_fundmat_design(norm.points);
  const Matricizer m33 = Matricizer::full(3, 3);
  const NuclearReg reg(lambda, m33);
  const ProblemInstance problem{&design, &reg, 9};
  const SpherePoint x0 = design.bottom_eigenvector().point;
  SolveResult result = solve(problem, x0, run_cfg);

  FundmatEstimate est;
  est.f_unrounded = m33.to_matrix(result.x.coords());
  est.f = denormalize(rank2_rounded(est.f_unrounded), norm);
  est.trace = std::move(result.trace);
  return est;
}

Eigen::Matrix3d pgs_fundmat(const CorrespondenceSet& c, double lambda, FundmatVariant variant,
                            const SolverConfig& cfg) {
  return pgs_fundmat_detailed(c, lambda, variant, cfg).f;
}

double epipolar_distance(const Eigen::Matrix3d& f, const CorrespondenceSet& c) {
  if (f.norm() == 0) throw ZeroVector("epipolar_distance: zero matrix");
  auto line_distance = [](const Eigen::Vector3d& line, const Eigen::Vector2d& point) {
    const double dir2 = line[0] * line[0] + line[1] * line[1];
    if (dir2 < 1e-18) throw DegenerateLine("epipolar_distance: line has no direction");
    return std::abs(point.homogeneous().dot(line)) / std::sqrt(dir2);
  };
  double sum = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Eigen::Vector3d p = c.points_a[i].homogeneous();
    const Eigen::Vector3d q = c.points_b[i].homogeneous();
    sum += line_distance(f * p, c.points_b[i]);
    sum += line_distance(f.transpose() * q, c.points_a[i]);
  }
  return sum / static_cast<double>(2 * c.size());
}

double reprojection_error(const Eigen::Matrix3d& f, const CorrespondenceSet& c) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(f, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Vector3d sigma = svd.singularValues();
  if (sigma[2] > 1e-6 * sigma[0])
    throw RankDeficiencyViolation("reprojection_error: F must have rank 2");

  // Left epipole: F^T e' = 0.
  const Eigen::Vector3d epipole = svd.matrixU().col(2);
  Eigen::Matrix3d cross;
  cross << 0, -epipole.z(), epipole.y(), epipole.z(), 0, -epipole.x(), -epipole.y(),
      epipole.x(), 0;
  Eigen::Matrix<double, 3, 4> p1 = Eigen::Matrix<double, 3, 4>::Zero();
  p1.leftCols<3>() = Eigen::Matrix3d::Identity();
  Eigen::Matrix<double, 3, 4> p2;
  p2.leftCols<3>() = cross * f;
  p2.col(3) = epipole;

  double sum = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Eigen::Matrix4d design;
    design.row(0) = c.points_a[i].x() * p1.row(2) - p1.row(0);
    design.row(1) = c.points_a[i].y() * p1.row(2) - p1.row(1);
    design.row(2) = c.points_b[i].x() * p2.row(2) - p2.row(0);
    design.row(3) = c.points_b[i].y() * p2.row(2) - p2.row(1);
    Eigen::JacobiSVD<Eigen::Matrix4d> tri(design, Eigen::ComputeFullV);
    const Eigen::Vector4d point = tri.matrixV().col(3);
    const Eigen::Vector3d proj1 = p1 * point;
    const Eigen::Vector3d proj2 = p2 * point;
    sum += (proj1.hnormalized() - c.points_a[i]).norm();
    sum += (proj2.hnormalized() - c.points_b[i]).norm();
  }
  return sum / static_cast<double>(2 * c.size());
}

TwoViewScene gen_two_view(std::uint64_t seed, int m, double noise_px) {
  if (m < 8) throw TooFewCorrespondences("gen_two_view: need at least 8 points");
  Rng rng(seed);

  Eigen::Matrix3d k;
  k << 800, 0, 320, 0, 800, 240, 0, 0, 1;

  // Camera 1 at the origin looking down +z; camera 2 offset with a small
  // rotation back toward the scene.
  const Eigen::Matrix3d r1 = Eigen::Matrix3d::Identity();
  const Eigen::Vector3d t1 = Eigen::Vector3d::Zero();
  const Eigen::AngleAxisd a2(-0.15, Eigen::Vector3d::UnitY());
  const Eigen::Matrix3d r2 = a2.toRotationMatrix();
  const Eigen::Vector3d c2(1.0, 0.2, 0.0);  // center of camera 2
  const Eigen::Vector3d t2 = -r2 * c2;

  TwoViewScene scene;
  scene.correspondences.points_a.reserve(m);
  scene.correspondences.points_b.reserve(m);
  for (int i = 0; i < m; ++i) {
    const Eigen::Vector3d x(rng.uniform(-2.0, 2.0), rng.uniform(-1.5, 1.5),
                            rng.uniform(4.0, 8.0));
    const Eigen::Vector3d img1 = k * (r1 * x + t1);
    const Eigen::Vector3d img2 = k * (r2 * x + t2);
    Eigen::Vector2d pa = img1.hnormalized();
    Eigen::Vector2d pb = img2.hnormalized();
    if (noise_px > 0) {
      pa += noise_px * Eigen::Vector2d(rng.gaussian(), rng.gaussian());
      pb += noise_px * Eigen::Vector2d(rng.gaussian(), rng.gaussian());
    }
    scene.correspondences.points_a.push_back(pa);
    scene.correspondences.points_b.push_back(pb);
  }

  // F = K^-T [t]x R K^-1 for the relative pose (R, t) from camera 1 to 2.
  const Eigen::Matrix3d r_rel = r2 * r1.transpose();
  const Eigen::Vector3d t_rel = t2 - r_rel * t1;
  Eigen::Matrix3d t_cross;
  t_cross << 0, -t_rel.z(), t_rel.y(), t_rel.z(), 0, -t_rel.x(), -t_rel.y(), t_rel.x(), 0;
  Eigen::Matrix3d f = k.transpose().inverse() * t_cross * r_rel * k.inverse();
  scene.f_true = f / f.norm();
  return scene;
}

}  // namespace pgs::apps
