#include "pgs/apps/selfcal.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include <Eigen/Eigenvalues>
#include <Eigen/Geometry>
#include <Eigen/SVD>

#include "pgs/errors.hpp"
#include "pgs/rng.hpp"

namespace pgs::apps {
namespace {

struct RoundedDaq {
  Eigen::Matrix4d daq;
  Eigen::Vector3d eigenvalues;  ///< kept eigenvalues, descending
  Eigen::Matrix4d basis;        ///< eigenvectors: kept three then the null one
  int non_positive;             ///< kept eigenvalues <= 0 after the sign fix
};

/// Rank-3 rounding of a symmetric 4x4: drop the eigenvalue of smallest
/// magnitude, flip the global sign if the kept ones sum negative.
RoundedDaq round_daq(const Eigen::Matrix4d& q) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(q);
  Eigen::Vector4d lam = es.eigenvalues();
  int null_idx = 0;
  for (int i = 1; i < 4; ++i)
    if (std::abs(lam[i]) < std::abs(lam[null_idx])) null_idx = i;

  std::vector<int> kept;
  for (int i = 3; i >= 0; --i)
    if (i != null_idx) kept.push_back(i);  // descending eigenvalue order

  double sum = 0;
  for (int i : kept) sum += lam[i];
  const double sign = sum < 0 ? -1.0 : 1.0;

  RoundedDaq out;
  for (int c = 0; c < 3; ++c) {
    out.eigenvalues[c] = sign * lam[kept[c]];
    out.basis.col(c) = es.eigenvectors().col(kept[c]);
  }
  if (sign < 0) {  // negating reversed the order, restore descending
    std::swap(out.eigenvalues[0], out.eigenvalues[2]);
    out.basis.col(0).swap(out.basis.col(2));
  }
  out.basis.col(3) = es.eigenvectors().col(null_idx);
  out.non_positive = static_cast<int>((out.eigenvalues.array() <= 0).count());
  out.daq = out.basis.leftCols<3>() * out.eigenvalues.asDiagonal() *
            out.basis.leftCols<3>().transpose();
  return out;
}

Eigen::Matrix4d upgrade_from(const RoundedDaq& r) {
  // A single non-positive eigenvalue still yields a (poor) upgrade through
  // its magnitude; the reconstruction error then reports the failure.
  Eigen::Vector4d scale(std::sqrt(std::abs(r.eigenvalues[0])),
                        std::sqrt(std::abs(r.eigenvalues[1])),
                        std::sqrt(std::abs(r.eigenvalues[2])), 1.0);
  return r.basis * scale.asDiagonal();
}

Eigen::Matrix<double, 3, 4> resect_camera(const std::vector<Eigen::Vector2d>& image,
                                          const Eigen::MatrixXd& points_h) {
  const Eigen::Index n = points_h.rows();
  Eigen::MatrixXd design(2 * n, 12);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::RowVector4d x = points_h.row(i);
    design.row(2 * i).setZero();
    design.row(2 * i).segment<4>(0) = x;
    design.row(2 * i).segment<4>(8) = -image[i].x() * x;
    design.row(2 * i + 1).setZero();
    design.row(2 * i + 1).segment<4>(4) = x;
    design.row(2 * i + 1).segment<4>(8) = -image[i].y() * x;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinV);
  const Eigen::VectorXd p = svd.matrixV().col(11);
  Eigen::Matrix<double, 3, 4> cam;
  cam.row(0) = p.segment<4>(0);
  cam.row(1) = p.segment<4>(4);
  cam.row(2) = p.segment<4>(8);
  return cam / cam.norm();
}

/// RQ decomposition of the leading 3x3 block, K upper triangular with
/// positive diagonal, used to report intrinsics.
Eigen::Matrix3d intrinsics_of(const Eigen::Matrix<double, 3, 4>& cam) {
  Eigen::Matrix3d flip;
  flip << 0, 0, 1, 0, 1, 0, 1, 0, 0;
  const Eigen::Matrix3d m = flip * cam.leftCols<3>();
  Eigen::HouseholderQR<Eigen::Matrix3d> qr(m.transpose());
  Eigen::Matrix3d r0 = qr.matrixQR().triangularView<Eigen::Upper>();
  Eigen::Matrix3d k = flip * r0.transpose() * flip;
  Eigen::Vector3d d = k.diagonal().array().sign();
  for (int i = 0; i < 3; ++i)
    if (d[i] == 0) d[i] = 1;
  k = k * d.asDiagonal();
  if (k(2, 2) == 0) return k;
  return k / k(2, 2);
}

}  // namespace

Eigen::Matrix<double, 1, 10> selfcal_bilinear_row(const Eigen::Vector4d& u,
                                                  const Eigen::Vector4d& v) {
  Eigen::Matrix<double, 1, 10> row;
  int k = 0;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i <= j; ++i) {
      row[k] = (i == j) ? u[i] * v[i] : u[i] * v[j] + u[j] * v[i];
      ++k;
    }
  return row;
}

QuadraticCost build_selfcal_design(const ProjectiveCameraSet& p) {
  if (p.camera_count() < 3) throw TooFewCameras("build_selfcal_design: need >= 3 cameras");
  Eigen::Matrix<double, 10, 10> a = Eigen::Matrix<double, 10, 10>::Zero();
  for (const auto& cam : p.cameras) {
    const Eigen::Vector4d at = cam.row(0);
    const Eigen::Vector4d bt = cam.row(1);
    const Eigen::Vector4d ct = cam.row(2);
    Eigen::Matrix<double, 4, 10> m;
    m.row(0) = selfcal_bilinear_row(at, at) - selfcal_bilinear_row(bt, bt);
    m.row(1) = selfcal_bilinear_row(at, bt);
    m.row(2) = selfcal_bilinear_row(at, ct);
    m.row(3) = selfcal_bilinear_row(bt, ct);
    for (int r = 0; r < 4; ++r) {
      const double norm = m.row(r).norm();
      if (norm > 0) m.row(r) /= norm;  // equalize the constraint types
    }
    a += m.transpose() * m;
  }
  return QuadraticCost(a / static_cast<double>(p.camera_count()));
}

ProjectiveCameraSet quasi_euclidean_rectify(const ProjectiveCameraSet& p) {
  if (p.camera_count() < 3) throw TooFewCameras("quasi_euclidean_rectify: need >= 3 cameras");
  const auto n = static_cast<Eigen::Index>(p.camera_count());
  Eigen::MatrixXd design(5 * n, 10);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& pts = p.image_points[i];
    double min_x = pts[0].x(), max_x = pts[0].x(), min_y = pts[0].y(), max_y = pts[0].y();
    for (const auto& q : pts) {
      min_x = std::min(min_x, q.x());
      max_x = std::max(max_x, q.x());
      min_y = std::min(min_y, q.y());
      max_y = std::max(max_y, q.y());
    }
    const double mx = max_x - min_x;
    const double my = max_y - min_y;
    const double f_guess = 2.0 * std::sqrt(mx * mx + my * my);

    const Eigen::Vector4d at = p.cameras[i].row(0);
    const Eigen::Vector4d bt = p.cameras[i].row(1);
    const Eigen::Vector4d ct = p.cameras[i].row(2);
    const double f2 = f_guess * f_guess;
    design.row(5 * i + 0) = selfcal_bilinear_row(at, at) - f2 * selfcal_bilinear_row(ct, ct);
    design.row(5 * i + 1) = selfcal_bilinear_row(bt, bt) - f2 * selfcal_bilinear_row(ct, ct);
    design.row(5 * i + 2) = selfcal_bilinear_row(at, bt);
    design.row(5 * i + 3) = selfcal_bilinear_row(at, ct);
    design.row(5 * i + 4) = selfcal_bilinear_row(bt, ct);
    for (int r = 0; r < 5; ++r) {
      const double norm = design.row(5 * i + r).norm();
      if (norm > 0) design.row(5 * i + r) /= norm;
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinV);
  const Eigen::VectorXd sv = svd.singularValues();
  if (sv[8] < 1e-10 * sv[0])
    throw RectificationDegenerate(
        "quasi_euclidean_rectify: constraints are rank-deficient beyond the scale ambiguity");

  const Matricizer sym4 = Matricizer::sym_upper_tri(4);
  const RoundedDaq rounded = round_daq(sym4.to_matrix(svd.matrixV().col(9)));
  const Eigen::Matrix4d h = upgrade_from(rounded);

  ProjectiveCameraSet out = p;
  for (auto& cam : out.cameras) {
    cam = cam * h;
    cam /= cam.norm();
  }
  return out;
}

SelfcalSolution selfcal_solve(const ProjectiveCameraSet& p, const SelfcalOptions& opts,
                              const SolverConfig& cfg) {
  const QuadraticCost design = build_selfcal_design(p);
  const Matricizer sym4 = Matricizer::sym_upper_tri(4);

  SpherePoint estimate = design.bottom_eigenvector().point;
  SolverTrace trace;
  if (opts.reg != SelfcalReg::kNone) {
    // The regularized problems start from the canonical DAQ; the closed-form
    // eigen solution above is the classical linear method and stays as the
    // unregularized answer.
    std::unique_ptr<Regularizer> reg;
    if (opts.reg == SelfcalReg::kNuclear)
      reg = std::make_unique<NuclearReg>(opts.lambda1, sym4);
    else
      reg = std::make_unique<NuclearSpectralReg>(opts.lambda1, opts.lambda2, sym4);

    SolverConfig run_cfg = cfg;
    if (opts.early_stop > 0) run_cfg.max_iters = opts.early_stop;

    Eigen::Matrix4d canonical = Eigen::Matrix4d::Identity();
    canonical(3, 3) = 0;
    const SpherePoint x0(sym4.to_vector(canonical));

    const ProblemInstance problem{&design, reg.get(), 10};
    SolveResult result = solve(problem, x0, run_cfg);
    estimate = std::move(result.x);
    trace = std::move(result.trace);
  }

  const RoundedDaq rounded = round_daq(sym4.to_matrix(estimate.coords()));
  if (rounded.non_positive > 1)
    throw NegativeEigenvalues("selfcal_solve: estimate is not a physical rank-3 quadric");

  SelfcalSolution sol;
  sol.daq = rounded.daq;
  sol.upgrade = upgrade_from(rounded);
  sol.trace = std::move(trace);
  sol.intrinsics.reserve(p.camera_count());
  for (const auto& cam : p.cameras) sol.intrinsics.push_back(intrinsics_of(cam * sol.upgrade));
  return sol;
}

Eigen::MatrixXd selfcal_reconstruct(const ProjectiveCameraSet& p, const Eigen::Matrix4d& h) {
  const auto n_cams = static_cast<Eigen::Index>(p.camera_count());
  const auto n_pts = static_cast<Eigen::Index>(p.image_points[0].size());
  std::vector<Eigen::Matrix<double, 3, 4>> cams(n_cams);
  for (Eigen::Index i = 0; i < n_cams; ++i) cams[i] = p.cameras[i] * h;

  Eigen::MatrixXd points(n_pts, 3);
  Eigen::MatrixXd design(2 * n_cams, 4);
  for (Eigen::Index j = 0; j < n_pts; ++j) {
    for (Eigen::Index i = 0; i < n_cams; ++i) {
      const Eigen::Vector2d& q = p.image_points[i][j];
      design.row(2 * i) = q.x() * cams[i].row(2) - cams[i].row(0);
      design.row(2 * i + 1) = q.y() * cams[i].row(2) - cams[i].row(1);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinV);
    const Eigen::Vector4d x = svd.matrixV().col(3);
    points.row(j) = x.hnormalized().transpose();
  }
  return points;
}

ProjectiveCameraSet gen_cms_scene(std::uint64_t seed, int n_pts, int n_cams, double delta_cam,
                                  double delta_img) {
  if (n_cams < 3) throw TooFewCameras("gen_cms_scene: need >= 3 cameras");
  Rng rng(seed);
  ProjectiveCameraSet scene;

  // Points uniform in a ball of diameter 3 m, centered at the origin.
  scene.gt_points.resize(n_pts, 3);
  for (int j = 0; j < n_pts; ++j) {
    Eigen::Vector3d x;
    do {
      x = Eigen::Vector3d(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5),
                          rng.uniform(-1.5, 1.5));
    } while (x.norm() > 1.5);
    scene.gt_points.row(j) = x.transpose();
  }
  const Eigen::Vector3d centroid = scene.gt_points.colwise().mean().transpose();

  const Eigen::Vector2d principal(scene.image_width / 2.0, scene.image_height / 2.0);
  std::vector<std::vector<Eigen::Vector2d>> pixels(n_cams);
  std::vector<Eigen::Matrix<double, 3, 4>> gt_cams(n_cams);
  for (int i = 0; i < n_cams; ++i) {
    const double theta = 2.0 * M_PI * i / n_cams;
    const Eigen::Vector3d center(30.0 * std::cos(theta), 30.0 * std::sin(theta), 0.0);

    // Orientation: principal axis through the point centroid (the CMS),
    // then an axis-angle perturbation of scale delta_cam.
    const Eigen::Vector3d forward = (centroid - center).normalized();
    Eigen::Vector3d up = Eigen::Vector3d::UnitZ();
    const Eigen::Vector3d right = forward.cross(up).normalized();
    up = right.cross(forward);
    Eigen::Matrix3d r;
    r.row(0) = right.transpose();
    r.row(1) = -up.transpose();
    r.row(2) = forward.transpose();
    if (delta_cam > 0) {
      Eigen::Vector3d axis = rng.gaussian_vector(3);
      while (axis.norm() < 1e-12) axis = rng.gaussian_vector(3);
      const double angle = rng.gaussian(0, delta_cam);
      r = Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix() * r;
    }

    const double f = rng.uniform(8000.0, 10000.0);
    Eigen::Matrix3d k;
    k << f, 0, principal.x(), 0, f, principal.y(), 0, 0, 1;
    Eigen::Matrix<double, 3, 4> cam;
    cam.leftCols<3>() = r;
    cam.col(3) = -r * center;
    gt_cams[i] = k * cam;

    pixels[i].reserve(n_pts);
    for (int j = 0; j < n_pts; ++j) {
      const Eigen::Vector3d proj = gt_cams[i] * scene.gt_points.row(j).transpose().homogeneous();
      Eigen::Vector2d px = proj.hnormalized();
      if (delta_img > 0)
        px += delta_img * Eigen::Vector2d(rng.gaussian(), rng.gaussian());
      pixels[i].push_back(px);
    }
  }

  // Common normalization from the principal point and the mean distance of
  // all image points to it.
  double s = 0;
  for (const auto& cam_pts : pixels)
    for (const auto& q : cam_pts) s += (q - principal).norm();
  s /= static_cast<double>(n_cams * n_pts);
  scene.norm.to_pixels << s, 0, principal.x(), 0, s, principal.y(), 0, 0, 1;
  scene.norm.to_normalized << 1 / s, 0, -principal.x() / s, 0, 1 / s, -principal.y() / s, 0, 0,
      1;
  scene.image_points.resize(n_cams);
  for (int i = 0; i < n_cams; ++i) {
    scene.image_points[i].reserve(n_pts);
    for (const auto& q : pixels[i])
      scene.image_points[i].push_back((q - principal) / s);
  }

  // A seeded projective homography replaces projective bundle adjustment:
  // similarity plus a bounded projective row, then cameras resected from the
  // noisy normalized image points against the transformed ground truth.
  Eigen::Matrix4d h_proj = Eigen::Matrix4d::Identity();
  {
    Eigen::Vector3d axis = rng.gaussian_vector(3);
    while (axis.norm() < 1e-12) axis = rng.gaussian_vector(3);
    const double angle = rng.uniform(0, 2 * M_PI);
    const double scale = rng.uniform(0.5, 2.0);
    h_proj.topLeftCorner<3, 3>() =
        scale * Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
    h_proj.topRightCorner<3, 1>() =
        Eigen::Vector3d(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
    h_proj.bottomLeftCorner<1, 3>() << rng.uniform(-0.1, 0.1), rng.uniform(-0.1, 0.1),
        rng.uniform(-0.1, 0.1);
  }
  Eigen::MatrixXd points_h(n_pts, 4);
  for (int j = 0; j < n_pts; ++j) {
    Eigen::Vector4d x = h_proj * scene.gt_points.row(j).transpose().homogeneous();
    points_h.row(j) = x.transpose() / x.norm();
  }
  scene.cameras.resize(n_cams);
  for (int i = 0; i < n_cams; ++i)
    scene.cameras[i] = resect_camera(scene.image_points[i], points_h);
  scene.gt_cameras = std::move(gt_cams);
  return scene;
}

double procrustes_error(const Eigen::MatrixXd& est, const Eigen::MatrixXd& gt) {
  if (est.rows() != gt.rows() || est.cols() != gt.cols())
    throw DimensionMismatch("procrustes_error: cloud shapes differ");
  const Eigen::Index n = est.rows();
  if (n < 4) throw DegenerateCloud("procrustes_error: need at least 4 points");

  const Eigen::RowVector3d mean_e = est.colwise().mean();
  const Eigen::RowVector3d mean_g = gt.colwise().mean();
  const Eigen::MatrixXd ce = est.rowwise() - mean_e;
  const Eigen::MatrixXd cg = gt.rowwise() - mean_g;
  const double var_e = ce.squaredNorm();
  if (var_e <= 1e-18 || cg.squaredNorm() <= 1e-18)
    throw DegenerateCloud("procrustes_error: degenerate cloud");

  // Best orthogonal map (reflections allowed) from est to gt, then the
  // least-squares scale.
  const Eigen::Matrix3d cov = cg.transpose() * ce;
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(cov, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Matrix3d rot = svd.matrixU() * svd.matrixV().transpose();
  const double scale = svd.singularValues().sum() / var_e;

  const Eigen::MatrixXd aligned = scale * (ce * rot.transpose());
  return std::sqrt((aligned - cg).squaredNorm() / static_cast<double>(n));
}

double relative_reconstruction_error(const Eigen::MatrixXd& est, const Eigen::MatrixXd& gt) {
  double diameter = 0;
  for (Eigen::Index i = 0; i < gt.rows(); ++i)
    for (Eigen::Index j = i + 1; j < gt.rows(); ++j)
      diameter = std::max(diameter, (gt.row(i) - gt.row(j)).norm());
  if (diameter <= 0) throw DegenerateCloud("relative_reconstruction_error: flat cloud");
  return procrustes_error(est, gt) / diameter;
}

}  // namespace pgs::apps
