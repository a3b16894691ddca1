// Copyright (c) 2026 The limbscrew Authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE
#include "limbscrew/ik_solver.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>

namespace limbscrew {
namespace {

constexpr double kDedupTolerance = 1e-6;
constexpr double kMinDamping = 1e-12;
constexpr double kMaxDamping = 1e6;

JointVector full_angles(const Vec6& angles) {
  JointVector theta = JointVector::Zero();
  theta.head<6>() = angles;
  return theta;
}

double wrapped_distance(const Vec6& a, const Vec6& b) {
  return wrap_angles(a - b).cwiseAbs().maxCoeff();
}

double halton(int index, int base) {
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * (index % base);
    index /= base;
  }
  return r;
}

bool within_limits(const Vec6& angles, const LimbGeometry& geometry) {
  const auto& limits = geometry.joint_limits();
  if (!limits) return true;
  for (int i = 0; i < 6; ++i) {
    if (angles[i] < (*limits)[i].min || angles[i] > (*limits)[i].max) return false;
  }
  return true;
}

}  // namespace

TargetLine::TargetLine(const Screw& line) : line_(line) {
  if (!line.direction.allFinite() || !line.moment.allFinite() ||
      !is_unit_line(line, kTargetLineTolerance)) {
    throw Error(ErrorCode::kInvalidInput,
                "target must be a unit line (|direction| = 1, direction . moment = 0)",
                line.direction.dot(line.moment));
  }
}

TargetLine TargetLine::through_points(const Vec3& p1, const Vec3& p2) {
  if (!p1.allFinite() || !p2.allFinite()) {
    throw Error(ErrorCode::kInvalidInput, "target points must be finite");
  }
  return TargetLine(line_from_points(p1, p2));
}

void IkOptions::validate() const {
  if (max_iterations < 1) {
    throw Error(ErrorCode::kInvalidInput, "max_iterations must be at least 1", max_iterations);
  }
  if (!(residual_tol > 0.0) || !std::isfinite(residual_tol)) {
    throw Error(ErrorCode::kInvalidInput, "residual_tol must be positive", residual_tol);
  }
  if (!(damping > 0.0) || !std::isfinite(damping)) {
    throw Error(ErrorCode::kInvalidInput, "damping must be positive", damping);
  }
  if (!seed && multistart_count < 1) {
    throw Error(ErrorCode::kInvalidInput, "multistart_count must be at least 1",
                multistart_count);
  }
  if (seed && !seed->allFinite()) {
    throw Error(ErrorCode::kInvalidInput, "seed must be finite");
  }
}

Vec6 wrap_angles(const Vec6& angles) {
  Vec6 out;
  for (int i = 0; i < 6; ++i) {
    double r = std::remainder(angles[i], 2.0 * std::numbers::pi);
    if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
    out[i] = r;
  }
  return out;
}

Vec6 ik_residual(const Vec6& angles, const TargetLine& target, const LimbGeometry& geometry) {
  return as_vector(end_effector_line(full_angles(angles), geometry)) - as_vector(target.line());
}

Mat6 ik_residual_jacobian(const Vec6& angles, const LimbGeometry& geometry) {
  const FrameSet fs = forward_kinematics(full_angles(angles), geometry);
  Mat6 j;
  for (int i = 1; i <= 6; ++i) {
    j.col(i - 1) = as_vector(screw_cross(fs.joint_axes[i], fs.joint_axes[6]));
  }
  return j;
}

Vec6 ik_residual_weights(const LimbGeometry& geometry) {
  Vec6 w;
  w << 1.0, 1.0, 1.0, Vec3::Constant(1.0 / geometry.reach());
  return w;
}

IkSolution refine_ik(const Vec6& start, const TargetLine& target, const LimbGeometry& geometry,
                     const IkOptions& options) {
  options.validate();
  const auto w = ik_residual_weights(geometry).asDiagonal();

  IkSolution sol;
  sol.angles = start;
  Vec6 r = w * ik_residual(sol.angles, target, geometry);
  double norm = r.norm();
  double lambda = options.damping;

  while (norm > options.residual_tol && sol.iterations < options.max_iterations) {
    ++sol.iterations;
    const Mat6 j = w * ik_residual_jacobian(sol.angles, geometry);
    const Mat6 normal = j.transpose() * j + lambda * Mat6::Identity();
    const Vec6 step = normal.ldlt().solve(-j.transpose() * r);
    const Vec6 trial = sol.angles + step;
    const Vec6 trial_r = w * ik_residual(trial, target, geometry);
    const double trial_norm = trial_r.norm();
    if (std::isfinite(trial_norm) && trial_norm < norm) {
      sol.angles = trial;
      r = trial_r;
      norm = trial_norm;
      lambda = std::max(lambda / 3.0, kMinDamping);
    } else {
      lambda = std::min(lambda * 10.0, kMaxDamping);
    }
  }
  sol.angles = wrap_angles(sol.angles);
  sol.residual_norm = norm;
  sol.converged = norm <= options.residual_tol;
  return sol;
}

std::vector<Vec6> multistart_points(int count) {
  static constexpr int kBases[6] = {2, 3, 5, 7, 11, 13};
  std::vector<Vec6> points;
  points.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int n = 1; n <= count; ++n) {
    Vec6 p;
    for (int k = 0; k < 6; ++k) {
      p[k] = -std::numbers::pi + 2.0 * std::numbers::pi * halton(n, kBases[k]);
    }
    points.push_back(p);
  }
  return points;
}

std::vector<IkSolution> solve_ik(const TargetLine& target, const LimbGeometry& geometry,
                                 const IkOptions& options) {
  options.validate();
  const std::vector<Vec6> starts =
      options.seed ? std::vector<Vec6>{*options.seed} : multistart_points(options.multistart_count);

  std::vector<IkSolution> found;
  for (const Vec6& start : starts) {
    IkSolution sol = refine_ik(start, target, geometry, options);
    if (!sol.converged || !within_limits(sol.angles, geometry)) continue;
    const bool duplicate = std::any_of(found.begin(), found.end(), [&](const IkSolution& f) {
      return wrapped_distance(f.angles, sol.angles) < kDedupTolerance;
    });
    if (!duplicate) found.push_back(sol);
  }

  const auto key = [&](const IkSolution& s) {
    return options.seed ? wrapped_distance(s.angles, *options.seed) : s.residual_norm;
  };
  std::stable_sort(found.begin(), found.end(), [&](const IkSolution& a, const IkSolution& b) {
    return key(a) < key(b);
  });
  return found;
}

}  // namespace limbscrew
