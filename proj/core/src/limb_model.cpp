// Copyright (c) 2026 The limbscrew Authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE
#include "limbscrew/limb_model.hpp"

#include <cmath>
#include <string>

namespace limbscrew {

LimbGeometry::LimbGeometry(double arm_length, double forearm_length,
                           std::optional<JointLimits> limits)
    : arm_length_(arm_length), forearm_length_(forearm_length), limits_(std::move(limits)) {
  if (!std::isfinite(arm_length) || arm_length <= 0.0) {
    throw Error(ErrorCode::kInvalidInput, "arm length must be positive", arm_length);
  }
  if (!std::isfinite(forearm_length) || forearm_length <= 0.0) {
    throw Error(ErrorCode::kInvalidInput, "forearm length must be positive", forearm_length);
  }
  if (limits_) {
    for (int i = 0; i < kJointCount; ++i) {
      const JointLimit& lim = (*limits_)[i];
      if (!std::isfinite(lim.min) || !std::isfinite(lim.max) || lim.min > lim.max) {
        throw Error(ErrorCode::kInvalidInput,
                    "joint limit " + std::to_string(i + 1) + " must satisfy min <= max",
                    static_cast<double>(i + 1));
      }
    }
  }
}

std::array<DualAngle, kJointCount> LimbGeometry::link_duals() const {
  constexpr double kQuarter = -std::numbers::pi / 2;
  return {DualAngle(kQuarter),
          DualAngle(kQuarter),
          DualAngle(0.0, arm_length_),
          DualAngle(kQuarter, forearm_length_),
          DualAngle(kQuarter),
          DualAngle(kQuarter),
          DualAngle(kQuarter)};
}

bool LimbGeometry::within_limits(const JointVector& theta) const {
  if (!limits_) return true;
  for (int i = 0; i < kJointCount; ++i) {
    if (theta[i] < (*limits_)[i].min || theta[i] > (*limits_)[i].max) return false;
  }
  return true;
}

bool JointState::is_finite() const {
  return theta.allFinite() && theta_dot.allFinite() && theta_ddot.allFinite();
}

JointVector effective_angles(const JointVector& theta) {
  JointVector out = theta;
  for (int i = 0; i < kJointCount; ++i) out[i] += kJointOffsets[i];
  return out;
}

JointVector raw_angles(const JointVector& effective) {
  JointVector out = effective;
  for (int i = 0; i < kJointCount; ++i) out[i] -= kJointOffsets[i];
  return out;
}

FrameSet forward_kinematics(const JointVector& theta, const LimbGeometry& geometry) {
  if (!theta.allFinite()) {
    throw Error(ErrorCode::kInvalidInput, "joint angles must be finite");
  }
  std::array<double, kJointCount> eff{};
  for (int i = 0; i < kJointCount; ++i) eff[i] = theta[i] + kJointOffsets[i];
  return basic_forward_kinematics(eff, geometry);
}

Mat3 frame_rotation(const FrameSet& fs, int frame) {
  if (frame < 0 || frame >= kFrameCount) {
    throw Error(ErrorCode::kInvalidInput, "frame index out of range", frame);
  }
  Mat3 r;
  r.col(0) = fs.link_axes[frame].direction;
  r.col(1) = fs.normals[frame].direction;
  r.col(2) = fs.joint_axes[frame].direction;
  return r;
}

Screw end_effector_line(const JointVector& theta, const LimbGeometry& geometry) {
  return forward_kinematics(theta, geometry).joint_axes[6];
}

}  // namespace limbscrew
