// Copyright (c) 2026 The limbscrew Authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE
#pragma once

// Seven-joint upper-limb chain: shoulder (joints 1-3), elbow (4), wrist (5-7).
//
// Frame i is the triad {a_i,i+1, y_i, S_i}: link axis, common normal and joint
// axis, all expressed as line screws in the fixed shoulder frame {0}. Frame
// {0} is {i, j, k}. Joint angles passed to the public API are the raw angles;
// the constant offsets of the kinematic table are added internally.

#include <array>
#include <numbers>
#include <optional>

#include "limbscrew/screw_algebra.hpp"

namespace limbscrew {

inline constexpr int kJointCount = 7;
inline constexpr int kFrameCount = 8;  // frames 0..7

using JointVector = Eigen::Matrix<double, kJointCount, 1>;

// Constant offsets added to each raw joint angle.
inline constexpr std::array<double, kJointCount> kJointOffsets = {
    0.0,
    -std::numbers::pi / 2,
    -std::numbers::pi / 2,
    0.0,
    -std::numbers::pi / 2,
    -std::numbers::pi / 2,
    -std::numbers::pi / 2,
};

struct JointLimit {
  double min = -std::numbers::pi;
  double max = std::numbers::pi;
};
using JointLimits = std::array<JointLimit, kJointCount>;

class LimbGeometry {
 public:
  // Throws Error(kInvalidInput) unless both lengths are finite and positive.
  LimbGeometry(double arm_length, double forearm_length,
               std::optional<JointLimits> limits = std::nullopt);

  double arm_length() const noexcept { return arm_length_; }
  double forearm_length() const noexcept { return forearm_length_; }
  double reach() const noexcept { return arm_length_ + forearm_length_; }

  // alpha_12 .. alpha_78. Links 1, 2, 5, 6, 7 are zero length.
  std::array<DualAngle, kJointCount> link_duals() const;

  const std::optional<JointLimits>& joint_limits() const noexcept { return limits_; }
  bool within_limits(const JointVector& theta) const;

 private:
  double arm_length_;
  double forearm_length_;
  std::optional<JointLimits> limits_;
};

struct JointState {
  JointVector theta = JointVector::Zero();       // rad
  JointVector theta_dot = JointVector::Zero();   // rad/s
  JointVector theta_ddot = JointVector::Zero();  // rad/s^2

  bool is_finite() const;
};

// theta_i + offset_i, the angle the joint screw operator actually turns by.
JointVector effective_angles(const JointVector& theta);
JointVector raw_angles(const JointVector& effective);

// All screws of the chain, indexed by frame number 0..7.
template <typename T>
struct BasicFrameSet {
  std::array<BasicScrew<T>, kFrameCount> joint_axes;  // S_i; [0] = k
  std::array<BasicScrew<T>, kFrameCount> link_axes;   // a_i,i+1; [0] = i, [7] = a_78
  std::array<BasicScrew<T>, kFrameCount> normals;     // y_i = S_i x a_i,i+1
  std::array<Vector3<T>, kFrameCount> origins;        // where a_i,i+1 meets S_i
};

using FrameSet = BasicFrameSet<double>;

// The recursion itself, on operator angles (effective angles). Instantiated
// for double and for forward-mode dual numbers by the differential module.
template <typename T>
BasicFrameSet<T> basic_forward_kinematics(const std::array<T, kJointCount>& effective,
                                          const LimbGeometry& geometry) {
  const T zero(0.0);
  const T one(1.0);
  BasicFrameSet<T> fs;

  BasicScrew<T> joint_axis;
  joint_axis.direction << zero, zero, one;
  BasicScrew<T> link_axis;
  link_axis.direction << one, zero, zero;
  Vector3<T> origin = Vector3<T>::Constant(zero);

  fs.joint_axes[0] = joint_axis;
  fs.link_axes[0] = link_axis;
  fs.normals[0] = screw_cross(joint_axis, link_axis);
  fs.origins[0] = origin;

  // a_01 is the zero dual angle, so S_1 = S_0 and frame 1 shares the origin.
  const auto links = geometry.link_duals();
  for (int k = 1; k <= kJointCount; ++k) {
    const BasicDualAngle<T> joint_angle{effective[k - 1], zero};
    link_axis = apply_operator(make_operator(joint_angle, joint_axis), link_axis);

    fs.joint_axes[k] = joint_axis;
    fs.link_axes[k] = link_axis;
    fs.normals[k] = screw_cross(joint_axis, link_axis);
    fs.origins[k] = origin;

    if (k < kJointCount) {
      const DualAngle& link = links[k - 1];
      const BasicDualAngle<T> link_angle{T(link.angle), T(link.offset)};
      joint_axis = apply_operator(make_operator(link_angle, link_axis), joint_axis);
      origin = origin + link_axis.direction * T(link.offset);
    }
  }
  return fs;
}

FrameSet forward_kinematics(const JointVector& theta, const LimbGeometry& geometry);
inline FrameSet forward_kinematics(const JointState& s, const LimbGeometry& geometry) {
  return forward_kinematics(s.theta, geometry);
}

// Columns are the directions of (a_i,i+1, y_i, S_i): maps frame-i coordinates
// to frame-0 coordinates. frame in [0, 7].
Mat3 frame_rotation(const FrameSet& fs, int frame);

// S_6, the line the inverse kinematics targets.
Screw end_effector_line(const JointVector& theta, const LimbGeometry& geometry);

}  // namespace limbscrew
