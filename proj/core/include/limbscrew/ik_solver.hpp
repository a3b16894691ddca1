// Copyright (c) 2026 The limbscrew Authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE
#pragma once

// Joint angles 1..6 that place the joint-6 axis on a given line. Joint 7 is
// left out and joint 6 does not move its own axis, so theta6 is free: the
// solver keeps it at its start value.

#include <optional>
#include <vector>

#include "limbscrew/limb_model.hpp"

namespace limbscrew {

inline constexpr double kTargetLineTolerance = 1e-9;

class TargetLine {
 public:
  // Throws Error(kInvalidInput) unless `line` is a unit line to 1e-9.
  explicit TargetLine(const Screw& line);
  // Line through p1 towards p2. Throws Error(kDegenerateLine) if they coincide.
  static TargetLine through_points(const Vec3& p1, const Vec3& p2);

  const Screw& line() const noexcept { return line_; }

 private:
  Screw line_;
};

struct IkOptions {
  int max_iterations = 100;
  double residual_tol = 1e-10;
  double damping = 1e-3;
  int multistart_count = 16;
  std::optional<Vec6> seed;

  void validate() const;
};

struct IkSolution {
  Vec6 angles = Vec6::Zero();  // wrapped to (-pi, pi]
  double residual_norm = 0.0;  // weighted, see ik_residual_weights
  int iterations = 0;
  bool converged = false;
};

// S_6(angles) - target, direction over moment.
Vec6 ik_residual(const Vec6& angles, const TargetLine& target, const LimbGeometry& geometry);

// d S_6 / d theta_j = S_j x S_6; column 6 is identically zero.
Mat6 ik_residual_jacobian(const Vec6& angles, const LimbGeometry& geometry);

// Row weights applied by the solver: 1 for direction rows, 1/(l1 + l2) for
// moment rows.
Vec6 ik_residual_weights(const LimbGeometry& geometry);

// Levenberg-Marquardt from a single start. Never throws on non-convergence.
IkSolution refine_ik(const Vec6& start, const TargetLine& target, const LimbGeometry& geometry,
                     const IkOptions& options = {});

// Converged, deduplicated solutions within the joint limits (if any), sorted
// by wrapped distance to the seed, or by residual without a seed.
std::vector<IkSolution> solve_ik(const TargetLine& target, const LimbGeometry& geometry,
                                 const IkOptions& options = {});

// Start points used when no seed is given: Halton sequence in [-pi, pi]^6.
std::vector<Vec6> multistart_points(int count);

// Componentwise wrap to (-pi, pi].
Vec6 wrap_angles(const Vec6& angles);

}  // namespace limbscrew
