// Copyright (c) 2026 The limbscrew Authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE
#include "limbscrew/screw_algebra.hpp"

#include <cmath>

namespace limbscrew {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput:
      return "invalid input";
    case ErrorCode::kInvalidAxis:
      return "invalid axis";
    case ErrorCode::kDegenerateLine:
      return "degenerate line";
    case ErrorCode::kUndefinedPitch:
      return "undefined pitch";
    case ErrorCode::kNoAxis:
      return "no instantaneous axis";
    case ErrorCode::kSingularConfiguration:
      return "singular configuration";
    case ErrorCode::kAnalyticSingularity:
      return "analytic singularity";
    case ErrorCode::kSingularMassMatrix:
      return "singular mass matrix";
  }
  return "unknown error";
}

DualAngle DualAngle::normalized() const {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double a = std::remainder(angle, kTwoPi);  // [-pi, pi]
  if (a <= -std::numbers::pi) a += kTwoPi;
  return {a, offset};
}

double pitch(const Screw& s) {
  const double dd = s.direction.squaredNorm();
  if (dd == 0.0) {
    throw Error(ErrorCode::kUndefinedPitch, "pitch of a screw with zero direction");
  }
  return s.direction.dot(s.moment) / dd;
}

bool is_unit_line(const Screw& s, double tol) {
  return std::abs(s.direction.norm() - 1.0) <= tol &&
         std::abs(s.direction.dot(s.moment)) <= tol;
}

Screw line_from_points(const Vec3& p1, const Vec3& p2, double tol) {
  const Vec3 span = p2 - p1;
  const double length = span.norm();
  if (!(length > tol)) {
    throw Error(ErrorCode::kDegenerateLine, "line_from_points: points coincide", length);
  }
  const Vec3 direction = span / length;
  return {direction, p1.cross(direction)};
}

}  // namespace limbscrew
