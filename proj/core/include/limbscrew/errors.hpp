// Copyright (c) 2026 The limbscrew Authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE
#pragma once

#include <stdexcept>
#include <string>

namespace limbscrew {

enum class ErrorCode {
  kInvalidInput,
  kInvalidAxis,
  kDegenerateLine,
  kUndefinedPitch,
  kNoAxis,
  kSingularConfiguration,
  kAnalyticSingularity,
  kSingularMassMatrix,
};

const char* to_string(ErrorCode code);

// All library failures are reported with this exception. `detail()` carries a
// numeric diagnostic where one exists (condition estimate, offending norm).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, double detail = 0.0)
      : std::runtime_error(what), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  double detail() const noexcept { return detail_; }

  // Input and geometry problems, as opposed to numerical breakdown.
  bool is_input_error() const noexcept {
    return code_ == ErrorCode::kInvalidInput || code_ == ErrorCode::kInvalidAxis ||
           code_ == ErrorCode::kDegenerateLine || code_ == ErrorCode::kUndefinedPitch ||
           code_ == ErrorCode::kNoAxis;
  }

 private:
  ErrorCode code_;
  double detail_;
};

}  // namespace limbscrew
