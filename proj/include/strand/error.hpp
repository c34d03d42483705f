// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRAND_ERROR_HPP_
#define STRAND_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace strand {

enum class ErrorCode {
  kUndeclaredGenerator,
  kCompositionMismatch,
  kFlavorViolation,
  kNotAScalar,
  kNotEndomorphism,
  kBoundaryMismatch,
  kNoMatch,
  kUnassignedGenerator,
  kShapeMismatch,
  kNotScalarShaped,
  kGuardUnsatisfied,
  kBindingIllTyped,
  kSyntax,
  kInvalidModel,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace strand

#endif  // STRAND_ERROR_HPP_
