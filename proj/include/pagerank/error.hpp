#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pagerank {

enum class ErrorCode {
  SelfLoop,
  DuplicateEdge,
  TargetOutOfRange,
  ParseError,
  InvalidSpec,
  InvalidWeights,
  COutOfRange,
  DimensionMismatch,
  Singular,
  InvalidN,
  NotConverged,
  DegenerateScale,
  ZeroVector,
  InvalidVariant,
  InvalidParams,
  InvalidNode,
  SameNode,
  InvalidRange,
  StepOutOfRange,
  FingerprintMismatch,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `detail()` carries the numeric payload
/// of the error where one exists (node id, line number, iteration count).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t detail = 0)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t detail() const noexcept { return detail_; }

  /// True for failures of the numerics rather than of the input.
  bool is_numerical() const noexcept {
    return code_ == ErrorCode::NotConverged || code_ == ErrorCode::Singular ||
           code_ == ErrorCode::DegenerateScale;
  }

 private:
  ErrorCode code_;
  std::size_t detail_;
};

inline const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::TargetOutOfRange: return "TargetOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::COutOfRange: return "COutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::DegenerateScale: return "DegenerateScale";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::InvalidVariant: return "InvalidVariant";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidNode: return "InvalidNode";
    case ErrorCode::SameNode: return "SameNode";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::StepOutOfRange: return "StepOutOfRange";
    case ErrorCode::FingerprintMismatch: return "FingerprintMismatch";
  }
  return "Unknown";
}

/// Throws COutOfRange unless 0 < c < 1.
inline void require_damping(double c) {
  if (!(c > 0.0 && c < 1.0)) {
    throw Error(ErrorCode::COutOfRange, "c out of range, need 0 < c < 1, got " + std::to_string(c));
  }
}

}  // namespace pagerank
