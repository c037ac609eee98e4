#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ranslice {

enum class ErrorCode {
  InvalidRequest,
  InvalidPolicy,
  UnsatisfiableLatency,
  NoMatching5qi,
  UnknownRegion,
  UnknownPop,
  Unreachable,
  InsufficientDuCapacity,
  InfeasibleLatency,
  NoMatchingSubset,
  LoadExceedsSubset,
  DanglingPlanReference,
  ParseError,
  UnknownKind,
  ShapeMismatch,
  UnsupportedVersion,
  IoError,
  Internal,
};

constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidRequest: return "INVALID_REQUEST";
    case ErrorCode::InvalidPolicy: return "INVALID_POLICY";
    case ErrorCode::UnsatisfiableLatency: return "UNSATISFIABLE_LATENCY";
    case ErrorCode::NoMatching5qi: return "NO_MATCHING_5QI";
    case ErrorCode::UnknownRegion: return "UNKNOWN_REGION";
    case ErrorCode::UnknownPop: return "UNKNOWN_POP";
    case ErrorCode::Unreachable: return "UNREACHABLE";
    case ErrorCode::InsufficientDuCapacity: return "INSUFFICIENT_DU_CAPACITY";
    case ErrorCode::InfeasibleLatency: return "INFEASIBLE_LATENCY";
    case ErrorCode::NoMatchingSubset: return "NO_MATCHING_SUBSET";
    case ErrorCode::LoadExceedsSubset: return "LOAD_EXCEEDS_SUBSET";
    case ErrorCode::DanglingPlanReference: return "DANGLING_PLAN_REFERENCE";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::UnknownKind: return "UNKNOWN_KIND";
    case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::UnsupportedVersion: return "UNSUPPORTED_VERSION";
    case ErrorCode::IoError: return "IO_ERROR";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

/// Error raised by every fallible operation. `stage()` names the planning
/// step (or parser) that failed; it is empty for direct calls.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string stage = {})
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        stage_(std::move(stage)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& stage() const noexcept { return stage_; }

  Error with_stage(std::string stage) const {
    Error copy = *this;
    if (copy.stage_.empty()) copy.stage_ = std::move(stage);
    return copy;
  }

 private:
  ErrorCode code_;
  std::string stage_;
};

}  // namespace ranslice
