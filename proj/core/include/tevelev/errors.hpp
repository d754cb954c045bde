#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tev {

enum class ErrorCode {
  NotBalanced,
  MalformedClass,
  RegimeViolation,
  NonIntegralResult,
  PartsMismatch,
  SignatureMismatch,
  IndexOutOfRange,
  NonNilpotent,
  RankMismatch,
  HypothesisViolation,
  Unsupported,
};

std::string_view to_string(ErrorCode code);

/// Every library failure surfaces as this exception; `code()` is the
/// machine-readable classification used by the CLI exit-status mapping.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tev
