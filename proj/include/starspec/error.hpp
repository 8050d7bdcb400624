#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace starspec {

enum class ErrorCode {
  DivZero,
  NotIsolating,
  NotS0,
  IrrationalPole,
  BadShape,
  Range,
  Schema,
  Invariant,
  PlanInfeasible,
  MainTooLong,
  RequiresPositiveM,
  Unresolved,
  Parse,
  Io,
  InvalidArgument,
};

/// Stable identifier used on the CLI error channel, e.g. "E_NOT_S0".
std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace starspec
