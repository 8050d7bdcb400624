#include "starspec/error.hpp"

namespace starspec {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivZero: return "E_DIV_ZERO";
    case ErrorCode::NotIsolating: return "E_NOT_ISOLATING";
    case ErrorCode::NotS0: return "E_NOT_S0";
    case ErrorCode::IrrationalPole: return "E_IRRATIONAL_POLE";
    case ErrorCode::BadShape: return "E_BAD_SHAPE";
    case ErrorCode::Range: return "E_RANGE";
    case ErrorCode::Schema: return "E_SCHEMA";
    case ErrorCode::Invariant: return "E_INVARIANT";
    case ErrorCode::PlanInfeasible: return "E_PLAN_INFEASIBLE";
    case ErrorCode::MainTooLong: return "E_MAIN_TOO_LONG";
    case ErrorCode::RequiresPositiveM: return "E_REQUIRES_POSITIVE_M";
    case ErrorCode::Unresolved: return "E_UNRESOLVED";
    case ErrorCode::Parse: return "E_PARSE";
    case ErrorCode::Io: return "E_IO";
    case ErrorCode::InvalidArgument: return "E_INVALID_ARGUMENT";
  }
  return "E_UNKNOWN";
}

}  // namespace starspec
