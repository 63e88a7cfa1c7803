#include "tlim/errors.hpp"

namespace tlim {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kExpOverflow: return "ExpOverflow";
    case ErrorCode::kTailTooLarge: return "TailTooLarge";
    case ErrorCode::kSymbolVanishes: return "SymbolVanishes";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kNonzeroWinding: return "NonzeroWinding";
    case ErrorCode::kResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::kSingularSection: return "SingularSection";
    case ErrorCode::kTruncationExceeded: return "TruncationExceeded";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kConfig: return "ConfigError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      message_(message) {}

Error Error::with_n(int n) const {
  Error copy = *this;
  copy.n_ = n;
  return copy;
}

}  // namespace tlim
