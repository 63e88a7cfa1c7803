#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tlim {

enum class ErrorCode {
  kInvalidArgument,
  kExpOverflow,
  kTailTooLarge,
  kSymbolVanishes,
  kNoConvergence,
  kNonzeroWinding,
  kResidualTooLarge,
  kSingularSection,
  kTruncationExceeded,
  kInfeasible,
  kConfig,
};

// Stable identifier used in machine-readable error lines, e.g. "TailTooLarge".
std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this exception. The harness
// attaches the schedule entry `n` that was being evaluated when it failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  const std::optional<int>& n() const noexcept { return n_; }
  const std::string& message() const noexcept { return message_; }

  Error with_n(int n) const;

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<int> n_;
};

}  // namespace tlim
