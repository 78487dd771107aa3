#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace halin {

enum class Errc {
  // graph construction
  NotATree,
  DegreeTwoInternal,
  CycleLeafMismatch,
  ArcContiguityViolation,
  TooFewLeaves,
  IndexOutOfRange,
  // generator
  InfeasibleConfig,
  UnknownFamily,
  // colorer
  NotAOneColor,
  MaxDegreeExceeded,
  InvariantViolated,
  // verifier
  PartialColoring,
  UnmappedColor,
  // oracle
  TooLarge,
  // text formats and arguments
  ParseError,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// The single exception type thrown by the library. `code()` identifies the
/// failure class; `what()` carries a human-readable detail message.
class HalinError : public std::runtime_error {
 public:
  HalinError(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace halin
