#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace upse {

// Machine-readable failure categories. The CLI prints the enumerator name
// verbatim in its error JSON, so the spelling is part of the tool contract.
enum class ErrorKind {
  ParseError,
  InvalidArgument,
  SizeMismatch,
  InvalidMapping,
  NotConvex,
  NotGeneralPosition,
  NotATree,
  Cyclic,
  NotSwitchTree,
  NotSink,
  NotSource,
  NotOneSided,
  InternalNonConsecutiveResidual,
  BadN,
  BadParameters,
  InvalidInstance,
  PropertyCheckFailed,
  InvalidSolution,
  NotAValidUPSE,
  ExtractionFailed,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace upse
