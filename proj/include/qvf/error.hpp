#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qvf {

enum class ErrorKind {
  InvalidArgument,
  NonFinite,
  AffineField,
  NonConvergence,
  DegenerateLeadingCoefficient,
  DegenerateConfiguration,
  InconsistentTriple,
  NoDistinctTwin,
  DegenerateSystem,
  PostconditionFailed,
  SingularMap,
  CollinearPoints,
  NotSingularTriple,
  NotHamiltonian,
  ZeroEntry,
  NotRealizable,
  BranchSingularity,
  DicriticalInfinity,
  MultipleDirection,
  ResonantDirection,
  InvalidData,
  SyntaxError,
  DegreeTooHigh,
  InvalidDocument,
};

std::string_view to_string(ErrorKind kind);

// Every domain failure in the library is reported through this type; the
// kind is what callers (and the CLI's JSON error output) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failure carrying the 0-based character offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorKind::SyntaxError,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qvf
