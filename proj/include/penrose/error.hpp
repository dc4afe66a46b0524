#pragma once

#include <stdexcept>
#include <string>

namespace penrose {

enum class ErrorCode {
  UnknownSeed,
  NoComposition,
  InvalidTower,
  Inadmissible,
  OddLength,
  OnGridLine,
  SingularIntersection,
  SingularPentagrid,
  SumConstraintUnset,
  MotifAbsent,
  UnknownVersion,
  MalformedKind,
  NonIntegerVertex,
  MalformedDocument,
  Overflow,
  DivisionByZero,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace penrose
