#include "penrose/error.hpp"

namespace penrose {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownSeed: return "UnknownSeed";
    case ErrorCode::NoComposition: return "NoComposition";
    case ErrorCode::InvalidTower: return "InvalidTower";
    case ErrorCode::Inadmissible: return "Inadmissible";
    case ErrorCode::OddLength: return "OddLength";
    case ErrorCode::OnGridLine: return "OnGridLine";
    case ErrorCode::SingularIntersection: return "SingularIntersection";
    case ErrorCode::SingularPentagrid: return "SingularPentagrid";
    case ErrorCode::SumConstraintUnset: return "SumConstraintUnset";
    case ErrorCode::MotifAbsent: return "MotifAbsent";
    case ErrorCode::UnknownVersion: return "UnknownVersion";
    case ErrorCode::MalformedKind: return "MalformedKind";
    case ErrorCode::NonIntegerVertex: return "NonIntegerVertex";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace penrose
