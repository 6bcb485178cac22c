#include "crysref/errors.hpp"

namespace crysref {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::IncompatibleFieldOrders: return "IncompatibleFieldOrders";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroRoot: return "ZeroRoot";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NoStabilization: return "NoStabilization";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DisconnectedOverlapGraph: return "DisconnectedOverlapGraph";
    case ErrorCode::CycleBoundExceeded: return "CycleBoundExceeded";
    case ErrorCode::StructureMismatch: return "StructureMismatch";
    case ErrorCode::NotASublattice: return "NotASublattice";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::EmptyConstraintSet: return "EmptyConstraintSet";
    case ErrorCode::QuotientTooLarge: return "QuotientTooLarge";
    case ErrorCode::DegenerateLattice: return "DegenerateLattice";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::SingularS: return "SingularS";
    case ErrorCode::PathConditionViolated: return "PathConditionViolated";
    case ErrorCode::DeltaNotStable: return "DeltaNotStable";
    case ErrorCode::ChainConditionViolated: return "ChainConditionViolated";
    case ErrorCode::SubsystemReducible: return "SubsystemReducible";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::NotRootLattice: return "NotRootLattice";
    case ErrorCode::WrongGeneratorCount: return "WrongGeneratorCount";
    case ErrorCode::InvalidCartanData: return "InvalidCartanData";
    case ErrorCode::UnknownGroup: return "UnknownGroup";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

ErrorClass error_class(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::UnknownGroup:
      return ErrorClass::Parse;
    case ErrorCode::OrderCapExceeded:
    case ErrorCode::CapExceeded:
    case ErrorCode::QuotientTooLarge:
    case ErrorCode::SearchBudgetExceeded:
    case ErrorCode::CycleBoundExceeded:
      return ErrorClass::Cap;
    default:
      return ErrorClass::Precondition;
  }
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(detail.empty() ? std::string(error_name(code))
                                        : std::string(error_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace crysref
