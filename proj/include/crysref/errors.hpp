#ifndef CRYSREF_ERRORS_HPP
#define CRYSREF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace crysref {

enum class ErrorCode {
  DivisionByZero,
  IncompatibleFieldOrders,
  DimensionMismatch,
  ZeroRoot,
  OrderCapExceeded,
  CapExceeded,
  NoStabilization,
  IndexOutOfRange,
  DisconnectedOverlapGraph,
  CycleBoundExceeded,
  StructureMismatch,
  NotASublattice,
  NotALattice,
  EmptyConstraintSet,
  QuotientTooLarge,
  DegenerateLattice,
  NotInvariant,
  SingularS,
  PathConditionViolated,
  DeltaNotStable,
  ChainConditionViolated,
  SubsystemReducible,
  SearchBudgetExceeded,
  NotRootLattice,
  WrongGeneratorCount,
  InvalidCartanData,
  UnknownGroup,
  ParseError,
  PreconditionViolated,
};

// Determines the CLI exit status: parse -> 1, precondition -> 2, cap -> 3.
enum class ErrorClass { Parse, Precondition, Cap };

const char* error_name(ErrorCode code);
ErrorClass error_class(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail = {});

}  // namespace crysref

#endif
