#pragma once

#include <stdexcept>
#include <string>

namespace oadp {

enum class ErrorCode {
  RingMismatch,
  NotDivisible,
  ZeroDivisor,
  IndexOutOfRange,
  ArityMismatch,
  AllZero,
  DegreeTooLarge,
  ZeroForm,
  VarAbsent,
  BadPrime,
  ParseError,
  DegeneratePencil,
  DegenerateSection,
  ConditionDegreeOverflow,
  EmptySystem,
  NotContracted,
  NegativeDegree,
  Indeterminate,
  RankDrop,
  NoLinearFit,
  DimensionUnexpected,
  OracleUnstable,
  SubsystemEmpty,
  NotAQuadric,
  FixtureInvalid,
  UnknownEntry,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace oadp
