#include "oadp/errors.hpp"

namespace oadp {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::VarAbsent: return "VarAbsent";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DegeneratePencil: return "DegeneratePencil";
    case ErrorCode::DegenerateSection: return "DegenerateSection";
    case ErrorCode::ConditionDegreeOverflow: return "ConditionDegreeOverflow";
    case ErrorCode::EmptySystem: return "EmptySystem";
    case ErrorCode::NotContracted: return "NotContracted";
    case ErrorCode::NegativeDegree: return "NegativeDegree";
    case ErrorCode::Indeterminate: return "Indeterminate";
    case ErrorCode::RankDrop: return "RankDrop";
    case ErrorCode::NoLinearFit: return "NoLinearFit";
    case ErrorCode::DimensionUnexpected: return "DimensionUnexpected";
    case ErrorCode::OracleUnstable: return "OracleUnstable";
    case ErrorCode::SubsystemEmpty: return "SubsystemEmpty";
    case ErrorCode::NotAQuadric: return "NotAQuadric";
    case ErrorCode::FixtureInvalid: return "FixtureInvalid";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
  }
  return "Unknown";
}

}  // namespace oadp
