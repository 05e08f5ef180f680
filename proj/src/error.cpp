#include "invcensus/error.hpp"

namespace invcensus {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotSquareField: return "NotSquareField";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

CapExceeded::CapExceeded(std::uint64_t cap, const std::string& what_group)
    : Error(ErrorKind::CapExceeded,
            what_group + " grows past the enumeration cap of " + std::to_string(cap) +
                " elements"),
      cap_(cap) {}

}  // namespace invcensus
