#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace invcensus {

enum class ErrorKind {
  NotPrime,
  DegreeTooLarge,
  FieldMismatch,
  DivisionByZero,
  NotSquareField,
  DimMismatch,
  Singular,
  UnsupportedFamily,
  DegreeMismatch,
  UnknownName,
  ParseError,
  CapExceeded,
  ConditionViolated,
  HypothesisViolated,
  VerificationFailed,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. The kind is a stable contract; the
/// message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a closure grows past its element cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::uint64_t cap, const std::string& what_group);

  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

}  // namespace invcensus
