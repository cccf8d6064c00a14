#pragma once

#include <stdexcept>
#include <string>

namespace heiscd {

// Numeric values are part of the C API (see heiscd.h) and must not change.
enum class ErrorCode : int {
  Ok = 0,
  NonPrime = 1,
  BadExponent = 2,
  Overflow = 3,
  CoordinateOutOfRange = 4,
  NotASubgroup = 5,
  EmptySet = 6,
  CentralElement = 7,
  EllOutOfRange = 8,
  EqualElements = 9,
  NotSupercommuting = 10,
  NotSpecialPair = 11,
  ImproperlyCommuting = 12,
  NotInPseudocentralizer = 13,
  CapExceeded = 14,
  TooLarge = 15,
  InvalidArgument = 16,
  SpecializationFailed = 17,
  InvalidHandle = 18,
  Unknown = 99,
};

const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace heiscd
