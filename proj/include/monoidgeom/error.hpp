#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace monoidgeom {

enum class ErrorCode {
  DimensionMismatch,
  DimensionLimit,
  AmbientMismatch,
  MonoidMismatch,
  SizeMismatch,
  ArityMismatch,
  OrderMismatch,
  NotSharp,
  NotFine,
  NotMember,
  WrongDimension,
  WrongHeight,
  NonLocalFunctional,
  ImproperIdeal,
  NotAcceptable,
  ZeroElement,
  WitnessMismatch,
  InvalidArgument,
  Validation,
};

std::string_view to_string(ErrorCode code);

/// Every precondition violation in the library surfaces as this exception.
class MonoidError : public std::runtime_error {
 public:
  MonoidError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Three-valued answer for the bounded searches (word problem, exactness,
/// primary tests). Unknown is a real answer, never a failure.
enum class Verdict { True, False, Unknown };

std::string_view to_string(Verdict v);

}  // namespace monoidgeom
