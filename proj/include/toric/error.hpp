#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorCode {
  DimensionMismatch,
  DimensionTooLarge,
  RangeError,
  OriginNotInterior,
  DegeneratePolytope,
  NonLatticeVertex,
  ArithmeticOverflow,
  ZeroFactor,
  ZeroState,
  LengthMismatch,
  WrongDims,
  NotUnitary,
};

std::string_view error_name(ErrorCode code) noexcept;

// Domain error raised by every library operation. The CLI maps these to
// exit status 1 and prints error_name(code()) on stderr.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace toric
