#include "toric/error.hpp"

namespace toric {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::DegeneratePolytope: return "DegeneratePolytope";
    case ErrorCode::NonLatticeVertex: return "NonLatticeVertex";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::ZeroFactor: return "ZeroFactor";
    case ErrorCode::ZeroState: return "ZeroState";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::WrongDims: return "WrongDims";
    case ErrorCode::NotUnitary: return "NotUnitary";
  }
  return "Unknown";
}

}  // namespace toric
