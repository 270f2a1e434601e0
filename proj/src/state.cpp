#include "toric/state.hpp"

#include <cmath>

#include "toric/error.hpp"

namespace toric {

double PureState::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return s;
}

std::size_t total_size(std::span<const std::size_t> dims) {
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  return n;
}

std::vector<std::size_t> unflatten(std::size_t flat, std::span<const std::size_t> dims) {
  std::vector<std::size_t> digits(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    digits[i] = flat % dims[i];
    flat /= dims[i];
  }
  return digits;
}

std::size_t flatten(std::span<const std::size_t> digits, std::span<const std::size_t> dims) {
  std::size_t flat = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) flat = flat * dims[i] + digits[i];
  return flat;
}

PureState state_from_amplitudes(std::vector<std::size_t> dims, std::vector<Complex> amplitudes,
                                bool normalize) {
  if (dims.empty()) throw Error(ErrorCode::LengthMismatch, "state needs at least one subsystem");
  for (auto d : dims)
    if (d == 0) throw Error(ErrorCode::LengthMismatch, "subsystem dimension must be positive");
  if (amplitudes.size() != total_size(dims))
    throw Error(ErrorCode::LengthMismatch, "amplitude count does not match dimensions");

  double norm2 = 0.0;
  for (const auto& a : amplitudes) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw Error(ErrorCode::RangeError, "amplitude is not finite");
    norm2 += std::norm(a);
  }
  if (norm2 == 0.0) throw Error(ErrorCode::ZeroState, "all amplitudes vanish");

  const bool unit = std::abs(norm2 - 1.0) <= kNormTolerance;
  // Already-unit input is kept bit for bit so that encoded states round-trip.
  if (normalize && !unit) {
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& a : amplitudes) a *= scale;
    return PureState(std::move(dims), std::move(amplitudes), true);
  }
  return PureState(std::move(dims), std::move(amplitudes), normalize || unit);
}

}  // namespace toric
