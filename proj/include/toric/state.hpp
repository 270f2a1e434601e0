#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace toric {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;

// Pure state of an m-partite system: amplitudes alpha_(k1...km) over
// subsystem dimensions (N1, ..., Nm), flattened row-major with k1 the most
// significant digit.
class PureState {
 public:
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t subsystems() const noexcept { return dims_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t flat) const { return amplitudes_[flat]; }
  bool normalized() const noexcept { return normalized_; }

  double norm_squared() const noexcept;

 private:
  friend PureState state_from_amplitudes(std::vector<std::size_t> dims,
                                         std::vector<Complex> amplitudes, bool normalize);

  PureState(std::vector<std::size_t> dims, std::vector<Complex> amplitudes, bool normalized)
      : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)), normalized_(normalized) {}

  std::vector<std::size_t> dims_;
  std::vector<Complex> amplitudes_;
  bool normalized_ = false;
};

// Throws LengthMismatch (size != product of dims, or a zero dimension) and
// ZeroState. With normalize, amplitudes are rescaled to unit norm unless
// they already have it to 1e-12; otherwise
// the state is flagged normalized only if its norm is already 1 to 1e-12.
PureState state_from_amplitudes(std::vector<std::size_t> dims, std::vector<Complex> amplitudes,
                                bool normalize);

std::size_t total_size(std::span<const std::size_t> dims);
std::vector<std::size_t> unflatten(std::size_t flat, std::span<const std::size_t> dims);
std::size_t flatten(std::span<const std::size_t> digits, std::span<const std::size_t> dims);

}  // namespace toric
