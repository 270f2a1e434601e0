#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "toric/segre.hpp"
#include "toric/state.hpp"

namespace toric {

inline constexpr double kDefaultSeparabilityTolerance = 1e-10;

// max over the Segre quadrics of |alpha_K alpha_L - alpha_K' alpha_L'|,
// divided by sum |alpha|^2 so that it does not depend on the scale.
double segre_residual(const PureState& s);

struct SeparabilityReport {
  double residual = 0.0;
  double tolerance = kDefaultSeparabilityTolerance;
  bool separable = true;
  // First quadric (canonical order) attaining the residual; empty when the
  // state has no quadrics (a single subsystem).
  std::optional<BinomialRelation> worst_quadric;
};

// Throws RangeError unless tol > 0.
SeparabilityReport is_separable(const PureState& s, double tol = kDefaultSeparabilityTolerance);

// Exact variant for real rational amplitudes: returns the squared residual
// max |quadric|^2 / (sum alpha^2)^2, which is zero iff the tensor has rank one.
Rational segre_residual_squared(std::span<const std::size_t> dims,
                                std::span<const Rational> amplitudes);

// Which sixth term to use in the diagonal-plane sum d2. Symmetric is
// alpha_010 alpha_011 alpha_100 alpha_101, which makes U the Cayley
// hyperdeterminant; RepeatedFactor is alpha_010 alpha_100 alpha_100 alpha_101
// and is kept only for comparison.
enum class D2Variant { Symmetric, RepeatedFactor };

struct HyperdeterminantTerms {
  Complex d1, d2, d4;
  Complex value() const { return d1 - 2.0 * d2 + 4.0 * d4; }
};

// Diagonal lines (d1), diagonal planes (d2) and the tetrahedron (d4) of the
// amplitude cube, evaluated on the raw amplitudes. Throws WrongDims unless
// dims == (2, 2, 2).
HyperdeterminantTerms hyperdeterminant_terms(const PureState& s,
                                             D2Variant variant = D2Variant::Symmetric);

// U = d1 - 2 d2 + 4 d4 on the raw amplitudes; homogeneous of degree 4.
Complex hyperdeterminant(const PureState& s, D2Variant variant = D2Variant::Symmetric);

// tau = 4 |U| at unit norm.
double three_tangle(const PureState& s, D2Variant variant = D2Variant::Symmetric);

using Matrix2 = std::array<std::array<Complex, 2>, 2>;

// Applies factors[0] (x) factors[1] (x) ... to a multi-qubit state. Throws
// WrongDims, LengthMismatch, NotUnitary (tolerance 1e-12).
PureState local_unitary_apply(const PureState& s, std::span<const Matrix2> factors);

}  // namespace toric
