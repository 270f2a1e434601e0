#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toric/polytope.hpp"
#include "toric/semigroup.hpp"
#include "toric/state.hpp"

namespace toric {

// The cube [-1, 1]^m with its 2^m sign vertices; 1 <= m <= 4.
Polytope cube_polytope(int m);

// p -> [z^(m_0) : z^(m_1) : ... : z^(m_r)]. Entry l of exponents is m_l.
struct MonomialMap {
  std::size_t affine_dim = 0;
  std::vector<ExponentVector> exponents;

  friend bool operator==(const MonomialMap&, const MonomialMap&) = default;
};

// Exponents {0,1}^m in binary order: entry b carries the bits of b, z_1 on
// the most significant bit. 1 <= m <= 6.
MonomialMap segre_monomial_map(int m);

// Homogeneous coordinates; equality is up to a nonzero global scalar.
struct ProjectivePoint {
  std::vector<Complex> coords;
};

// All 2x2 minors a_i b_j - a_j b_i vanish, relative to |a| |b|.
bool projectively_equal(const ProjectivePoint& a, const ProjectivePoint& b, double tol = 1e-12);

// Coordinate l is prod_i z_i^(m_l[i]). Negative exponents are allowed.
ProjectivePoint evaluate_map(const MonomialMap& map, std::span<const Complex> z);
// Exact variant over the rationals. Throws RangeError on 0^(negative).
std::vector<Rational> evaluate_map(const MonomialMap& map, std::span<const Rational> z);

// Swap quadrics alpha_K alpha_L = alpha_K' alpha_L', where K', L' exchange
// the j-th digit of K and L. Factors are flat amplitude indices.
struct SegreIdeal {
  std::vector<std::size_t> dims;
  std::vector<BinomialRelation> quadrics;
};

// Each dim >= 2 and the product of dims <= 4096, else RangeError.
SegreIdeal segre_ideal(std::span<const std::size_t> dims);

// lhs product minus rhs product on the given coordinates.
template <typename T>
T binomial_value(const BinomialRelation& r, std::span<const T> coords) {
  T left(1), right(1);
  for (auto i : r.lhs()) left *= coords[i];
  for (auto i : r.rhs()) right *= coords[i];
  return left - right;
}

// alpha_(k1...km) = prod_i factor_i[k_i], normalized. Throws ZeroFactor.
PureState embed_product_state(std::span<const std::vector<Complex>> factors);

}  // namespace toric
