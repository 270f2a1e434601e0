#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "toric/cone.hpp"
#include "toric/lattice.hpp"

namespace toric {

// Exponent beta of a Laurent monomial z^beta. The semigroup operation is
// componentwise addition: chi^u * chi^u' = chi^(u + u').
using ExponentVector = LatticeVector;

inline constexpr std::size_t kMaxHilbertDim = 4;

// Hilbert basis of S = dual(c) ∩ M. When c is not full-dimensional the
// semigroup has units; they appear as +-b for a Hermite basis b of the unit
// lattice, and the remaining elements are reduced modulo that lattice.
struct SemigroupBasis {
  std::size_t ambient_dim = 0;
  std::vector<ExponentVector> elements;

  friend bool operator==(const SemigroupBasis&, const SemigroupBasis&) = default;
};

// x^(beta_0)_(i_0) ... = x^(beta_k+1)_(i_k+1) ... over generator indices.
// Both sides are stored as sorted factor lists (an index repeated beta times);
// the lexicographically smaller side is kept on the left.
class BinomialRelation {
 public:
  BinomialRelation(std::vector<std::size_t> lhs, std::vector<std::size_t> rhs);

  const std::vector<std::size_t>& lhs() const noexcept { return lhs_; }
  const std::vector<std::size_t>& rhs() const noexcept { return rhs_; }

  // (index, multiplicity) pairs, ascending by index.
  static std::vector<std::pair<std::size_t, std::size_t>> multiplicities(
      const std::vector<std::size_t>& side);

  friend bool operator==(const BinomialRelation&, const BinomialRelation&) = default;
  friend auto operator<=>(const BinomialRelation& a, const BinomialRelation& b) {
    if (auto c = a.lhs_ <=> b.lhs_; c != 0) return c;
    return a.rhs_ <=> b.rhs_;
  }

 private:
  std::vector<std::size_t> lhs_;
  std::vector<std::size_t> rhs_;
};

// Homogeneous relations have equal degree on both sides (projective
// embeddings); affine ones only balance exponents, which lets units appear
// as x_i x_j = 1.
enum class Grading { Homogeneous, Affine };

ExponentVector exponent_sum(std::span<const ExponentVector> gens,
                            const std::vector<std::size_t>& side);

bool is_balanced(const BinomialRelation& r, std::span<const ExponentVector> gens,
                 Grading grading = Grading::Homogeneous);

// Throws DimensionTooLarge above dim 4 and RangeError for cones that are not
// strongly convex.
SemigroupBasis hilbert_basis(const Cone& c);

// Every nontrivial balanced relation with at most max_degree factors per
// side, canonicalized and sorted. Throws RangeError for empty gens or
// max_degree < 2.
std::vector<BinomialRelation> toric_relations(std::span<const ExponentVector> gens,
                                              int max_degree = 2,
                                              Grading grading = Grading::Homogeneous);

// X_sigma = Spec C[S_sigma], presented by the Hilbert basis and the affine
// binomial relations among it.
struct AffineChart {
  Cone cone;
  SemigroupBasis semigroup;
  std::vector<BinomialRelation> relations;
};

AffineChart affine_chart(const Cone& c, int max_degree = 2);

}  // namespace toric
