#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

inline constexpr std::size_t kMaxConeDim = 8;

// Rational polyhedral cone in N_R, held in canonical form:
//
//  * generators: a basis of the lineality space L (rref-derived, both signs)
//    followed by the primitive extreme rays of the pointed part C / L,
//    sorted lexicographically;
//  * facet_normals: the same canonical generating set for the dual cone, so
//    that x is in the cone iff <n, x> >= 0 for every normal n.
//
// Two cones are equal iff their canonical forms are equal. The zero cone has
// no generators.
class Cone {
 public:
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<LatticeVector>& generators() const noexcept { return generators_; }
  const std::vector<LatticeVector>& facet_normals() const noexcept { return facet_normals_; }

  bool is_zero() const noexcept { return generators_.empty(); }
  // Dimension of the linear span.
  std::size_t span_dim() const;

  bool contains(const LatticeVector& x) const;
  bool contains(const RationalVector& x) const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.dim_ == b.dim_ && a.generators_ == b.generators_;
  }
  friend std::weak_ordering operator<=>(const Cone& a, const Cone& b);

 private:
  friend Cone cone_from_generators(std::size_t dim, std::span<const LatticeVector> vectors);

  Cone(std::size_t dim, std::vector<LatticeVector> generators,
       std::vector<LatticeVector> facet_normals)
      : dim_(dim), generators_(std::move(generators)), facet_normals_(std::move(facet_normals)) {}

  std::size_t dim_ = 0;
  std::vector<LatticeVector> generators_;
  std::vector<LatticeVector> facet_normals_;
};

// Cone(S) = { sum lambda_v v : lambda_v >= 0 }. Empty input gives the zero
// cone. Throws DimensionMismatch / DimensionTooLarge (dim > 8).
Cone cone_from_generators(std::size_t dim, std::span<const LatticeVector> vectors);

inline Cone cone_from_generators(std::size_t dim, std::initializer_list<LatticeVector> vectors) {
  return cone_from_generators(dim, std::span<const LatticeVector>(vectors.begin(), vectors.size()));
}

inline Cone zero_cone(std::size_t dim) { return cone_from_generators(dim, {}); }

// { u in M_R : <u, v> >= 0 for all v in c }.
Cone dual_cone(const Cone& c);

// c and -c meet only in 0.
bool is_strongly_convex(const Cone& c);

// Minimal generators are linearly independent.
bool is_simplicial(const Cone& c);

// All faces including c and the zero face, ordered by dimension and then by
// canonical generators.
std::vector<Cone> cone_faces(const Cone& c);

Cone intersect(const Cone& a, const Cone& b);

// True iff c is a face of d.
bool is_face_of(const Cone& c, const Cone& d);

namespace detail {

// H-description of Cone(vectors) by Fourier-Motzkin elimination of the
// combination coefficients: x in the cone iff <a, x> >= 0 for all rows a.
// Rows are primitive and deduplicated but not necessarily irredundant.
std::vector<LatticeVector> fourier_motzkin(std::size_t dim, std::span<const LatticeVector> vectors);

}  // namespace detail

}  // namespace toric
