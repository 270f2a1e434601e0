#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"

namespace toric {

// Conv(S) for a finite S in R^n, stored by its vertices only, sorted
// lexicographically. Points of the input that are not vertices are dropped.
class Polytope {
 public:
  static Polytope from_points(std::size_t dim, std::span<const RationalVector> points);
  static Polytope from_points(std::size_t dim, std::span<const LatticeVector> points);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<RationalVector>& vertices() const noexcept { return vertices_; }

  bool is_full_dimensional() const;
  bool is_lattice() const;

  friend bool operator==(const Polytope&, const Polytope&) = default;

 private:
  Polytope(std::size_t dim, std::vector<RationalVector> vertices)
      : dim_(dim), vertices_(std::move(vertices)) {}

  std::size_t dim_ = 0;
  std::vector<RationalVector> vertices_;
};

// faces[k] lists the k-dimensional faces as sorted vertex index sets, for
// k = 0..dim; faces[dim] holds the polytope itself. The empty face is omitted.
struct FaceLattice {
  std::size_t dim = 0;
  std::vector<std::vector<std::vector<std::size_t>>> faces;

  std::vector<std::size_t> counts() const;
};

// P-polar = { u : <u, v> >= -1 for all v in P }. Throws OriginNotInterior.
Polytope polar_polytope(const Polytope& p);

// Throws DegeneratePolytope unless full-dimensional; DimensionTooLarge
// beyond dim 4 or 16 vertices.
FaceLattice polytope_faces(const Polytope& p);

// Fan of cones over the proper faces of p (plus the zero cone). Pass the
// polar of a polytope to obtain its normal fan. Throws NonLatticeVertex,
// OriginNotInterior, and polytope_faces errors.
Fan face_fan(const Polytope& p);

}  // namespace toric
