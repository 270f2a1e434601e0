#pragma once

#include <optional>
#include <span>
#include <vector>

#include "toric/lattice.hpp"

namespace toric::linalg {

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix to_rational(std::span<const LatticeVector> rows, std::size_t dim);

// Reduced row echelon form in place, pivoting only in the first cols
// columns; row operations cover the full row. Returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols);

std::size_t rank(std::span<const LatticeVector> rows, std::size_t dim);

// Canonical basis of {x : <r, x> = 0 for every row r}: one primitive
// integer vector per free column of the rref. Depends only on the span of
// the rows.
std::vector<LatticeVector> kernel_basis(std::span<const LatticeVector> rows, std::size_t dim);

// Orthogonal projection of v onto the complement of span(basis), scaled to a
// primitive lattice vector. Zero if v lies in the span.
LatticeVector project_out(const LatticeVector& v, std::span<const LatticeVector> basis);

// Row Hermite normal form of the lattice spanned by the rows: echelon form,
// positive pivots, entries above each pivot reduced into [0, pivot). Zero
// rows are dropped. Unique for the lattice.
std::vector<LatticeVector> hermite_normal_form(std::vector<LatticeVector> rows);

// Canonical representative of v modulo the lattice with the given HNF basis.
LatticeVector reduce_modulo(LatticeVector v, std::span<const LatticeVector> hnf);

// Unimodular column reduction: finds an integer matrix V with det = +-1 such
// that every row g of the input satisfies (g V)_j = 0 for j >= rank.
// transformed[i] = rows[i] * V restricted to the first rank coordinates.
struct ColumnEchelon {
  std::size_t rank = 0;
  std::vector<LatticeVector> transformed;
  std::vector<LatticeVector> columns;  // columns of V, each of length dim
};
ColumnEchelon column_echelon(std::span<const LatticeVector> rows, std::size_t dim);

// Solves x = sum t_i basis[i] for a square, invertible basis.
std::optional<std::vector<Rational>> coordinates_in_basis(std::span<const LatticeVector> basis,
                                                          const LatticeVector& x);

Integer determinant(std::span<const LatticeVector> rows);

}  // namespace toric::linalg
