#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

// Point of a lattice N = Z^n or of its dual M. Which one is meant is a
// matter of context; the pairing below is the only bridge between them.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t dim) : coords_(dim, 0) {}
  LatticeVector(std::initializer_list<Integer> coords) : coords_(coords) {}
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}

  static LatticeVector unit(std::size_t dim, std::size_t i) {
    LatticeVector e(dim);
    e[i] = 1;
    return e;
  }

  std::size_t dim() const noexcept { return coords_.size(); }
  Integer operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Integer> coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_zero() const noexcept;
  // gcd of the coordinates; 0 for the zero vector.
  Integer content() const noexcept;
  // v / content(v); the zero vector is returned unchanged.
  LatticeVector primitive() const;

  LatticeVector operator-() const;
  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(Integer s, const LatticeVector& v);

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  std::vector<Integer> coords_;
};

// Natural pairing <u, v> = sum u_i v_i between M and N.
Integer pair(const LatticeVector& u, const LatticeVector& v);

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

// Point of N_R or M_R with exact rational coordinates.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t dim) : coords_(dim, Rational(0)) {}
  RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}
  explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  explicit RationalVector(const LatticeVector& v);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_zero() const noexcept;
  bool is_integral() const noexcept;
  // Requires is_integral().
  LatticeVector to_lattice() const;
  // Smallest positive integer multiple that is integral, made primitive.
  LatticeVector clear_denominators() const;

  RationalVector& operator+=(const RationalVector& o);
  RationalVector& operator-=(const RationalVector& o);
  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator*(const Rational& s, const RationalVector& v);

  friend bool operator==(const RationalVector&, const RationalVector&) = default;
  friend auto operator<=>(const RationalVector& a, const RationalVector& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  std::vector<Rational> coords_;
};

Rational pair(const RationalVector& u, const RationalVector& v);
Rational pair(const RationalVector& u, const LatticeVector& v);

std::ostream& operator<<(std::ostream& os, const RationalVector& v);

}  // namespace toric
