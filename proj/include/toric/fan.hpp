#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

// Finite set of strongly convex rational cones, closed under taking faces,
// in which any two cones meet in a common face.
class Fan {
 public:
  // Adds every face of every input cone, then validates. Throws RangeError
  // if the result is not a fan.
  static Fan create(std::size_t dim, std::span<const Cone> cones);

  std::size_t dim() const noexcept { return dim_; }
  // Sorted by dimension, then canonical generators.
  const std::vector<Cone>& cones() const noexcept { return cones_; }
  // Cones that are not a proper face of another cone in the fan.
  std::vector<Cone> maximal_cones() const;

 private:
  Fan(std::size_t dim, std::vector<Cone> cones) : dim_(dim), cones_(std::move(cones)) {}

  std::size_t dim_ = 0;
  std::vector<Cone> cones_;
};

// Nonempty, same dimension, all strongly convex, face-closed, and pairwise
// intersections are faces of both cones.
bool is_fan(std::span<const Cone> cones);

}  // namespace toric
