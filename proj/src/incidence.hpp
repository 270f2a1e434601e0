#pragma once

#include <set>
#include <vector>

#include "toric/lattice.hpp"

namespace toric::detail {

using Incidence = std::vector<bool>;

// Closure of the full index set under intersection with the zero sets of the
// given normals; every face of a cone or polytope arises this way.
inline std::set<Incidence> face_incidences(const std::vector<LatticeVector>& points,
                                           const std::vector<LatticeVector>& normals) {
  std::set<Incidence> seen;
  std::vector<Incidence> queue{Incidence(points.size(), true)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    Incidence face = std::move(queue.back());
    queue.pop_back();
    for (const auto& n : normals) {
      Incidence sub(points.size(), false);
      for (std::size_t i = 0; i < points.size(); ++i) sub[i] = face[i] && pair(n, points[i]) == 0;
      if (sub != face && seen.insert(sub).second) queue.push_back(std::move(sub));
    }
  }
  return seen;
}

}  // namespace toric::detail
