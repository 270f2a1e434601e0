#include "toric/fan.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

bool by_dimension(const Cone& a, const Cone& b) {
  const auto da = a.span_dim(), db = b.span_dim();
  if (da != db) return da < db;
  return a < b;
}

bool generators_subset(const Cone& small, const Cone& large) {
  const auto& g = large.generators();
  return std::all_of(small.generators().begin(), small.generators().end(),
                     [&](const LatticeVector& v) { return std::binary_search(g.begin(), g.end(), v); });
}

}  // namespace

bool is_fan(std::span<const Cone> cones) {
  if (cones.empty()) return false;
  const std::size_t dim = cones.front().dim();
  std::set<Cone> all;
  for (const auto& c : cones) {
    if (c.dim() != dim || !is_strongly_convex(c)) return false;
    all.insert(c);
  }

  std::vector<Cone> unique(all.begin(), all.end());
  std::vector<std::set<Cone>> faces;
  faces.reserve(unique.size());
  for (const auto& c : unique) {
    auto f = cone_faces(c);
    for (const auto& face : f)
      if (!all.contains(face)) return false;
    faces.emplace_back(f.begin(), f.end());
  }

  for (std::size_t i = 0; i < unique.size(); ++i) {
    for (std::size_t j = i + 1; j < unique.size(); ++j) {
      const Cone meet = intersect(unique[i], unique[j]);
      if (!faces[i].contains(meet) || !faces[j].contains(meet)) return false;
    }
  }
  return true;
}

Fan Fan::create(std::size_t dim, std::span<const Cone> cones) {
  std::set<Cone> closed;
  for (const auto& c : cones) {
    if (c.dim() != dim) throw Error(ErrorCode::DimensionMismatch, "cone of wrong dimension");
    if (!is_strongly_convex(c)) throw Error(ErrorCode::RangeError, "fan cone is not strongly convex");
    for (auto& f : cone_faces(c)) closed.insert(std::move(f));
  }
  if (closed.empty()) closed.insert(zero_cone(dim));
  std::vector<Cone> sorted(closed.begin(), closed.end());
  if (!is_fan(sorted)) throw Error(ErrorCode::RangeError, "cones do not form a fan");
  std::sort(sorted.begin(), sorted.end(), by_dimension);
  return Fan(dim, std::move(sorted));
}

std::vector<Cone> Fan::maximal_cones() const {
  std::vector<Cone> out;
  for (const auto& c : cones_) {
    bool maximal = std::none_of(cones_.begin(), cones_.end(), [&](const Cone& d) {
      return d.generators().size() > c.generators().size() && generators_subset(c, d);
    });
    if (maximal) out.push_back(c);
  }
  return out;
}

}  // namespace toric
