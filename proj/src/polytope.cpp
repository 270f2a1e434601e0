#include "toric/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "incidence.hpp"
#include "toric/linalg.hpp"

namespace toric {

namespace {

constexpr std::size_t kMaxFaceLatticeDim = 4;
constexpr std::size_t kMaxFaceLatticeVertices = 16;

// (1, v) scaled to a primitive lattice vector: the cone over P at height 1.
LatticeVector homogenize(const RationalVector& v) {
  std::vector<Rational> h;
  h.reserve(v.dim() + 1);
  h.emplace_back(1);
  h.insert(h.end(), v.begin(), v.end());
  return RationalVector(std::move(h)).clear_denominators();
}

std::vector<LatticeVector> homogenize_all(const std::vector<RationalVector>& points) {
  std::vector<LatticeVector> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(homogenize(p));
  return out;
}

Cone cone_over(const Polytope& p) {
  const auto h = homogenize_all(p.vertices());
  return cone_from_generators(p.dim() + 1, h);
}

// Facet normals (a0, a) of the cone over p, i.e. facets a0 + <a, x> >= 0.
// Throws OriginNotInterior unless every a0 is positive and p is full-dimensional.
std::vector<LatticeVector> facets_around_origin(const Polytope& p) {
  if (!p.is_full_dimensional())
    throw Error(ErrorCode::OriginNotInterior, "polytope is not full-dimensional");
  auto normals = cone_over(p).facet_normals();
  for (const auto& n : normals)
    if (n[0] <= 0) throw Error(ErrorCode::OriginNotInterior, "origin is not strictly interior");
  return normals;
}

}  // namespace

Polytope Polytope::from_points(std::size_t dim, std::span<const RationalVector> points) {
  if (points.empty()) throw Error(ErrorCode::RangeError, "polytope needs at least one point");
  for (const auto& p : points)
    if (p.dim() != dim) throw Error(ErrorCode::DimensionMismatch, "point of wrong dimension");

  std::vector<LatticeVector> lifted;
  for (const auto& p : points) lifted.push_back(homogenize(p));
  const Cone cone = cone_from_generators(dim + 1, lifted);
  const std::set<LatticeVector> extreme(cone.generators().begin(), cone.generators().end());

  std::set<RationalVector> vertices;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (extreme.contains(lifted[i])) vertices.insert(points[i]);
  return Polytope(dim, {vertices.begin(), vertices.end()});
}

Polytope Polytope::from_points(std::size_t dim, std::span<const LatticeVector> points) {
  std::vector<RationalVector> r;
  r.reserve(points.size());
  for (const auto& p : points) r.emplace_back(p);
  return from_points(dim, r);
}

bool Polytope::is_full_dimensional() const {
  return linalg::rank(homogenize_all(vertices_), dim_ + 1) == dim_ + 1;
}

bool Polytope::is_lattice() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const RationalVector& v) { return v.is_integral(); });
}

std::vector<std::size_t> FaceLattice::counts() const {
  std::vector<std::size_t> out;
  for (const auto& f : faces) out.push_back(f.size());
  return out;
}

Polytope polar_polytope(const Polytope& p) {
  std::vector<RationalVector> vertices;
  for (const auto& n : facets_around_origin(p)) {
    RationalVector u(p.dim());
    for (std::size_t j = 0; j < p.dim(); ++j) u[j] = Rational(n[j + 1], n[0]);
    vertices.push_back(std::move(u));
  }
  return Polytope::from_points(p.dim(), vertices);
}

FaceLattice polytope_faces(const Polytope& p) {
  if (p.dim() > kMaxFaceLatticeDim || p.vertices().size() > kMaxFaceLatticeVertices)
    throw Error(ErrorCode::DimensionTooLarge, "face lattice limited to dim 4 and 16 vertices");
  if (!p.is_full_dimensional())
    throw Error(ErrorCode::DegeneratePolytope, "polytope is not full-dimensional");

  const auto lifted = homogenize_all(p.vertices());
  const Cone cone = cone_from_generators(p.dim() + 1, lifted);

  FaceLattice lattice;
  lattice.dim = p.dim();
  lattice.faces.resize(p.dim() + 1);
  for (const auto& incidence : detail::face_incidences(lifted, cone.facet_normals())) {
    std::vector<std::size_t> face;
    std::vector<LatticeVector> points;
    for (std::size_t i = 0; i < incidence.size(); ++i) {
      if (!incidence[i]) continue;
      face.push_back(i);
      points.push_back(lifted[i]);
    }
    if (face.empty()) continue;
    lattice.faces[linalg::rank(points, p.dim() + 1) - 1].push_back(std::move(face));
  }
  for (auto& group : lattice.faces) std::sort(group.begin(), group.end());
  return lattice;
}

Fan face_fan(const Polytope& p) {
  if (!p.is_lattice()) throw Error(ErrorCode::NonLatticeVertex, "face fan needs lattice vertices");
  facets_around_origin(p);
  const auto lattice = polytope_faces(p);

  std::vector<Cone> cones{zero_cone(p.dim())};
  for (std::size_t k = 0; k < p.dim(); ++k) {
    for (const auto& face : lattice.faces[k]) {
      std::vector<LatticeVector> rays;
      for (auto i : face) rays.push_back(p.vertices()[i].to_lattice());
      cones.push_back(cone_from_generators(p.dim(), rays));
    }
  }
  return Fan::create(p.dim(), cones);
}

}  // namespace toric
