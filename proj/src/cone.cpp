#include "toric/cone.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>

#include "incidence.hpp"
#include "toric/linalg.hpp"

namespace toric {

namespace {

constexpr std::size_t kMaxGenerators = 64;

std::vector<LatticeVector> unique_primitive(std::span<const LatticeVector> vectors) {
  std::set<LatticeVector> seen;
  for (const auto& v : vectors)
    if (!v.is_zero()) seen.insert(v.primitive());
  return {seen.begin(), seen.end()};
}

void check_dims(std::size_t dim, std::span<const LatticeVector> vectors) {
  if (dim == 0) throw Error(ErrorCode::RangeError, "cone dimension must be positive");
  if (dim > kMaxConeDim) throw Error(ErrorCode::DimensionTooLarge, "cone dimension above 8");
  for (const auto& v : vectors)
    if (v.dim() != dim) throw Error(ErrorCode::DimensionMismatch, "generator of wrong dimension");
}

// Canonical generating set of Cone(spanning), given any H-description of it.
std::vector<LatticeVector> canonical_generators(std::size_t dim,
                                                std::span<const LatticeVector> spanning,
                                                std::span<const LatticeVector> inequalities) {
  const auto lineality = linalg::kernel_basis(inequalities, dim);

  std::set<LatticeVector> rays;
  for (const auto& s : spanning) {
    LatticeVector p = linalg::project_out(s, lineality);
    if (p.is_zero() || rays.contains(p)) continue;
    std::vector<LatticeVector> tight(lineality.begin(), lineality.end());
    for (const auto& a : inequalities)
      if (pair(a, p) == 0) tight.push_back(a);
    if (linalg::rank(tight, dim) + 1 == dim) rays.insert(std::move(p));
  }

  std::vector<LatticeVector> out;
  for (const auto& l : lineality) {
    out.push_back(l);
    out.push_back(-l);
  }
  out.insert(out.end(), rays.begin(), rays.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

namespace detail {

std::vector<LatticeVector> fourier_motzkin(std::size_t dim, std::span<const LatticeVector> vectors) {
  const auto gens = unique_primitive(vectors);
  const std::size_t k = gens.size();
  if (k > kMaxGenerators)
    throw Error(ErrorCode::DimensionTooLarge, "more than 64 distinct generators");
  const std::size_t width = dim + k;

  // x_j - sum_i g_ij lambda_i = 0 and lambda_i >= 0, over (x, lambda).
  std::vector<LatticeVector> equalities;
  for (std::size_t j = 0; j < dim; ++j) {
    LatticeVector row(width);
    row[j] = 1;
    for (std::size_t i = 0; i < k; ++i) row[dim + i] = checked::neg(gens[i][j]);
    equalities.push_back(std::move(row));
  }
  struct Inequality {
    LatticeVector coeffs;
    std::uint64_t history;
  };
  std::vector<Inequality> inequalities;
  for (std::size_t i = 0; i < k; ++i) {
    LatticeVector row(width);
    row[dim + i] = 1;
    inequalities.push_back({std::move(row), std::uint64_t{1} << i});
  }

  std::vector<bool> eliminated(k, false);

  // Substitute equalities first; this eliminates rank(gens) coefficients exactly.
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t col = dim + i;
    auto it = std::find_if(equalities.begin(), equalities.end(),
                           [&](const LatticeVector& e) { return e[col] != 0; });
    if (it == equalities.end()) continue;
    const LatticeVector pivot = *it;
    equalities.erase(it);
    const Integer p = pivot[col];
    const Integer ap = p < 0 ? -p : p;
    auto substitute = [&](LatticeVector& row) {
      if (row[col] == 0) return;
      const Integer a = p < 0 ? checked::neg(row[col]) : row[col];
      row = (ap * row - a * pivot).primitive();
    };
    for (auto& e : equalities) substitute(e);
    for (auto& q : inequalities) substitute(q.coeffs);
    eliminated[i] = true;
  }

  // Fourier-Motzkin on the remaining coefficients, with Chernikov's rule:
  // after s eliminations a row combining more than s + 1 originals is redundant.
  std::size_t steps = 0;
  while (true) {
    std::size_t best = k;
    std::size_t best_cost = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (eliminated[i]) continue;
      std::size_t pos = 0, neg = 0;
      for (const auto& q : inequalities) {
        pos += q.coeffs[dim + i] > 0;
        neg += q.coeffs[dim + i] < 0;
      }
      const std::size_t cost = pos * neg;
      if (best == k || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best == k) break;
    const std::size_t col = dim + best;
    ++steps;

    std::vector<Inequality> pos, neg;
    std::map<LatticeVector, std::uint64_t> next;
    auto keep = [&](LatticeVector row, std::uint64_t history) {
      if (row.is_zero()) return;
      auto [it, inserted] = next.emplace(std::move(row), history);
      if (!inserted && std::popcount(history) < std::popcount(it->second)) it->second = history;
    };
    for (auto& q : inequalities) {
      if (q.coeffs[col] > 0)
        pos.push_back(std::move(q));
      else if (q.coeffs[col] < 0)
        neg.push_back(std::move(q));
      else
        keep(std::move(q.coeffs), q.history);
    }
    for (const auto& a : pos) {
      for (const auto& b : neg) {
        const std::uint64_t history = a.history | b.history;
        if (static_cast<std::size_t>(std::popcount(history)) > steps + 1) continue;
        keep((checked::neg(b.coeffs[col]) * a.coeffs + a.coeffs[col] * b.coeffs).primitive(),
             history);
      }
    }
    inequalities.clear();
    for (auto& [row, history] : next) inequalities.push_back({row, history});
    eliminated[best] = true;
  }

  std::set<LatticeVector> out;
  auto project = [&](const LatticeVector& row) {
    LatticeVector x(dim);
    for (std::size_t j = 0; j < dim; ++j) x[j] = row[j];
    return x.primitive();
  };
  for (const auto& e : equalities) {
    LatticeVector x = project(e);
    if (x.is_zero()) continue;
    out.insert(-x);
    out.insert(std::move(x));
  }
  for (const auto& q : inequalities) {
    LatticeVector x = project(q.coeffs);
    if (!x.is_zero()) out.insert(std::move(x));
  }
  return {out.begin(), out.end()};
}

}  // namespace detail

Cone cone_from_generators(std::size_t dim, std::span<const LatticeVector> vectors) {
  check_dims(dim, vectors);
  const auto gens = unique_primitive(vectors);
  const auto inequalities = detail::fourier_motzkin(dim, gens);
  auto generators = canonical_generators(dim, gens, inequalities);
  // Cone(inequalities) is the dual cone, whose own H-description is gens.
  auto normals = canonical_generators(dim, inequalities, gens);
  return Cone(dim, std::move(generators), std::move(normals));
}

std::size_t Cone::span_dim() const { return linalg::rank(generators_, dim_); }

bool Cone::contains(const LatticeVector& x) const {
  if (x.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "point of wrong dimension");
  return std::all_of(facet_normals_.begin(), facet_normals_.end(),
                     [&](const LatticeVector& n) { return pair(n, x) >= 0; });
}

bool Cone::contains(const RationalVector& x) const {
  if (x.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "point of wrong dimension");
  return std::all_of(facet_normals_.begin(), facet_normals_.end(),
                     [&](const LatticeVector& n) { return pair(x, n).sign() >= 0; });
}

std::weak_ordering operator<=>(const Cone& a, const Cone& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  return a.generators_ <=> b.generators_;
}

Cone dual_cone(const Cone& c) { return cone_from_generators(c.dim(), c.facet_normals()); }

bool is_strongly_convex(const Cone& c) {
  return linalg::rank(c.facet_normals(), c.dim()) == c.dim();
}

bool is_simplicial(const Cone& c) {
  return linalg::rank(c.generators(), c.dim()) == c.generators().size();
}

std::vector<Cone> cone_faces(const Cone& c) {
  const auto& gens = c.generators();
  std::vector<Cone> faces;
  for (const auto& incidence : detail::face_incidences(gens, c.facet_normals())) {
    std::vector<LatticeVector> subset;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (incidence[i]) subset.push_back(gens[i]);
    faces.push_back(cone_from_generators(c.dim(), subset));
  }
  std::sort(faces.begin(), faces.end(), [](const Cone& a, const Cone& b) {
    const auto da = a.span_dim(), db = b.span_dim();
    if (da != db) return da < db;
    return a < b;
  });
  return faces;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "cones of different dimension");
  std::vector<LatticeVector> normals = a.facet_normals();
  normals.insert(normals.end(), b.facet_normals().begin(), b.facet_normals().end());
  return dual_cone(cone_from_generators(a.dim(), normals));
}

bool is_face_of(const Cone& c, const Cone& d) {
  if (c.dim() != d.dim()) return false;
  for (const auto& g : c.generators())
    if (!d.contains(g)) return false;
  // c is a face iff it is cut out by the normals of d vanishing on all of c.
  std::vector<LatticeVector> on_face;
  for (const auto& g : d.generators()) {
    bool tight = true;
    for (const auto& n : d.facet_normals()) {
      bool vanishes_on_c = std::all_of(c.generators().begin(), c.generators().end(),
                                       [&](const LatticeVector& v) { return pair(n, v) == 0; });
      if (vanishes_on_c && pair(n, g) != 0) {
        tight = false;
        break;
      }
    }
    if (tight) on_face.push_back(g);
  }
  return cone_from_generators(c.dim(), on_face) == c;
}

}  // namespace toric
