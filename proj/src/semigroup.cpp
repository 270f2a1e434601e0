#include "toric/semigroup.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/linalg.hpp"

namespace toric {

namespace {

constexpr std::size_t kMaxParallelepipedPoints = 4'000'000;

// Calls f for every k-subset of {0, ..., n-1}, in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Lattice points of the half-open parallelepiped { sum t_i b_i : 0 <= t_i < 1 }
// spanned by an invertible basis, one per coset of Z^d / span(basis).
void parallelepiped_points(const std::vector<LatticeVector>& basis, std::set<LatticeVector>& out) {
  const std::size_t d = basis.size();
  const auto hnf = linalg::hermite_normal_form(basis);
  std::vector<Integer> box(d);
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    box[i] = hnf[i][i];
    total *= static_cast<std::size_t>(box[i]);
  }
  if (total > kMaxParallelepipedPoints)
    throw Error(ErrorCode::DimensionTooLarge, "fundamental parallelepiped too large");

  // Coordinates of each unit vector in the basis, so t(a) = sum_j a_j t(e_j).
  std::vector<std::vector<Rational>> unit_coords;
  for (std::size_t j = 0; j < d; ++j)
    unit_coords.push_back(*linalg::coordinates_in_basis(basis, LatticeVector::unit(d, j)));

  std::vector<Integer> a(d, 0);
  while (true) {
    RationalVector x(d);
    for (std::size_t i = 0; i < d; ++i) {
      Rational t;
      for (std::size_t j = 0; j < d; ++j)
        if (a[j] != 0) t += Rational(a[j]) * unit_coords[j][i];
      x += t.frac() * RationalVector(basis[i]);
    }
    if (!x.is_zero()) out.insert(x.to_lattice());

    std::size_t i = 0;
    while (i < d && ++a[i] == box[i]) a[i++] = 0;
    if (i == d) break;
  }
}

// Irreducible elements of dual(cone) ∩ Z^d for a full-dimensional cone with
// the given generators; rays are the extreme rays of the (pointed) dual.
std::vector<LatticeVector> pointed_hilbert_basis(std::size_t d,
                                                 const std::vector<LatticeVector>& gens,
                                                 const std::vector<LatticeVector>& rays) {
  // Any irreducible x = sum t_i b_i over some linearly independent rays has
  // all t_i < 1 or is a ray itself.
  std::set<LatticeVector> candidates(rays.begin(), rays.end());
  for_each_subset(rays.size(), d, [&](const std::vector<std::size_t>& idx) {
    std::vector<LatticeVector> basis;
    for (auto i : idx) basis.push_back(rays[i]);
    if (linalg::determinant(basis) != 0) parallelepiped_points(basis, candidates);
  });

  // Grading by an interior point of the primal cone: positive on dual \ {0}.
  LatticeVector interior(d);
  for (const auto& g : gens) interior += g;
  auto in_dual = [&](const LatticeVector& x) {
    return std::all_of(gens.begin(), gens.end(), [&](const LatticeVector& g) { return pair(x, g) >= 0; });
  };

  std::vector<std::pair<Integer, LatticeVector>> graded;
  for (const auto& x : candidates) graded.emplace_back(pair(x, interior), x);
  std::sort(graded.begin(), graded.end());

  std::vector<std::pair<Integer, LatticeVector>> basis;
  for (const auto& [degree, x] : graded) {
    const bool reducible = std::any_of(basis.begin(), basis.end(), [&](const auto& h) {
      return h.first < degree && in_dual(x - h.second);
    });
    if (!reducible) basis.emplace_back(degree, x);
  }

  std::vector<LatticeVector> out;
  for (auto& [degree, x] : basis) out.push_back(std::move(x));
  return out;
}

}  // namespace

BinomialRelation::BinomialRelation(std::vector<std::size_t> lhs, std::vector<std::size_t> rhs)
    : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  std::sort(lhs_.begin(), lhs_.end());
  std::sort(rhs_.begin(), rhs_.end());
  if (rhs_ < lhs_) std::swap(lhs_, rhs_);
}

std::vector<std::pair<std::size_t, std::size_t>> BinomialRelation::multiplicities(
    const std::vector<std::size_t>& side) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto i : side) {
    if (!out.empty() && out.back().first == i)
      ++out.back().second;
    else
      out.emplace_back(i, 1);
  }
  return out;
}

ExponentVector exponent_sum(std::span<const ExponentVector> gens,
                            const std::vector<std::size_t>& side) {
  if (gens.empty()) throw Error(ErrorCode::RangeError, "no generators");
  ExponentVector sum(gens.front().dim());
  for (auto i : side) {
    if (i >= gens.size()) throw Error(ErrorCode::RangeError, "factor index out of range");
    sum += gens[i];
  }
  return sum;
}

bool is_balanced(const BinomialRelation& r, std::span<const ExponentVector> gens, Grading grading) {
  if (grading == Grading::Homogeneous && r.lhs().size() != r.rhs().size()) return false;
  return exponent_sum(gens, r.lhs()) == exponent_sum(gens, r.rhs());
}

SemigroupBasis hilbert_basis(const Cone& c) {
  const std::size_t n = c.dim();
  if (n > kMaxHilbertDim) throw Error(ErrorCode::DimensionTooLarge, "Hilbert basis limited to dim 4");
  if (!is_strongly_convex(c)) throw Error(ErrorCode::RangeError, "cone is not strongly convex");

  // Unimodular coordinates in which c spans the first d axes; the dual then
  // splits as dual(c') x Z^(n-d).
  const auto echelon = linalg::column_echelon(c.generators(), n);
  const std::size_t d = echelon.rank;

  std::vector<LatticeVector> unit_lattice(echelon.columns.begin() + static_cast<std::ptrdiff_t>(d),
                                          echelon.columns.end());
  unit_lattice = linalg::hermite_normal_form(std::move(unit_lattice));

  std::set<ExponentVector> elements;
  for (const auto& b : unit_lattice) {
    elements.insert(b);
    elements.insert(-b);
  }

  if (d > 0) {
    const Cone reduced = cone_from_generators(d, echelon.transformed);
    for (const auto& p : pointed_hilbert_basis(d, reduced.generators(), reduced.facet_normals())) {
      LatticeVector lift(n);
      for (std::size_t j = 0; j < d; ++j) lift += p[j] * echelon.columns[j];
      elements.insert(linalg::reduce_modulo(std::move(lift), unit_lattice));
    }
  }
  return {n, {elements.begin(), elements.end()}};
}

std::vector<BinomialRelation> toric_relations(std::span<const ExponentVector> gens, int max_degree,
                                              Grading grading) {
  if (gens.empty()) throw Error(ErrorCode::RangeError, "toric relations need generators");
  if (max_degree < 2) throw Error(ErrorCode::RangeError, "max_degree must be at least 2");
  for (const auto& g : gens)
    if (g.dim() != gens.front().dim())
      throw Error(ErrorCode::DimensionMismatch, "generators of different dimension");

  // Monomials grouped by exponent (and degree, when homogeneous).
  std::map<std::pair<std::size_t, ExponentVector>, std::vector<std::vector<std::size_t>>> groups;
  std::vector<std::size_t> factors;
  auto visit = [&](auto&& self, std::size_t first, const ExponentVector& sum) -> void {
    const std::size_t key_degree = grading == Grading::Homogeneous ? factors.size() : 0;
    groups[{key_degree, sum}].push_back(factors);
    if (factors.size() == static_cast<std::size_t>(max_degree)) return;
    for (std::size_t i = first; i < gens.size(); ++i) {
      factors.push_back(i);
      self(self, i, sum + gens[i]);
      factors.pop_back();
    }
  };
  visit(visit, 0, ExponentVector(gens.front().dim()));

  std::set<BinomialRelation> relations;
  for (const auto& [key, monomials] : groups) {
    for (std::size_t a = 0; a < monomials.size(); ++a)
      for (std::size_t b = a + 1; b < monomials.size(); ++b)
        relations.emplace(monomials[a], monomials[b]);
  }
  return {relations.begin(), relations.end()};
}

AffineChart affine_chart(const Cone& c, int max_degree) {
  SemigroupBasis basis = hilbert_basis(c);
  auto relations = toric_relations(basis.elements, max_degree, Grading::Affine);
  return {c, std::move(basis), std::move(relations)};
}

}  // namespace toric
