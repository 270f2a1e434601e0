#include "toric/segre.hpp"

#include <cmath>
#include <set>

namespace toric {

namespace {

constexpr std::size_t kMaxSegreEntries = 4096;

void require_range(int m, int lo, int hi, const char* what) {
  if (m < lo || m > hi) throw Error(ErrorCode::RangeError, what);
}

template <typename T>
T power(T base, Integer e) {
  T result(1);
  T b = e < 0 ? T(1) / base : base;
  for (Integer k = e < 0 ? -e : e; k > 0; --k) result *= b;
  return result;
}

}  // namespace

Polytope cube_polytope(int m) {
  require_range(m, 1, 4, "cube dimension must be in [1, 4]");
  const std::size_t n = static_cast<std::size_t>(m);
  std::vector<LatticeVector> vertices;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    LatticeVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> (n - 1 - i)) & 1 ? 1 : -1;
    vertices.push_back(std::move(v));
  }
  return Polytope::from_points(n, vertices);
}

MonomialMap segre_monomial_map(int m) {
  require_range(m, 1, 6, "Segre map supports 1 <= m <= 6");
  const std::size_t n = static_cast<std::size_t>(m);
  MonomialMap map{n, {}};
  for (std::size_t b = 0; b < (std::size_t{1} << n); ++b) {
    ExponentVector e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<Integer>((b >> (n - 1 - i)) & 1);
    map.exponents.push_back(std::move(e));
  }
  return map;
}

bool projectively_equal(const ProjectivePoint& a, const ProjectivePoint& b, double tol) {
  if (a.coords.size() != b.coords.size()) return false;
  double na = 0.0, nb = 0.0;
  for (const auto& x : a.coords) na += std::norm(x);
  for (const auto& x : b.coords) nb += std::norm(x);
  if (na == 0.0 || nb == 0.0) return false;
  const double scale = std::sqrt(na * nb);
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    for (std::size_t j = i + 1; j < a.coords.size(); ++j)
      if (std::abs(a.coords[i] * b.coords[j] - a.coords[j] * b.coords[i]) > tol * scale)
        return false;
  return true;
}

ProjectivePoint evaluate_map(const MonomialMap& map, std::span<const Complex> z) {
  if (z.size() != map.affine_dim)
    throw Error(ErrorCode::DimensionMismatch, "point dimension does not match the map");
  ProjectivePoint p;
  p.coords.reserve(map.exponents.size());
  for (const auto& e : map.exponents) {
    Complex c(1.0);
    for (std::size_t i = 0; i < map.affine_dim; ++i)
      if (e[i] != 0) c *= power(z[i], e[i]);
    p.coords.push_back(c);
  }
  return p;
}

std::vector<Rational> evaluate_map(const MonomialMap& map, std::span<const Rational> z) {
  if (z.size() != map.affine_dim)
    throw Error(ErrorCode::DimensionMismatch, "point dimension does not match the map");
  std::vector<Rational> out;
  out.reserve(map.exponents.size());
  for (const auto& e : map.exponents) {
    Rational c(1);
    for (std::size_t i = 0; i < map.affine_dim; ++i)
      if (e[i] != 0) c *= power(z[i], e[i]);
    out.push_back(c);
  }
  return out;
}

SegreIdeal segre_ideal(std::span<const std::size_t> dims) {
  if (dims.empty()) throw Error(ErrorCode::RangeError, "Segre ideal needs subsystems");
  std::size_t total = 1;
  for (auto d : dims) {
    if (d < 2) throw Error(ErrorCode::RangeError, "subsystem dimension must be at least 2");
    total *= d;
    if (total > kMaxSegreEntries) throw Error(ErrorCode::RangeError, "more than 4096 amplitudes");
  }

  std::set<BinomialRelation> quadrics;
  for (std::size_t k = 0; k < total; ++k) {
    const auto kd = unflatten(k, dims);
    for (std::size_t l = k + 1; l < total; ++l) {
      const auto ld = unflatten(l, dims);
      for (std::size_t j = 0; j < dims.size(); ++j) {
        if (kd[j] == ld[j]) continue;
        auto ks = kd, ls = ld;
        std::swap(ks[j], ls[j]);
        const std::size_t k2 = flatten(ks, dims), l2 = flatten(ls, dims);
        if (k2 == k || k2 == l) continue;
        quadrics.emplace(std::vector<std::size_t>{k, l}, std::vector<std::size_t>{k2, l2});
      }
    }
  }
  return {std::vector<std::size_t>(dims.begin(), dims.end()), {quadrics.begin(), quadrics.end()}};
}

PureState embed_product_state(std::span<const std::vector<Complex>> factors) {
  if (factors.empty()) throw Error(ErrorCode::RangeError, "no factors");
  std::vector<std::size_t> dims;
  for (const auto& f : factors) {
    if (f.empty()) throw Error(ErrorCode::LengthMismatch, "empty factor");
    bool zero = true;
    for (const auto& a : f) zero = zero && a == Complex(0.0);
    if (zero) throw Error(ErrorCode::ZeroFactor, "factor vanishes identically");
    dims.push_back(f.size());
  }
  const std::size_t total = total_size(dims);
  std::vector<Complex> amplitudes(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    const auto digits = unflatten(flat, dims);
    Complex a(1.0);
    for (std::size_t i = 0; i < dims.size(); ++i) a *= factors[i][digits[i]];
    amplitudes[flat] = a;
  }
  return state_from_amplitudes(std::move(dims), std::move(amplitudes), true);
}

}  // namespace toric
