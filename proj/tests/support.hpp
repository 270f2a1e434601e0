#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "toric/entanglement.hpp"
#include "toric/fan.hpp"
#include "toric/polytope.hpp"
#include "toric/segre.hpp"
#include "toric/semigroup.hpp"

namespace support {

using toric::Complex;
using toric::LatticeVector;

inline oracle::Vec to_vec(const LatticeVector& v) { return {v.begin(), v.end()}; }
inline LatticeVector to_lattice(const oracle::Vec& v) { return LatticeVector(v); }

inline std::vector<oracle::Vec> to_vecs(const std::vector<LatticeVector>& vs) {
  std::vector<oracle::Vec> out;
  for (const auto& v : vs) out.push_back(to_vec(v));
  return out;
}

inline std::vector<LatticeVector> lattice_vectors(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<LatticeVector> out;
  for (const auto& r : rows) {
    LatticeVector v(r.size());
    std::size_t i = 0;
    for (auto x : r) v[i++] = x;
    out.push_back(v);
  }
  return out;
}

inline toric::Cone cone(std::size_t dim, std::initializer_list<std::initializer_list<long>> rows) {
  return toric::cone_from_generators(dim, lattice_vectors(rows));
}

inline LatticeVector random_vector(std::mt19937_64& rng, std::size_t dim, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  LatticeVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = d(rng);
  return v;
}

// Random strongly convex cone with 1..max_gens generators in [-lim, lim]^dim.
inline toric::Cone random_pointed_cone(std::mt19937_64& rng, std::size_t dim, std::size_t max_gens,
                                       long lim, bool full_dimensional = false) {
  std::uniform_int_distribution<std::size_t> count(full_dimensional ? dim : 1, max_gens);
  while (true) {
    std::vector<LatticeVector> gens;
    const std::size_t k = count(rng);
    for (std::size_t i = 0; i < k; ++i) gens.push_back(random_vector(rng, dim, -lim, lim));
    const auto c = toric::cone_from_generators(dim, gens);
    if (!toric::is_strongly_convex(c)) continue;
    if (full_dimensional && c.span_dim() != dim) continue;
    return c;
  }
}

inline Complex random_complex(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  return {n(rng), n(rng)};
}

inline std::vector<Complex> random_amplitudes(std::mt19937_64& rng, std::size_t n) {
  std::vector<Complex> a(n);
  for (auto& x : a) x = random_complex(rng);
  return a;
}

// Kronecker product of factors, first factor most significant.
inline std::vector<Complex> kron(const std::vector<std::vector<Complex>>& factors) {
  std::vector<Complex> out{1.0};
  for (const auto& f : factors) {
    std::vector<Complex> next;
    for (const auto& a : out)
      for (const auto& b : f) next.push_back(a * b);
    out = std::move(next);
  }
  return out;
}

inline toric::Matrix2 random_unitary(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double theta = std::acos(std::sqrt(u(rng)));
  const Complex a = std::polar(std::cos(theta), ang(rng));
  const Complex b = std::polar(std::sin(theta), ang(rng));
  const Complex phase = std::polar(1.0, ang(rng));
  return {{{phase * a, phase * b}, {-phase * std::conj(b), phase * std::conj(a)}}};
}

inline toric::PureState state(std::vector<std::size_t> dims, std::vector<Complex> amps,
                              bool normalize = true) {
  return toric::state_from_amplitudes(std::move(dims), std::move(amps), normalize);
}

inline toric::PureState ghz() { return state({2, 2, 2}, {1, 0, 0, 0, 0, 0, 0, 1}); }
inline toric::PureState w_state() { return state({2, 2, 2}, {0, 1, 1, 0, 1, 0, 0, 0}); }
inline toric::PureState zero_bell() { return state({2, 2, 2}, {1, 0, 0, 1, 0, 0, 0, 0}); }
inline toric::PureState bell() { return state({2, 2}, {1, 0, 0, 1}); }

}  // namespace support
