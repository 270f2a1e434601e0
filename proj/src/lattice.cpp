#include "toric/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace toric {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorCode::DimensionMismatch, "vectors of different dimension");
}

}  // namespace

bool LatticeVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Integer c) { return c == 0; });
}

Integer LatticeVector::content() const noexcept {
  Integer g = 0;
  for (Integer c : coords_) g = gcd(g, c);
  return g;
}

LatticeVector LatticeVector::primitive() const {
  const Integer g = content();
  if (g <= 1) return *this;
  LatticeVector out(*this);
  for (auto& c : out.coords_) c /= g;
  return out;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector out(*this);
  for (auto& c : out.coords_) c = checked::neg(c);
  return out;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  require_same_dim(dim(), o.dim());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked::add(coords_[i], o[i]);
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  require_same_dim(dim(), o.dim());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked::sub(coords_[i], o[i]);
  return *this;
}

LatticeVector operator*(Integer s, const LatticeVector& v) {
  LatticeVector out(v);
  for (auto& c : out.coords_) c = checked::mul(s, c);
  return out;
}

Integer pair(const LatticeVector& u, const LatticeVector& v) {
  require_same_dim(u.dim(), v.dim());
  __int128 acc = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) acc += static_cast<__int128>(u[i]) * v[i];
  return checked::narrow(acc);
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

RationalVector::RationalVector(const LatticeVector& v) {
  coords_.reserve(v.dim());
  for (Integer c : v) coords_.emplace_back(c);
}

bool RationalVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool RationalVector::is_integral() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& c) { return c.is_integer(); });
}

LatticeVector RationalVector::to_lattice() const {
  std::vector<Integer> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) {
    if (!c.is_integer()) throw Error(ErrorCode::NonLatticeVertex, "coordinate is not integral");
    out.push_back(c.num());
  }
  return LatticeVector(std::move(out));
}

LatticeVector RationalVector::clear_denominators() const {
  Integer l = 1;
  for (const auto& c : coords_) l = checked::mul(l / gcd(l, c.den()), c.den());
  std::vector<Integer> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back((c * Rational(l)).num());
  return LatticeVector(std::move(out)).primitive();
}

RationalVector& RationalVector::operator+=(const RationalVector& o) {
  require_same_dim(dim(), o.dim());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& o) {
  require_same_dim(dim(), o.dim());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o[i];
  return *this;
}

RationalVector operator*(const Rational& s, const RationalVector& v) {
  RationalVector out(v);
  for (auto& c : out.coords_) c *= s;
  return out;
}

Rational pair(const RationalVector& u, const RationalVector& v) {
  require_same_dim(u.dim(), v.dim());
  Rational acc;
  for (std::size_t i = 0; i < u.dim(); ++i) acc += u[i] * v[i];
  return acc;
}

Rational pair(const RationalVector& u, const LatticeVector& v) {
  require_same_dim(u.dim(), v.dim());
  Rational acc;
  for (std::size_t i = 0; i < u.dim(); ++i) acc += u[i] * Rational(v[i]);
  return acc;
}

std::ostream& operator<<(std::ostream& os, const RationalVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

}  // namespace toric
