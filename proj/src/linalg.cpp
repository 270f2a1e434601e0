#include "toric/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace toric::linalg {

RationalMatrix to_rational(std::span<const LatticeVector> rows, std::size_t dim) {
  RationalMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.dim() != dim) throw Error(ErrorCode::DimensionMismatch, "row of wrong dimension");
    std::vector<Rational> row;
    row.reserve(dim);
    for (Integer c : r) row.emplace_back(c);
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = Rational(1) / m[r][c];
    const std::size_t width = m[r].size();
    for (std::size_t j = c; j < width; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < width; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(std::span<const LatticeVector> rows, std::size_t dim) {
  auto m = to_rational(rows, dim);
  return rref(m, dim).size();
}

std::vector<LatticeVector> kernel_basis(std::span<const LatticeVector> rows, std::size_t dim) {
  auto m = to_rational(rows, dim);
  const auto pivots = rref(m, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<LatticeVector> basis;
  for (std::size_t f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(dim);
    x[f] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][f];
    basis.push_back(x.clear_denominators());
  }
  return basis;
}

LatticeVector project_out(const LatticeVector& v, std::span<const LatticeVector> basis) {
  if (basis.empty()) return v.primitive();
  const std::size_t k = basis.size();
  // Gram system [G | B v] for the coefficients of the projection onto span(basis).
  RationalMatrix g(k, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) g[i][j] = Rational(pair(basis[i], basis[j]));
    g[i][k] = Rational(pair(basis[i], v));
  }
  rref(g, k);
  RationalVector p(v);
  for (std::size_t i = 0; i < k; ++i) p -= g[i][k] * RationalVector(basis[i]);
  if (p.is_zero()) return LatticeVector(v.dim());
  return p.clear_denominators();
}

std::vector<LatticeVector> hermite_normal_form(std::vector<LatticeVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().dim();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || std::llabs(rows[i][c]) < std::llabs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        rows[i] -= (rows[i][c] / rows[r][c]) * rows[r];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r >= rows.size() || rows[r][c] == 0) continue;
    if (rows[r][c] < 0) rows[r] = -rows[r];
    for (std::size_t i = 0; i < r; ++i) rows[i] -= floor_div(rows[i][c], rows[r][c]) * rows[r];
    ++r;
  }
  rows.resize(r);
  return rows;
}

LatticeVector reduce_modulo(LatticeVector v, std::span<const LatticeVector> hnf) {
  for (const auto& b : hnf) {
    std::size_t p = 0;
    while (b[p] == 0) ++p;
    v -= floor_div(v[p], b[p]) * b;
  }
  return v;
}

ColumnEchelon column_echelon(std::span<const LatticeVector> rows, std::size_t dim) {
  std::vector<LatticeVector> a(rows.begin(), rows.end());
  std::vector<LatticeVector> v;  // columns of V
  for (std::size_t j = 0; j < dim; ++j) v.push_back(LatticeVector::unit(dim, j));

  auto col_sub = [&](std::size_t dst, std::size_t src, Integer q) {
    for (auto& row : a) row[dst] = checked::sub(row[dst], checked::mul(q, row[src]));
    v[dst] -= q * v[src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    std::swap(v[x], v[y]);
  };

  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size() && c < dim; ++i) {
    while (true) {
      std::size_t best = dim;
      for (std::size_t j = c; j < dim; ++j) {
        if (a[i][j] == 0) continue;
        if (best == dim || std::llabs(a[i][j]) < std::llabs(a[i][best])) best = j;
      }
      if (best == dim) break;
      col_swap(c, best);
      bool done = true;
      for (std::size_t j = c + 1; j < dim; ++j) {
        if (a[i][j] == 0) continue;
        col_sub(j, c, a[i][j] / a[i][c]);
        if (a[i][j] != 0) done = false;
      }
      if (done) break;
    }
    if (a[i][c] != 0) ++c;
  }

  ColumnEchelon out;
  out.rank = c;
  for (const auto& row : a) {
    LatticeVector t(c);
    for (std::size_t j = 0; j < c; ++j) t[j] = row[j];
    out.transformed.push_back(std::move(t));
  }
  out.columns = std::move(v);
  return out;
}

std::optional<std::vector<Rational>> coordinates_in_basis(std::span<const LatticeVector> basis,
                                                          const LatticeVector& x) {
  const std::size_t n = x.dim();
  const std::size_t k = basis.size();
  RationalMatrix m(n, std::vector<Rational>(k + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) m[j][i] = Rational(basis[i][j]);
    m[j][k] = Rational(x[j]);
  }
  const auto pivots = rref(m, k + 1);
  if (pivots.size() != k || (!pivots.empty() && pivots.back() == k)) return std::nullopt;
  std::vector<Rational> t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = m[i][k];
  return t;
}

Integer determinant(std::span<const LatticeVector> rows) {
  const std::size_t n = rows.size();
  if (n == 0) return 1;
  auto m = to_rational(rows, n);
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det.num();
}

}  // namespace toric::linalg
