#pragma once

#include <utility>
#include <vector>

#include "noeth/rational.hpp"

namespace noeth {

template <class C>
using Matrix = std::vector<std::vector<C>>;

/// Reduced row echelon form over a field. Pivot columns are chosen left
/// to right, so callers control pivot preference through column order.
template <class C>
struct Echelon {
  Matrix<C> rows;           // nonzero rows only, pivot entries equal 1
  std::vector<int> pivots;  // pivot column of each row
};

template <class C>
Echelon<C> row_reduce(Matrix<C> m, int ncols) {
  Echelon<C> out;
  std::size_t r = 0;
  for (int col = 0; col < ncols && r < m.size(); ++col) {
    std::size_t piv = r;
    while (piv < m.size() && is_zero(m[piv][col])) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const C inv = one_like(m[r][col]) / m[r][col];
    for (int k = 0; k < ncols; ++k) {
      if (!is_zero(m[r][k])) m[r][k] = m[r][k] * inv;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || is_zero(m[i][col])) continue;
      const C f = m[i][col];
      for (int k = 0; k < ncols; ++k) {
        if (!is_zero(m[r][k])) m[i][k] = m[i][k] - f * m[r][k];
      }
    }
    out.pivots.push_back(col);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

template <class C>
int matrix_rank(const Matrix<C>& m, int ncols) {
  return static_cast<int>(row_reduce(m, ncols).pivots.size());
}

/// Basis of {v : m v = 0}, one vector per free column in increasing
/// column order; `unit` supplies the field's 1.
template <class C>
Matrix<C> nullspace(const Matrix<C>& m, int ncols, const C& unit) {
  const auto ech = row_reduce(m, ncols);
  std::vector<int> pivot_row(static_cast<std::size_t>(ncols), -1);
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) pivot_row[ech.pivots[i]] = static_cast<int>(i);
  Matrix<C> basis;
  for (int free = 0; free < ncols; ++free) {
    if (pivot_row[free] >= 0) continue;
    std::vector<C> v(static_cast<std::size_t>(ncols), unit - unit);
    v[free] = unit;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      if (!is_zero(ech.rows[i][free])) v[ech.pivots[i]] = -ech.rows[i][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace noeth
