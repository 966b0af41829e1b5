#pragma once

// Exact Gaussian elimination over a coefficient ring. Pivots are the first
// invertible entry in row-major order below the current row; free unknowns
// are set to zero.

#include "a22/scalar.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace a22 {

template <CoeffRing R>
using Matrix = std::vector<std::vector<R>>;

template <CoeffRing R>
std::optional<std::vector<R>> solve_linear(Matrix<R> a, std::vector<R> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("solve_linear: row count mismatch");
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("solve_linear: ragged matrix");

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    bool nilpotent_seen = false;
    for (std::size_t i = r; i < rows; ++i) {
      if (is_invertible(a[i][c])) {
        p = i;
        break;
      }
      if (!is_zero(a[i][c])) nilpotent_seen = true;
    }
    if (p == rows) {
      // A column whose only nonzero entries are non-invertible cannot be
      // eliminated exactly over a ring with nilpotents.
      if (nilpotent_seen) throw DegenerateDivision("solve_linear: non-invertible pivot column");
      continue;
    }
    std::swap(a[r], a[p]);
    std::swap(b[r], b[p]);
    R inv = inverse(a[r][c]);
    for (std::size_t k = c; k < cols; ++k) a[r][k] = a[r][k] * inv;
    b[r] = b[r] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      R f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!is_zero(b[i])) return std::nullopt;

  std::vector<R> x(cols, R(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace a22
