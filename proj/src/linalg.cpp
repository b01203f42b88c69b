#include "toric/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace toric {

std::optional<std::vector<Rational>> solve_exact(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("solve_exact: dimension mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t p = pivot_row;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) return std::nullopt;  // rank deficient
    std::swap(a[p], a[pivot_row]);
    std::swap(b[p], b[pivot_row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[pivot_row][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[pivot_row][c];
      b[r] -= factor * b[pivot_row];
    }
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < rows; ++r)
    if (b[r] != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t c = 0; c < cols; ++c) x[c] = b[c] / a[c][c];
  return x;
}

Rational determinant(RationalMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      std::swap(a[p], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

}  // namespace toric
