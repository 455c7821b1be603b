#include "balcov/linalg.hpp"

#include "balcov/errors.hpp"

#include <utility>

namespace balcov {

int matrix_rank(RationalMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (sgn(m[i][col]) == 0) continue;
      const Rational factor = m[i][col] / m[rank][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

SquareSolveResult solve_square(RationalMatrix a, RationalVector b) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw InputError("solve_square: matrix is not square");
  }
  if (b.size() != n) throw InputError("solve_square: rhs size mismatch");

  SquareSolveResult res;
  int swap_parity = 1;
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col_of_row(n, 0);
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t pivot = row;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != row) {
      std::swap(a[row], a[pivot]);
      std::swap(b[row], b[pivot]);
      swap_parity = -swap_parity;
    }
    for (std::size_t i = row + 1; i < n; ++i) {
      if (sgn(a[i][col]) == 0) continue;
      const Rational factor = a[i][col] / a[row][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= factor * a[row][j];
      b[i] -= factor * b[row];
    }
    pivot_col_of_row[row] = col;
    ++row;
  }
  if (row < n) {
    // Singular: consistent iff the zero rows have zero rhs.
    for (std::size_t i = row; i < n; ++i) {
      if (sgn(b[i]) != 0) {
        res.status = SolveStatus::Inconsistent;
        return res;
      }
    }
    res.status = SolveStatus::Underdetermined;
    return res;
  }

  res.status = SolveStatus::Unique;
  res.det_sign = swap_parity;
  for (std::size_t i = 0; i < n; ++i) res.det_sign *= sgn(a[i][pivot_col_of_row[i]]);
  res.solution.assign(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * res.solution[j];
    res.solution[i] = acc / a[i][i];
  }
  return res;
}

int determinant_sign(RationalMatrix a) {
  const std::size_t n = a.size();
  RationalVector zero(n, Rational(0));
  SquareSolveResult r = solve_square(std::move(a), zero);
  return r.status == SolveStatus::Unique ? r.det_sign : 0;
}

} // namespace balcov
