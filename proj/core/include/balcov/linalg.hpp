#pragma once

#include "balcov/rational.hpp"

#include <vector>

namespace balcov {

using RationalMatrix = std::vector<RationalVector>;

/// Rank of an arbitrary rational matrix (exact Gaussian elimination).
int matrix_rank(RationalMatrix m);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct SquareSolveResult {
  SolveStatus status = SolveStatus::Unique;
  RationalVector solution; // valid when Unique
  int det_sign = 0;        // sign of det(A), valid when Unique
};

/// Solve A x = b for square A. For singular A the result distinguishes
/// inconsistent systems from consistent underdetermined ones.
SquareSolveResult solve_square(RationalMatrix a, RationalVector b);

/// Sign of the determinant of a square rational matrix.
int determinant_sign(RationalMatrix a);

} // namespace balcov
