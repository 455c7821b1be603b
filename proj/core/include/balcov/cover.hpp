#pragma once

#include "balcov/complex.hpp"
#include "balcov/rational.hpp"

#include <map>

namespace balcov {

/// A weighted cover sample: for each triangulation vertex, a nonnegative
/// rational weight vector over m labels summing to exactly 1. Colorings are
/// the special case of unit vectors.
struct WeightedCover {
  int m = 0;
  std::map<int, RationalVector> weights; // vertex id (0-based) -> m weights

  const RationalVector& at(int vertex) const; // InputError if absent
  IndexMask support(int vertex) const;        // labels with positive weight
  void validate() const;                      // nonneg, sum 1, sizes
};

/// Build a cover from a coloring: vertex -> label (0-based).
WeightedCover cover_from_colors(int m, const std::map<int, int>& colors);

} // namespace balcov
