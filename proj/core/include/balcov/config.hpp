#pragma once

#include "balcov/rational.hpp"

#include <vector>

namespace balcov {

/// A labeled point configuration (v_1..v_m) together with the base point r,
/// all with exact rational coordinates. Indices are 0-based internally and
/// 1-based in every external (JSON/CLI) representation.
struct PointConfig {
  int dim = 0;
  std::vector<RationalVector> points;
  RationalVector r;

  int m() const { return static_cast<int>(points.size()); }
  /// Structural validation (sizes only); throws InputError.
  void validate() const;
};

/// Radial rescaling about r: v_i' = lambda_i (v_i - r) + r with lambda_i > 0.
/// Preserves the balanced family exactly.
PointConfig scale_transform(const PointConfig& cfg,
                            const std::vector<Rational>& lambda);

} // namespace balcov
