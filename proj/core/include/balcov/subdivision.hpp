#pragma once

#include "balcov/complex.hpp"
#include "balcov/config.hpp"
#include "balcov/triangulation.hpp"

#include <vector>

namespace balcov {

/// A triangulated (n-1)-ball subdividing the reference simplex on n
/// labels, with each vertex carrying the label set of the smallest
/// reference face containing it. Facets are oriented coherently (positive
/// with respect to the reference embedding).
struct CarrierLabeledTriangulation {
  int n = 0;                       // reference labels 1..n (bits 0..n-1)
  OrientedTriangulation tri;       // dim n-1
  std::vector<IndexMask> carriers; // per vertex, nonempty subset of [n]

  void validate() const;
};

/// Corner embedding of the reference simplex in R^{n-1}: label 1 at the
/// origin, label j at e_{j-1}.
std::vector<RationalVector> simplex_corner_coords(int n);

/// The n corner points with r = barycenter. Its minimal balanced family is
/// exactly {{1..n}}.
PointConfig make_kkm_config(int n);

/// Subdivide the reference 1-simplex into k edges (vertex i at i/k).
CarrierLabeledTriangulation subdivide_segment(int k);

/// Edgewise subdivision of the reference 2-simplex into k^2 triangles.
CarrierLabeledTriangulation subdivide_triangle(int k);

/// Barycentric subdivision of the reference 2-simplex (7 vertices, 6
/// triangles).
CarrierLabeledTriangulation barycentric_triangle();

} // namespace balcov
