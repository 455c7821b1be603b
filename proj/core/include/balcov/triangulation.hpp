#pragma once

#include <vector>

namespace balcov {

/// A pure simplicial triangulation with ordered facet tuples and optional
/// per-facet orientation signs (empty signs = all +1). The orientation of a
/// facet is the tuple order twisted by its sign.
struct OrientedTriangulation {
  int dim = 0;          // facet dimension
  int vertex_count = 0; // vertex labels are 0..vertex_count-1
  std::vector<std::vector<int>> facets;
  std::vector<int> signs;

  int facet_count() const { return static_cast<int>(facets.size()); }
  int sign(int f) const;
  void validate() const; // tuple sizes, label range, in-facet distinctness
};

/// Closed-pseudomanifold coherence: every (dim-1)-face lies in exactly two
/// facets which induce opposite orientations on it. For dim = 0 the
/// convention is: equally many +1 and -1 points.
bool orientation_coherence_check(const OrientedTriangulation& t);

/// Boundary of a coherently oriented triangulation-with-boundary: the
/// (dim-1)-faces incident to exactly one facet, carrying the induced
/// orientation. Interior (dim-1)-faces must pair with opposite induced
/// orientations, otherwise InputError.
OrientedTriangulation boundary_of(const OrientedTriangulation& t);

/// Same triangulation with every orientation sign flipped.
OrientedTriangulation reversed(const OrientedTriangulation& t);

} // namespace balcov
