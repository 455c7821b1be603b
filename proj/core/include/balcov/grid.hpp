#pragma once

#include "balcov/balanced.hpp"
#include "balcov/config.hpp"
#include "balcov/cover.hpp"
#include "balcov/degree.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace balcov {

// Size envelope for grid sampling.
inline constexpr long kMaxGridFacets = 500000;  // simplices across all cells
inline constexpr long kMaxGridVertices = 250000;
inline constexpr int kMaxGridRings = 64; // neighborhood growth rounds

/// A regular lattice over an axis-aligned rational box.
struct GridSpec {
  int dim = 0;
  std::vector<int> resolution; // cells per axis, each >= 1
  RationalVector lower, upper; // box corners, lower < upper per axis

  long cells() const;
  long vertex_count() const;
  void validate() const;
};

/// Row-major lattice numbering (last axis fastest).
int grid_vertex_id(const GridSpec& spec, const std::vector<int>& idx);
std::vector<int> grid_vertex_index(const GridSpec& spec, int vertex);
RationalVector grid_vertex_coords(const GridSpec& spec, int vertex);

/// Standard simplicial subdivision of the box: every cell splits along
/// coordinate-axis permutations into dim! simplices (vertex chains), with
/// signs chosen so that each simplex is positively oriented. Facet ids are
/// cell-major: cell index * dim! + permutation rank.
OrientedTriangulation kuhn_triangulation(const GridSpec& spec);

/// A weighted cover sampled at the lattice vertices.
struct GridCover {
  GridSpec spec;
  WeightedCover cover; // keyed by lattice vertex id

  void validate() const;
};

struct SingularReport {
  std::vector<int> by_support; // facets whose touched-label union is balanced
  std::vector<int> by_image;   // facets whose vertex-image hull contains r
};

/// Both singularity tests for every facet. The image test implies the
/// support test, so by_image is always a subset of by_support; the
/// difference lists facets that are only potentially singular.
SingularReport singular_facets(const GridCover& g, const PointConfig& cfg);

struct ComponentIndex {
  std::vector<int> singular;     // the component's singular facets, ascending
  std::vector<int> neighborhood; // grown facet neighborhood around them
  DegreeResult boundary;         // its boundary degree = the local index
};

/// Vertex-connected components of the support-singular facets, each wrapped
/// in a neighborhood of whole facets grown ring by ring until the
/// neighborhood boundary is a coherent closed manifold; neighborhoods that
/// touch are merged into one component. BoundaryContactError when a
/// neighborhood reaches the box surface (the local index is then not
/// separated from the outside).
std::vector<ComponentIndex> components(const GridCover& g, const PointConfig& cfg,
                                       std::uint64_t seed);

struct AdditivityReport {
  DegreeResult outer; // degree over the box surface
  std::vector<ComponentIndex> parts;
  long long index_sum = 0;
};

/// Exact local-global consistency: the box-surface degree must equal the
/// sum of the component indices (both sides computed independently);
/// TheoremViolationError on any mismatch.
AdditivityReport additivity_check(const GridCover& g, const PointConfig& cfg,
                                  std::uint64_t seed);

/// Every lattice vertex gets the same single-label weight.
GridCover grid_constant(const GridSpec& spec, int m, int color);

/// Labels by the angular sector of x - center among the configuration
/// point directions: one positively wound singularity at the center.
GridCover grid_vortex(const GridSpec& spec, const PointConfig& cfg,
                      const RationalVector& center);

/// Two-center field: sectors of the complex product (x-c1)*(x-c2), the
/// second factor conjugated on request. Conjugated: local indices +1 and
/// -1 (outer degree 0); plain: +1 and +1 (outer degree 2).
GridCover grid_bivortex(const GridSpec& spec, const PointConfig& cfg,
                        const RationalVector& c1, const RationalVector& c2,
                        bool conjugate_second);

/// 2D picture of the lattice with singular facets and neighborhoods shaded
/// and every component annotated with its index.
std::string render_components_svg(const GridCover& g, const PointConfig& cfg,
                                  const std::vector<ComponentIndex>& comps);

} // namespace balcov
