#pragma once

#include "balcov/complex.hpp"
#include "balcov/rational.hpp"

#include <optional>
#include <vector>

namespace balcov {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Chain data of a complex. faces[k] lists the k-dimensional faces in
/// lexicographic vertex-tuple order; boundaries[k] maps k-chains to
/// (k-1)-chains over these bases. boundaries[0] is the augmentation row
/// (one 1 per vertex) onto the empty face, so homology computed from these
/// matrices is reduced homology.
struct ChainComplex {
  std::vector<std::vector<IndexMask>> faces;
  std::vector<IntMatrix> boundaries;
};

/// Expand facets into the full face lattice and assemble all boundary
/// matrices. Throws CapacityError if the total face count exceeds the cap.
ChainComplex boundary_matrices(const SimplicialComplex& c,
                               std::size_t max_total_faces = std::size_t{1} << 20);

/// Diagonal of the Smith normal form (nonnegative, divisibility chain
/// d1 | d2 | ...) together with the rank.
struct SmithResult {
  std::vector<Integer> diagonal;
  int rank = 0;
};
SmithResult smith_normal_form(IntMatrix m);

struct HomologyGroup {
  int degree = 0;              // -1 .. dim
  int betti = 0;               // rank of the free part
  std::vector<Integer> torsion; // invariant factors > 1, in divisibility order
};

struct HomologyResult {
  std::vector<HomologyGroup> groups; // ascending degree, starting at -1
  const HomologyGroup* at_degree(int degree) const;
  bool trivial() const; // all groups zero
};

/// Reduced integral homology in every degree (including degree -1, which is
/// Z exactly for the complex whose only face is the empty face).
HomologyResult reduced_homology(const SimplicialComplex& c);

/// True iff the reduced homology is that of a (k-1)-sphere: one Z in degree
/// k-1 and nothing anywhere else. k = 0 accepts exactly the empty-face
/// complex (reduced homology Z in degree -1).
bool verify_sphere_homology(const SimplicialComplex& c, int k);

/// Smallest vertex a such that F ∪ {a} is a face for every facet F, if any.
std::optional<int> cone_apex_detect(const SimplicialComplex& c);

} // namespace balcov
