#pragma once

#include "balcov/degree.hpp"
#include "balcov/subdivision.hpp"

#include <map>

namespace balcov {

/// Carrier condition for colorings: every vertex label belongs to the
/// vertex carrier. Colors are 0-based labels below n.
bool check_sperner(const CarrierLabeledTriangulation& lt,
                   const std::map<int, int>& colors);

struct RainbowReport {
  std::vector<int> facets; // 0-based ids of fully multicolored facets
  int signed_count = 0;    // sum of facet sign * color-permutation sign
};

/// All facets showing every label once, with their signed count.
RainbowReport find_rainbow(const CarrierLabeledTriangulation& lt,
                           const std::map<int, int>& colors);

/// Degree-obstruction existence check on a triangulated ball: compute the
/// boundary degree of the induced map; whenever it is nonzero (or the
/// boundary itself meets a balanced support), a facet with balanced
/// support must exist inside — find it or raise TheoremViolationError.
struct ObstructionResult {
  DegreeResult boundary;
  // First facet with balanced support, when one exists; guaranteed to be
  // set whenever the obstruction applies.
  std::optional<BalancedWitness> witness;
};
ObstructionResult theorem_b_check(const OrientedTriangulation& ball,
                                  const WeightedCover& cover,
                                  const PointConfig& cfg, std::uint64_t seed);

/// Carrier condition for weighted covers over n labels.
bool check_kkm_cover(const CarrierLabeledTriangulation& lt,
                     const WeightedCover& cover);

/// Full check for covers of the reference simplex subordinate to carriers:
/// boundary degree against the corner configuration and a facet whose
/// support reaches every label.
ObstructionResult kkm_check(const CarrierLabeledTriangulation& lt,
                            const WeightedCover& cover, std::uint64_t seed);

/// An instance over the 2^n - 1 nonempty label subsets: weight index k
/// (0-based) stands for the subset with bitmask k+1.
struct KkmsInstance {
  CarrierLabeledTriangulation labeled;
  WeightedCover cover; // m = 2^n - 1

  int n() const { return labeled.n; }
  void validate() const; // includes the carrier-subordination condition
};

/// Mass centers of all nonempty reference faces, r = global barycenter.
PointConfig make_kkms_config(int n);

struct KkmsWitness {
  int facet = 0;                    // 0-based id in the ball triangulation
  std::vector<IndexMask> subfamily; // balanced subfamily, as label subsets
};

/// A facet whose touched subsets contain a balanced subfamily (smallest
/// size, then lexicographic). Guaranteed for compliant instances;
/// TheoremViolationError otherwise.
KkmsWitness kkms_witness(const KkmsInstance& inst);

/// Degree of the induced map on the subdivision boundary against the
/// subset-barycenter configuration.
DegreeResult kkms_boundary_degree(const KkmsInstance& inst, std::uint64_t seed);

} // namespace balcov
