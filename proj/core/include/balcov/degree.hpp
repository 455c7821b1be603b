#pragma once

#include "balcov/balanced.hpp"
#include "balcov/config.hpp"
#include "balcov/cover.hpp"
#include "balcov/triangulation.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace balcov {

/// One transversal ray crossing: which facet, where along the ray (t > 0),
/// the barycentric coordinates of the hit in the image simplex, and the
/// local orientation sign.
struct RayCrossing {
  int facet = 0;
  Rational t;
  RationalVector barycentric;
  int sign = 0;
};

struct RayCertificate {
  std::vector<Integer> direction; // integer coordinates, the cast ray is r + t*direction
  std::vector<RayCrossing> crossings;
};

struct BalancedWitness {
  int facet = 0;      // 0-based facet id
  IndexMask support;  // union of vertex supports on that facet
};

enum class DegreeStatus { Ok, BalancedSimplexFound };

struct DegreeResult {
  DegreeStatus status = DegreeStatus::Ok;
  int degree = 0;                         // valid when Ok
  RayCertificate certificate;             // valid when Ok
  std::optional<BalancedWitness> witness; // set when BalancedSimplexFound
};

/// Union of the weight supports over the facet's vertices.
IndexMask facet_support(const OrientedTriangulation& t, const WeightedCover& cover,
                        int facet);

/// First facet (ascending id) whose support is balanced, if any.
std::optional<BalancedWitness>
check_no_balanced_simplices(const OrientedTriangulation& t,
                            const WeightedCover& cover,
                            const BalancedProfile& profile);

// Number of fresh random directions drawn before giving up, and the
// coordinate range {-kDirectionRange..kDirectionRange} they are drawn from.
inline constexpr int kMaxDirectionAttempts = 64;
inline constexpr long kDirectionRange = 1000000;

/// Mapping degree of the induced map from a closed oriented triangulation
/// to the sphere around r. The triangulation must be coherently oriented
/// with dim = config.dim - 1. If some facet's support is balanced the
/// result is BalancedSimplexFound; otherwise the degree is computed by
/// exact generic-ray counting: a crossing of facet (u_0..u_{d-1}) at
/// barycentric mu > 0, t > 0 contributes
///   facet sign * sign det[w, q_1-q_0, ..., q_{d-1}-q_0]
/// (w first; the convention that makes a counterclockwise planar cycle
/// have degree +1). Degenerate draws are retried up to
/// kMaxDirectionAttempts times, then GenericityError.
DegreeResult degree(const OrientedTriangulation& t, const WeightedCover& cover,
                    const PointConfig& cfg, std::uint64_t seed);

/// As `degree`, with an injectable direction source (used to exercise the
/// resampling logic deterministically).
using DirectionSource = std::function<std::vector<Integer>(int attempt)>;
DegreeResult degree_with_directions(const OrientedTriangulation& t,
                                    const WeightedCover& cover,
                                    const PointConfig& cfg,
                                    const DirectionSource& directions);

/// Independent plane-geometry route for dim = 2: winding number of the
/// image loop around r by horizontal-ray crossing counts with a symbolic
/// (half-open) perturbation. Deterministic, no randomness. OracleError if
/// the loop passes through r.
int winding_oracle(const OrientedTriangulation& t, const WeightedCover& cover,
                   const PointConfig& cfg);

/// Check |degree| (and status) agree over two configurations with
/// identical minimal balanced families. InputError if they are not
/// BS-equivalent.
bool degree_invariance_check(const PointConfig& a, const PointConfig& b,
                             const OrientedTriangulation& t,
                             const WeightedCover& cover, std::uint64_t seed);

/// Counterclockwise angular order of the point indices around r
/// (dim = 2, full rank, r in the relative interior, no point equal to r).
std::vector<int> angular_order(const PointConfig& cfg);

struct CircleInstance {
  OrientedTriangulation tri;
  WeightedCover cover;
};

/// A colored cycle whose induced map has degree exactly k: the angular
/// sequence of all m colors repeated |k| times (reversed for k < 0), or a
/// single-color two-vertex cycle for k = 0.
CircleInstance construct_degree_k_circle(const PointConfig& cfg, int k);

} // namespace balcov
