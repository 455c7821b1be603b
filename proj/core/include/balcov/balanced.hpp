#pragma once

#include "balcov/complex.hpp"
#include "balcov/config.hpp"

namespace balcov {

/// The family of inclusion-minimal subsets S with r in conv(S). The full
/// balanced family is exactly the upward closure of this antichain; by
/// Caratheodory every member has at most dim+1 elements.
struct BalancedProfile {
  int m = 0;
  std::vector<IndexMask> minimal_balanced; // antichain, sorted by mask_lex_less
};

/// Enumerate the minimal balanced family by exact membership tests over
/// subsets of size <= dim+1, pruning supersets of known members.
/// Throws CapacityError when m exceeds `cap` (default 20).
BalancedProfile enumerate_minimal_balanced(const PointConfig& cfg, int cap = 20);

/// True iff `subset` contains some minimal balanced member. The empty
/// subset is never balanced.
bool is_balanced(const BalancedProfile& profile, IndexMask subset);

/// The complex of all non-balanced subsets: facets are the maximal subsets
/// containing no minimal balanced member (complements of the minimal
/// transversals of the family).
SimplicialComplex nonbalanced_complex(const BalancedProfile& profile);
SimplicialComplex nonbalanced_complex(const PointConfig& cfg);

/// Identity-indexed comparison of minimal families. Profiles over ground
/// sets of different size raise MismatchError.
bool bs_equivalent(const BalancedProfile& a, const BalancedProfile& b);

/// Comparison up to a relabeling of the ground set (exact isomorphism
/// search with refinement-based pruning).
bool bs_equivalent_up_to_permutation(const BalancedProfile& a,
                                     const BalancedProfile& b);

} // namespace balcov
