#include "support/oracles.hpp"

#include "balcov/errors.hpp"
#include "balcov/geometry.hpp"

#include <set>

namespace balcov::testing {

ExhaustiveBalanced exhaustive_balanced(const PointConfig& cfg) {
  cfg.validate();
  const int m = cfg.m();
  if (m > 16) throw CapacityError("exhaustive oracle capped at 16 points");

  ExhaustiveBalanced ex;
  ex.m = m;
  for (IndexMask s = 1; s < (IndexMask{1} << m); ++s) {
    std::vector<RationalVector> points;
    for (int i : mask_to_indices(s)) points.push_back(cfg.points[i]);
    if (conv_membership(points, cfg.r).inside()) ex.all_balanced.push_back(s);
  }
  for (IndexMask s : ex.all_balanced) {
    bool minimal = true;
    for (IndexMask t : ex.all_balanced) {
      if (t != s && (t & ~s) == 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) ex.minimal_balanced.push_back(s);
  }
  return ex;
}

std::vector<IndexMask> exhaustive_nonbalanced_facets(const ExhaustiveBalanced& ex) {
  const IndexMask full = (IndexMask{1} << ex.m) - 1u;
  std::set<IndexMask> balanced(ex.all_balanced.begin(), ex.all_balanced.end());

  std::vector<IndexMask> nonbalanced;
  for (IndexMask s = 0; s <= full; ++s)
    if (!balanced.count(s)) nonbalanced.push_back(s);

  std::vector<IndexMask> maximal;
  for (IndexMask s : nonbalanced) {
    bool is_maximal = true;
    for (int i = 0; i < ex.m && is_maximal; ++i) {
      const IndexMask bigger = s | (IndexMask{1} << i);
      if (bigger != s && !balanced.count(bigger)) is_maximal = false;
    }
    if (is_maximal) maximal.push_back(s);
  }
  return maximal;
}

long long reduced_euler_characteristic(const SimplicialComplex& c) {
  c.validate();
  std::set<IndexMask> faces;
  for (IndexMask facet : c.facets) {
    // Every subset of a facet is a face.
    IndexMask sub = facet;
    while (true) {
      faces.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & facet;
    }
  }
  long long chi = 0;
  for (IndexMask face : faces) {
    // A k-face contributes (-1)^k, including the empty face at k = -1.
    if (mask_size(face) % 2 == 1)
      chi += 1;
    else
      chi -= 1;
  }
  return chi;
}

} // namespace balcov::testing
