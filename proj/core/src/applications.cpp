#include "balcov/applications.hpp"

#include "balcov/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace balcov {

namespace {

void check_colors(const CarrierLabeledTriangulation& lt,
                  const std::map<int, int>& colors) {
  lt.validate();
  for (const auto& [vertex, color] : colors) {
    if (vertex < 0 || vertex >= lt.tri.vertex_count)
      throw InputError("color assigned to unknown vertex " + std::to_string(vertex));
    if (color < 0 || color >= lt.n)
      throw InputError("color out of range at vertex " + std::to_string(vertex));
  }
  for (int v = 0; v < lt.tri.vertex_count; ++v)
    if (!colors.count(v))
      throw InputError("vertex " + std::to_string(v) + " has no color");
}

int permutation_parity(std::vector<int> values) {
  int sign = 1;
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] > values[j]) {
        std::swap(values[i], values[j]);
        sign = -sign;
      }
  return sign;
}

std::optional<BalancedWitness> find_witness(const OrientedTriangulation& t,
                                            const WeightedCover& cover,
                                            const BalancedProfile& profile) {
  return check_no_balanced_simplices(t, cover, profile);
}

} // namespace

bool check_sperner(const CarrierLabeledTriangulation& lt,
                   const std::map<int, int>& colors) {
  check_colors(lt, colors);
  for (int v = 0; v < lt.tri.vertex_count; ++v) {
    const int color = colors.at(v);
    if (((lt.carriers[v] >> color) & 1u) == 0u) return false;
  }
  return true;
}

RainbowReport find_rainbow(const CarrierLabeledTriangulation& lt,
                           const std::map<int, int>& colors) {
  check_colors(lt, colors);
  RainbowReport report;
  for (int f = 0; f < lt.tri.facet_count(); ++f) {
    const auto& facet = lt.tri.facets[f];
    IndexMask seen = 0;
    std::vector<int> sequence;
    sequence.reserve(facet.size());
    for (int v : facet) {
      sequence.push_back(colors.at(v));
      seen |= IndexMask{1} << colors.at(v);
    }
    if (mask_size(seen) != static_cast<int>(facet.size())) continue;
    if (seen != (IndexMask{1} << lt.n) - 1u) continue;
    report.facets.push_back(f);
    report.signed_count += lt.tri.sign(f) * permutation_parity(sequence);
  }
  return report;
}

ObstructionResult theorem_b_check(const OrientedTriangulation& ball,
                                  const WeightedCover& cover,
                                  const PointConfig& cfg, std::uint64_t seed) {
  ball.validate();
  cover.validate();
  cfg.validate();
  if (cover.m != cfg.m()) throw MismatchError("cover labels do not match configuration size");
  if (ball.dim != cfg.dim)
    throw InputError("ball dimension must equal the configuration dimension");

  ObstructionResult result;
  const BalancedProfile profile = enumerate_minimal_balanced(cfg);
  result.witness = find_witness(ball, cover, profile);
  result.boundary = degree(boundary_of(ball), cover, cfg, seed);

  const bool obstructed =
      result.boundary.status == DegreeStatus::BalancedSimplexFound ||
      result.boundary.degree != 0;
  if (obstructed && !result.witness)
    throw TheoremViolationError(
        "nonzero boundary degree but no facet with balanced support");
  return result;
}

bool check_kkm_cover(const CarrierLabeledTriangulation& lt,
                     const WeightedCover& cover) {
  lt.validate();
  cover.validate();
  if (cover.m != lt.n) throw MismatchError("cover labels do not match reference labels");
  for (int v = 0; v < lt.tri.vertex_count; ++v) {
    if (!cover.weights.count(v))
      throw InputError("vertex " + std::to_string(v) + " has no weights");
    if ((cover.support(v) & ~lt.carriers[v]) != 0u) return false;
  }
  return true;
}

ObstructionResult kkm_check(const CarrierLabeledTriangulation& lt,
                            const WeightedCover& cover, std::uint64_t seed) {
  if (!check_kkm_cover(lt, cover))
    throw InputError("cover is not subordinate to the vertex carriers");
  return theorem_b_check(lt.tri, cover, make_kkm_config(lt.n), seed);
}

void KkmsInstance::validate() const {
  labeled.validate();
  cover.validate();
  const int subsets = (1 << labeled.n) - 1;
  if (cover.m != subsets)
    throw MismatchError("cover must have one label per nonempty subset");
  for (int v = 0; v < labeled.tri.vertex_count; ++v) {
    if (!cover.weights.count(v))
      throw InputError("vertex " + std::to_string(v) + " has no weights");
    const IndexMask carrier = labeled.carriers[v];
    IndexMask support = cover.support(v);
    while (support != 0) {
      const int k = std::countr_zero(support);
      support &= support - 1u;
      const IndexMask subset = static_cast<IndexMask>(k) + 1u;
      if ((subset & ~carrier) != 0u)
        throw InputError("vertex " + std::to_string(v) +
                         " puts weight on a subset outside its carrier");
    }
  }
}

PointConfig make_kkms_config(int n) {
  if (n < 2 || n > 4) throw InputError("subset configuration needs 2 <= n <= 4");
  const auto corners = simplex_corner_coords(n);
  PointConfig cfg;
  cfg.dim = n - 1;
  const int subsets = (1 << n) - 1;
  for (IndexMask mask = 1; mask <= static_cast<IndexMask>(subsets); ++mask) {
    RationalVector center(cfg.dim, Rational(0));
    const int size = mask_size(mask);
    for (int j = 0; j < n; ++j) {
      if (((mask >> j) & 1u) == 0u) continue;
      for (int c = 0; c < cfg.dim; ++c) center[c] += corners[j][c];
    }
    for (int c = 0; c < cfg.dim; ++c) center[c] /= size;
    cfg.points.push_back(std::move(center));
  }
  cfg.r.assign(cfg.dim, Rational(1, n));
  cfg.validate();
  return cfg;
}

KkmsWitness kkms_witness(const KkmsInstance& inst) {
  inst.validate();
  const PointConfig cfg = make_kkms_config(inst.n());
  const BalancedProfile profile = enumerate_minimal_balanced(cfg);
  for (int f = 0; f < inst.labeled.tri.facet_count(); ++f) {
    const IndexMask support = facet_support(inst.labeled.tri, inst.cover, f);
    std::optional<IndexMask> best;
    for (IndexMask member : profile.minimal_balanced) {
      if ((member & ~support) != 0u) continue;
      if (!best || mask_size(member) < mask_size(*best) ||
          (mask_size(member) == mask_size(*best) && mask_lex_less(member, *best)))
        best = member;
    }
    if (!best) continue;
    KkmsWitness witness;
    witness.facet = f;
    for (int k : mask_to_indices(*best))
      witness.subfamily.push_back(static_cast<IndexMask>(k) + 1u);
    return witness;
  }
  throw TheoremViolationError("no facet carries a balanced subset family");
}

DegreeResult kkms_boundary_degree(const KkmsInstance& inst, std::uint64_t seed) {
  inst.validate();
  return degree(boundary_of(inst.labeled.tri), inst.cover,
                make_kkms_config(inst.n()), seed);
}

} // namespace balcov
