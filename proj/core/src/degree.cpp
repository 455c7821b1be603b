#include "balcov/degree.hpp"

#include "balcov/errors.hpp"
#include "balcov/geometry.hpp"
#include "balcov/linalg.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <string>

namespace balcov {

IndexMask facet_support(const OrientedTriangulation& t, const WeightedCover& cover,
                        int facet) {
  if (facet < 0 || facet >= t.facet_count())
    throw InputError("facet_support: facet id out of range");
  IndexMask s = 0;
  for (int v : t.facets[facet]) s |= cover.support(v);
  return s;
}

std::optional<BalancedWitness>
check_no_balanced_simplices(const OrientedTriangulation& t,
                            const WeightedCover& cover,
                            const BalancedProfile& profile) {
  for (int f = 0; f < t.facet_count(); ++f) {
    const IndexMask s = facet_support(t, cover, f);
    if (is_balanced(profile, s)) return BalancedWitness{f, s};
  }
  return std::nullopt;
}

namespace {

void check_degree_inputs(const OrientedTriangulation& t, const WeightedCover& cover,
                         const PointConfig& cfg) {
  cfg.validate();
  cover.validate();
  t.validate();
  if (cover.m != cfg.m())
    throw MismatchError("degree: cover labels (" + std::to_string(cover.m) +
                        ") do not match configuration points (" +
                        std::to_string(cfg.m()) + ")");
  if (t.dim != cfg.dim - 1)
    throw InputError("degree: triangulation dimension " + std::to_string(t.dim) +
                     " does not match ambient dimension " +
                     std::to_string(cfg.dim) + " - 1");
  if (!orientation_coherence_check(t))
    throw InputError("degree: triangulation is not a coherently oriented "
                     "closed pseudomanifold");
}

// Image point of a triangulation vertex under the weighted cover.
RationalVector image_point(const WeightedCover& cover, const PointConfig& cfg,
                           int vertex) {
  const RationalVector& w = cover.at(vertex);
  RationalVector q(cfg.dim, Rational(0));
  for (int i = 0; i < cfg.m(); ++i) {
    if (sgn(w[i]) == 0) continue;
    for (int k = 0; k < cfg.dim; ++k) q[k] += w[i] * cfg.points[i][k];
  }
  return q;
}

enum class FacetHit { Miss, Crossing, Degenerate };

struct CrossingSolve {
  FacetHit hit = FacetHit::Miss;
  RayCrossing crossing;
};

// Does the ray r + t*w (t real) cross the image simplex (q_0..q_{d-1})?
// Solve sum mu_j q_j - t w = r, sum mu_j = 1. The system determinant sign
// equals sign det[w, q_1-q_0, ..., q_{d-1}-q_0], which is the local degree
// contribution for a positively oriented facet.
CrossingSolve solve_facet_crossing(const std::vector<RationalVector>& q,
                                   const RationalVector& r,
                                   const std::vector<Integer>& w) {
  const std::size_t d = r.size();
  RationalMatrix a(d + 1, RationalVector(d + 1, Rational(0)));
  RationalVector b(d + 1, Rational(0));
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < d; ++j) a[k][j] = q[j][k];
    a[k][d] = -Rational(w[k]);
    b[k] = r[k];
  }
  for (std::size_t j = 0; j < d; ++j) a[d][j] = 1;
  b[d] = 1;

  const SquareSolveResult sol = solve_square(std::move(a), std::move(b));
  CrossingSolve out;
  if (sol.status == SolveStatus::Inconsistent) {
    out.hit = FacetHit::Miss; // ray parallel to and off the facet's hull
    return out;
  }
  if (sol.status == SolveStatus::Underdetermined) {
    out.hit = FacetHit::Degenerate; // ray inside the facet's affine hull
    return out;
  }
  const Rational& t = sol.solution[d];
  bool zero_coord = sgn(t) == 0;
  bool negative = sgn(t) < 0;
  for (std::size_t j = 0; j < d; ++j) {
    const int s = sgn(sol.solution[j]);
    if (s == 0) zero_coord = true;
    if (s < 0) negative = true;
  }
  if (zero_coord) {
    // Boundary contact (mu_j = 0) or hit at the base point (t = 0):
    // not a generic draw, even if it also fails mu >= 0.
    out.hit = FacetHit::Degenerate;
    return out;
  }
  if (negative) {
    out.hit = FacetHit::Miss;
    return out;
  }
  out.hit = FacetHit::Crossing;
  out.crossing.t = t;
  out.crossing.barycentric.assign(sol.solution.begin(), sol.solution.begin() + d);
  out.crossing.sign = sol.det_sign;
  return out;
}

} // namespace

DegreeResult degree_with_directions(const OrientedTriangulation& t,
                                    const WeightedCover& cover,
                                    const PointConfig& cfg,
                                    const DirectionSource& directions) {
  check_degree_inputs(t, cover, cfg);
  const BalancedProfile profile = enumerate_minimal_balanced(cfg);

  DegreeResult res;
  if (auto witness = check_no_balanced_simplices(t, cover, profile)) {
    res.status = DegreeStatus::BalancedSimplexFound;
    res.witness = witness;
    return res;
  }

  // Image points, computed once per vertex actually used.
  std::vector<char> used(t.vertex_count, 0);
  for (const auto& tup : t.facets)
    for (int v : tup) used[v] = 1;
  std::vector<RationalVector> q(t.vertex_count);
  for (int v = 0; v < t.vertex_count; ++v)
    if (used[v]) q[v] = image_point(cover, cfg, v);

  const int d = cfg.dim;
  for (int attempt = 0; attempt < kMaxDirectionAttempts; ++attempt) {
    const std::vector<Integer> w = directions(attempt);
    if (w.size() != static_cast<std::size_t>(d))
      throw InputError("degree: direction with wrong dimension");
    bool zero = true;
    for (const auto& x : w)
      if (sgn(x) != 0) zero = false;
    if (zero) continue;

    std::vector<RayCrossing> crossings;
    bool degenerate = false;
    int total = 0;
    for (int f = 0; f < t.facet_count() && !degenerate; ++f) {
      std::vector<RationalVector> facet_q;
      facet_q.reserve(d);
      for (int v : t.facets[f]) facet_q.push_back(q[v]);
      CrossingSolve sol = solve_facet_crossing(facet_q, cfg.r, w);
      switch (sol.hit) {
        case FacetHit::Degenerate:
          degenerate = true;
          break;
        case FacetHit::Crossing:
          sol.crossing.facet = f;
          sol.crossing.sign *= t.sign(f);
          total += sol.crossing.sign;
          crossings.push_back(std::move(sol.crossing));
          break;
        case FacetHit::Miss:
          break;
      }
    }
    if (degenerate) continue;
    res.status = DegreeStatus::Ok;
    res.degree = total;
    res.certificate.direction = w;
    res.certificate.crossings = std::move(crossings);
    return res;
  }
  throw GenericityError("degree: no generic ray direction found after " +
                        std::to_string(kMaxDirectionAttempts) + " attempts");
}

DegreeResult degree(const OrientedTriangulation& t, const WeightedCover& cover,
                    const PointConfig& cfg, std::uint64_t seed) {
  // Coordinates are drawn via modulo reduction of the raw engine output so
  // the stream is identical across platforms. The tiny modulo bias is
  // irrelevant: any nonzero vector avoiding a measure-zero set works.
  auto rng = std::make_shared<std::mt19937_64>(seed);
  const int d = cfg.dim;
  DirectionSource source = [rng, d](int) {
    std::vector<Integer> w(d);
    for (int k = 0; k < d; ++k) {
      const auto raw = (*rng)();
      w[k] = static_cast<long>(raw % (2 * kDirectionRange + 1)) - kDirectionRange;
    }
    return w;
  };
  return degree_with_directions(t, cover, cfg, source);
}

int winding_oracle(const OrientedTriangulation& t, const WeightedCover& cover,
                   const PointConfig& cfg) {
  check_degree_inputs(t, cover, cfg);
  if (cfg.dim != 2)
    throw InputError("winding_oracle: only available in ambient dimension 2");

  std::vector<RationalVector> q(t.vertex_count);
  std::vector<char> have(t.vertex_count, 0);
  const auto image_of = [&](int v) -> const RationalVector& {
    if (!have[v]) {
      q[v] = image_point(cover, cfg, v);
      have[v] = 1;
    }
    return q[v];
  };

  const Rational& rx = cfg.r[0];
  const Rational& ry = cfg.r[1];
  int winding = 0;
  for (int f = 0; f < t.facet_count(); ++f) {
    RationalVector a = image_of(t.facets[f][0]);
    RationalVector b = image_of(t.facets[f][1]);
    if (t.sign(f) < 0) std::swap(a, b);

    // Reject loops through r exactly (r on the closed segment [a, b]).
    const Rational cross =
        (b[0] - a[0]) * (ry - a[1]) - (rx - a[0]) * (b[1] - a[1]);
    if (sgn(cross) == 0) {
      const Rational dot_ar_br =
          (a[0] - rx) * (b[0] - rx) + (a[1] - ry) * (b[1] - ry);
      if (sgn(dot_ar_br) <= 0)
        throw OracleError("winding_oracle: image loop passes through r");
    }

    // Half-open horizontal-ray rule (the symbolic perturbation): upward
    // edges count when r is strictly left of a->b, downward edges when
    // strictly right.
    if (a[1] <= ry && b[1] > ry && sgn(cross) > 0) ++winding;
    else if (a[1] > ry && b[1] <= ry && sgn(cross) < 0) --winding;
  }
  return winding;
}

bool degree_invariance_check(const PointConfig& a, const PointConfig& b,
                             const OrientedTriangulation& t,
                             const WeightedCover& cover, std::uint64_t seed) {
  const BalancedProfile pa = enumerate_minimal_balanced(a);
  const BalancedProfile pb = enumerate_minimal_balanced(b);
  if (!bs_equivalent(pa, pb))
    throw InputError("degree_invariance_check: configurations are not "
                     "BS-equivalent");
  const DegreeResult ra = degree(t, cover, a, seed);
  const DegreeResult rb = degree(t, cover, b, seed);
  if (ra.status != rb.status) return false;
  if (ra.status == DegreeStatus::BalancedSimplexFound) return true;
  return std::abs(ra.degree) == std::abs(rb.degree);
}

std::vector<int> angular_order(const PointConfig& cfg) {
  cfg.validate();
  if (cfg.dim != 2)
    throw InputError("angular_order: only available in ambient dimension 2");
  if (affine_rank(cfg.points) < 2)
    throw InputError("angular_order: configuration is not full-rank");
  if (!relint_membership(cfg.points, cfg.r))
    throw InputError("angular_order: r is not interior to the configuration");
  for (int i = 0; i < cfg.m(); ++i) {
    if (cfg.points[i] == cfg.r)
      throw InputError("angular_order: point " + std::to_string(i + 1) +
                       " coincides with r");
  }

  // Counterclockwise from the positive x-axis: upper half (y>0, or y=0 and
  // x>0) before lower half; within a half, by exact cross-product sign.
  const auto half_of = [&](int i) {
    const Rational dy = cfg.points[i][1] - cfg.r[1];
    const Rational dx = cfg.points[i][0] - cfg.r[0];
    return (sgn(dy) > 0 || (sgn(dy) == 0 && sgn(dx) > 0)) ? 0 : 1;
  };
  std::vector<int> order(cfg.m());
  for (int i = 0; i < cfg.m(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    const int hi = half_of(i), hj = half_of(j);
    if (hi != hj) return hi < hj;
    const Rational uix = cfg.points[i][0] - cfg.r[0];
    const Rational uiy = cfg.points[i][1] - cfg.r[1];
    const Rational ujx = cfg.points[j][0] - cfg.r[0];
    const Rational ujy = cfg.points[j][1] - cfg.r[1];
    const int cross = sgn(uix * ujy - uiy * ujx);
    if (cross != 0) return cross > 0;
    return i < j; // same direction: stable by index
  });
  return order;
}

CircleInstance construct_degree_k_circle(const PointConfig& cfg, int k) {
  const std::vector<int> order = angular_order(cfg); // also validates cfg
  const int m = cfg.m();

  CircleInstance out;
  std::map<int, int> colors;
  if (k == 0) {
    out.tri.dim = 1;
    out.tri.vertex_count = 2;
    out.tri.facets = {{0, 1}, {1, 0}};
    out.tri.signs = {1, 1};
    colors[0] = order[0];
    colors[1] = order[0];
  } else {
    std::vector<int> sequence;
    sequence.reserve(static_cast<std::size_t>(std::abs(k)) * m);
    for (int lap = 0; lap < std::abs(k); ++lap) {
      if (k > 0)
        sequence.insert(sequence.end(), order.begin(), order.end());
      else
        sequence.insert(sequence.end(), order.rbegin(), order.rend());
    }
    const int n = static_cast<int>(sequence.size());
    out.tri.dim = 1;
    out.tri.vertex_count = n;
    for (int i = 0; i < n; ++i) {
      out.tri.facets.push_back({i, (i + 1) % n});
      out.tri.signs.push_back(1);
      colors[i] = sequence[i];
    }
  }
  out.cover = cover_from_colors(m, colors);
  return out;
}

} // namespace balcov
