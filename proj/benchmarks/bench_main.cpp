// Microbenchmarks for the exact-arithmetic kernels: hull membership,
// minimal-family enumeration, homology, mapping degree, and grid index
// additivity. Instances are deterministic (fixed seeds) so runs are
// comparable across machines and revisions.

#include "balcov/balanced.hpp"
#include "balcov/config.hpp"
#include "balcov/cover.hpp"
#include "balcov/degree.hpp"
#include "balcov/geometry.hpp"
#include "balcov/grid.hpp"
#include "balcov/homology.hpp"

#include <benchmark/benchmark.h>

#include <map>
#include <random>
#include <vector>

namespace {

using namespace balcov;

Rational frac(long num, long den) {
  Rational x(num, den);
  x.canonicalize();
  return x;
}

Rational small_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 25) - 12;
  const long den = 1 + static_cast<long>(rng() % 6);
  return frac(num, den);
}

/// Points with small rational coordinates; r is the centroid, which keeps
/// it inside the hull so the balanced family is nontrivial.
PointConfig centered_config(int dim, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PointConfig cfg;
  cfg.dim = dim;
  for (int i = 0; i < m; ++i) {
    RationalVector p(dim);
    for (int c = 0; c < dim; ++c) p[c] = small_rational(rng);
    cfg.points.push_back(p);
  }
  cfg.r.assign(dim, Rational(0));
  for (const RationalVector& p : cfg.points)
    for (int c = 0; c < dim; ++c) cfg.r[c] += p[c];
  for (int c = 0; c < dim; ++c) cfg.r[c] /= m;
  return cfg;
}

PointConfig square_config() {
  PointConfig cfg;
  cfg.dim = 2;
  cfg.points = {{frac(1, 1), frac(0, 1)},
                {frac(0, 1), frac(1, 1)},
                {frac(-1, 1), frac(0, 1)},
                {frac(0, 1), frac(-1, 1)}};
  cfg.r = {frac(0, 1), frac(0, 1)};
  return cfg;
}

void BM_HullMembershipInside(benchmark::State& state) {
  const PointConfig cfg = centered_config(3, static_cast<int>(state.range(0)), 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(conv_membership(cfg.points, cfg.r));
  }
}
BENCHMARK(BM_HullMembershipInside)->Arg(6)->Arg(12)->Arg(20);

void BM_HullMembershipOutside(benchmark::State& state) {
  PointConfig cfg = centered_config(3, static_cast<int>(state.range(0)), 18);
  cfg.r[0] += 100; // far beyond the hull along the first axis
  for (auto _ : state) {
    benchmark::DoNotOptimize(conv_membership(cfg.points, cfg.r));
  }
}
BENCHMARK(BM_HullMembershipOutside)->Arg(6)->Arg(12)->Arg(20);

void BM_MinimalBalanced(benchmark::State& state) {
  const PointConfig cfg = centered_config(3, static_cast<int>(state.range(0)), 19);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_minimal_balanced(cfg));
  }
}
BENCHMARK(BM_MinimalBalanced)->Arg(8)->Arg(12)->Arg(16);

void BM_ReducedHomology(benchmark::State& state) {
  const PointConfig cfg = centered_config(3, static_cast<int>(state.range(0)), 20);
  const SimplicialComplex c = nonbalanced_complex(cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduced_homology(c));
  }
}
BENCHMARK(BM_ReducedHomology)->Arg(6)->Arg(8)->Arg(10);

void BM_CycleDegree(benchmark::State& state) {
  const PointConfig cfg = square_config();
  const int n = static_cast<int>(state.range(0));
  OrientedTriangulation tri;
  tri.dim = 1;
  tri.vertex_count = n;
  std::map<int, int> colors;
  std::mt19937_64 rng(21);
  int color = 0;
  for (int i = 0; i < n; ++i) {
    tri.facets.push_back({i, (i + 1) % n});
    tri.signs.push_back(1);
    colors[i] = color;
    color = (color + 4 + static_cast<int>(rng() % 3) - 1) % 4;
  }
  colors[0] = colors[n - 1]; // keep the closing edge non-antipodal
  const WeightedCover cover = cover_from_colors(4, colors);
  for (auto _ : state) {
    benchmark::DoNotOptimize(degree(tri, cover, cfg, 7));
  }
}
BENCHMARK(BM_CycleDegree)->Arg(16)->Arg(64)->Arg(256);

void BM_GridAdditivity(benchmark::State& state) {
  const PointConfig cfg = square_config();
  const int res = static_cast<int>(state.range(0));
  GridSpec spec;
  spec.dim = 2;
  spec.resolution = {res, res};
  spec.lower = {frac(-1, 1), frac(-1, 1)};
  spec.upper = {frac(1, 1), frac(1, 1)};
  const GridCover g = grid_vortex(spec, cfg, {frac(1, 5), frac(1, 7)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(additivity_check(g, cfg, 7));
  }
}
BENCHMARK(BM_GridAdditivity)->Arg(8)->Arg(16)->Arg(32);

} // namespace

BENCHMARK_MAIN();
