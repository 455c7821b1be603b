#include "balcov/applications.hpp"
#include "balcov/balanced.hpp"
#include "balcov/errors.hpp"

#include "support/generators.hpp"

#include <doctest.h>

using namespace balcov;
using namespace balcov::testing;

namespace {
Rational q(long n, long d = 1) {
  Rational x(n, d);
  x.canonicalize();
  return x;
}
} // namespace

TEST_CASE("carrier admissibility of colorings") {
  const auto lt = barycentric_triangle();
  std::map<int, int> colors{{0, 0}, {1, 1}, {2, 2}, {3, 0},
                            {4, 1}, {5, 2}, {6, 1}};
  CHECK(check_sperner(lt, colors));

  colors[0] = 1; // corner 1 colored with label 2
  CHECK_FALSE(check_sperner(lt, colors));

  colors[0] = 0;
  colors.erase(6);
  CHECK_THROWS_AS(check_sperner(lt, colors), InputError); // missing vertex

  colors[6] = 3; // label out of range
  CHECK_THROWS_AS(check_sperner(lt, colors), InputError);
}

TEST_CASE("coned-center coloring has exactly one fully multicolored facet") {
  const auto lt = barycentric_triangle();
  const std::map<int, int> colors{{0, 0}, {1, 1}, {2, 2}, {3, 0},
                                  {4, 1}, {5, 2}, {6, 1}};
  REQUIRE(check_sperner(lt, colors));
  const auto rainbow = find_rainbow(lt, colors);
  CHECK(rainbow.facets == std::vector<int>{5});
  CHECK(rainbow.signed_count == 1);
}

TEST_CASE("admissible colorings always have signed rainbow count one") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto lt = trial % 2 == 0 ? subdivide_triangle(2 + trial % 5)
                                   : barycentric_triangle();
    const auto colors = admissible_coloring(rng, lt);
    REQUIRE(check_sperner(lt, colors));
    const auto rainbow = find_rainbow(lt, colors);
    CHECK(rainbow.signed_count == 1);
    CHECK(rainbow.facets.size() % 2 == 1);
  }
}

TEST_CASE("segment colorings: odd number of bichromatic edges") {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const auto lt = subdivide_segment(2 + static_cast<int>(rng.below(9)));
    const auto colors = admissible_coloring(rng, lt);
    const auto rainbow = find_rainbow(lt, colors);
    CHECK(rainbow.signed_count == 1);
    CHECK(rainbow.facets.size() % 2 == 1);
  }
}

TEST_CASE("obstruction check on a ball with constant cover") {
  const auto lt = subdivide_triangle(2);
  const PointConfig cfg = make_kkm_config(3);
  std::map<int, int> constant;
  for (int v = 0; v < lt.tri.vertex_count; ++v) constant[v] = 0;
  const auto cover = cover_from_colors(3, constant);
  const auto result = theorem_b_check(lt.tri, cover, cfg, 5);
  REQUIRE(result.boundary.status == DegreeStatus::Ok);
  CHECK(result.boundary.degree == 0);
  CHECK_FALSE(result.witness.has_value());
}

TEST_CASE("carrier-subordinate covers force a balanced facet") {
  Rng rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    const auto lt = subdivide_triangle(2 + trial % 4);
    const auto cover = subordinate_cover(rng, lt);
    REQUIRE(check_kkm_cover(lt, cover));
    const auto result = kkm_check(lt, cover, trial);
    // Boundary degree 1, hence a facet whose support is all of [n].
    REQUIRE(result.boundary.status == DegreeStatus::Ok);
    CHECK(result.boundary.degree == 1);
    REQUIRE(result.witness.has_value());
    CHECK(result.witness->support == 0b111u);
    CHECK(facet_support(lt.tri, cover, result.witness->facet) == 0b111u);
  }
}

TEST_CASE("kkm rejects non-subordinate covers") {
  const auto lt = subdivide_triangle(2);
  std::map<int, int> colors;
  for (int v = 0; v < lt.tri.vertex_count; ++v) colors[v] = 0;
  const auto cover = cover_from_colors(3, colors); // corners 2 and 3 violated
  CHECK_FALSE(check_kkm_cover(lt, cover));
  CHECK_THROWS_AS(kkm_check(lt, cover, 0), InputError);
}

TEST_CASE("subset configuration for n = 2") {
  const PointConfig cfg = make_kkms_config(2);
  REQUIRE(cfg.dim == 1);
  REQUIRE(cfg.m() == 3);
  CHECK(cfg.points[0] == RationalVector{q(0)});     // {1}
  CHECK(cfg.points[1] == RationalVector{q(1)});     // {2}
  CHECK(cfg.points[2] == RationalVector{q(1, 2)}); // {1,2}
  CHECK(cfg.r == RationalVector{q(1, 2)});

  const auto profile = enumerate_minimal_balanced(cfg);
  CHECK(profile.minimal_balanced == std::vector<IndexMask>{0b011u, 0b100u});
}

TEST_CASE("midpoint mass on the full subset: witness is the full-set family") {
  KkmsInstance inst;
  inst.labeled = subdivide_segment(2);
  inst.cover.m = 3;
  inst.cover.weights[0] = {q(1), q(0), q(0)}; // corner 1 -> subset {1}
  inst.cover.weights[1] = {q(0), q(0), q(1)}; // midpoint -> subset {1,2}
  inst.cover.weights[2] = {q(0), q(1), q(0)}; // corner 2 -> subset {2}
  CHECK_NOTHROW(inst.validate());

  const auto witness = kkms_witness(inst);
  CHECK(witness.facet == 0);
  CHECK(witness.subfamily == std::vector<IndexMask>{0b11u}); // {{1,2}}

  const auto boundary = kkms_boundary_degree(inst, 3);
  REQUIRE(boundary.status == DegreeStatus::Ok);
  CHECK(boundary.degree == 1);
}

TEST_CASE("two singleton colors: witness is the middle facet") {
  KkmsInstance inst;
  inst.labeled = subdivide_segment(3);
  inst.cover.m = 3;
  inst.cover.weights[0] = {q(1), q(0), q(0)};
  inst.cover.weights[1] = {q(1), q(0), q(0)};
  inst.cover.weights[2] = {q(0), q(1), q(0)};
  inst.cover.weights[3] = {q(0), q(1), q(0)};
  CHECK_NOTHROW(inst.validate());

  const auto witness = kkms_witness(inst);
  CHECK(witness.facet == 1); // the middle edge, 0-based
  CHECK(witness.subfamily == std::vector<IndexMask>{0b01u, 0b10u}); // {{1},{2}}
}

TEST_CASE("subordination violations are rejected") {
  KkmsInstance inst;
  inst.labeled = subdivide_segment(2);
  inst.cover.m = 3;
  inst.cover.weights[0] = {q(0), q(1), q(0)}; // corner 1 weighted on {2}
  inst.cover.weights[1] = {q(0), q(0), q(1)};
  inst.cover.weights[2] = {q(0), q(1), q(0)};
  CHECK_THROWS_AS(inst.validate(), InputError);

  inst.cover.weights[0] = {q(1), q(0)}; // wrong label count
  inst.cover.weights[1] = {q(1), q(0)};
  inst.cover.weights[2] = {q(1), q(0)};
  inst.cover.m = 2;
  CHECK_THROWS_AS(inst.validate(), MismatchError);
}

TEST_CASE("random subordinate subset covers always yield a witness") {
  Rng rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = trial % 2 == 0 ? 2 : 3;
    const auto inst =
        random_kkms_instance(rng, n, 2 + static_cast<int>(rng.below(3)));
    const auto witness = kkms_witness(inst);
    CHECK(witness.facet >= 0);
    CHECK_FALSE(witness.subfamily.empty());
    // The returned family really is balanced for the subset configuration.
    const PointConfig cfg = make_kkms_config(n);
    IndexMask support = 0;
    for (IndexMask subset : witness.subfamily) support |= IndexMask{1} << (subset - 1);
    CHECK(is_balanced(enumerate_minimal_balanced(cfg), support));

    const auto boundary = kkms_boundary_degree(inst, trial);
    REQUIRE(boundary.status == DegreeStatus::Ok);
    CHECK(boundary.degree == 1);
  }
}
