#include "balcov/grid.hpp"

#include "balcov/errors.hpp"
#include "balcov/linalg.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <algorithm>

using namespace balcov;
using namespace balcov::testing;

namespace {

Rational q(long n, long d = 1) {
  Rational x(n, d);
  x.canonicalize();
  return x;
}

PointConfig square_config() {
  PointConfig cfg;
  cfg.dim = 2;
  cfg.points = {{q(1), q(0)}, {q(0), q(1)}, {q(-1), q(0)}, {q(0), q(-1)}};
  cfg.r = {q(0), q(0)};
  return cfg;
}

PointConfig triangle_config() {
  PointConfig cfg;
  cfg.dim = 2;
  cfg.points = {{q(1), q(0)}, {q(-1), q(1)}, {q(-1), q(-1)}};
  cfg.r = {q(0), q(0)};
  return cfg;
}

PointConfig line_config() {
  PointConfig cfg;
  cfg.dim = 1;
  cfg.points = {{q(-1)}, {q(2)}};
  cfg.r = {q(0)};
  return cfg;
}

GridSpec box2(int rx, int ry) {
  GridSpec spec;
  spec.dim = 2;
  spec.resolution = {rx, ry};
  spec.lower = {q(-1), q(-1)};
  spec.upper = {q(1), q(1)};
  return spec;
}

} // namespace

TEST_CASE("lattice validation") {
  GridSpec spec = box2(4, 3);
  CHECK_NOTHROW(spec.validate());
  CHECK(spec.cells() == 12);
  CHECK(spec.vertex_count() == 20);

  GridSpec bad = spec;
  bad.dim = 0;
  CHECK_THROWS_AS(bad.validate(), InputError);
  bad = spec;
  bad.dim = 5;
  bad.resolution = {1, 1, 1, 1, 1};
  bad.lower = RationalVector(5, q(0));
  bad.upper = RationalVector(5, q(1));
  CHECK_THROWS_AS(bad.validate(), InputError);
  bad = spec;
  bad.resolution[1] = 0;
  CHECK_THROWS_AS(bad.validate(), InputError);
  bad = spec;
  bad.resolution[0] = 4097;
  CHECK_THROWS_AS(bad.validate(), InputError);
  bad = spec;
  bad.upper[0] = bad.lower[0];
  CHECK_THROWS_AS(bad.validate(), InputError);
  bad = spec;
  bad.lower.pop_back();
  CHECK_THROWS_AS(bad.validate(), InputError);

  GridSpec huge = box2(500, 500); // 501^2 lattice vertices
  CHECK_THROWS_AS(huge.validate(), CapacityError);
  GridSpec many;
  many.dim = 3;
  many.resolution = {100, 100, 10}; // 6 * 10^5 simplices
  many.lower = RationalVector(3, q(0));
  many.upper = RationalVector(3, q(1));
  CHECK_THROWS_AS(many.validate(), CapacityError);
}

TEST_CASE("lattice numbering round-trips") {
  const GridSpec spec = box2(4, 3);
  for (int v = 0; v < spec.vertex_count(); ++v) {
    const auto idx = grid_vertex_index(spec, v);
    CHECK(grid_vertex_id(spec, idx) == v);
  }
  CHECK(grid_vertex_id(spec, {1, 2}) == 6);
  const RationalVector coords = grid_vertex_coords(spec, 6);
  CHECK(coords == RationalVector{q(-1, 2), q(1, 3)});
  CHECK(grid_vertex_coords(spec, 0) == RationalVector{q(-1), q(-1)});
  CHECK(grid_vertex_coords(spec, 19) == RationalVector{q(1), q(1)});
}

TEST_CASE("box subdivision in one dimension") {
  GridSpec spec;
  spec.dim = 1;
  spec.resolution = {3};
  spec.lower = {q(-1)};
  spec.upper = {q(1)};
  const auto t = kuhn_triangulation(spec);
  CHECK(t.dim == 1);
  CHECK(t.vertex_count == 4);
  CHECK(t.facets == std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(t.signs == std::vector<int>{1, 1, 1});
  CHECK(orientation_coherence_check(boundary_of(t)));
}

TEST_CASE("box subdivision in the plane") {
  const auto t = kuhn_triangulation(box2(2, 2));
  REQUIRE(t.facet_count() == 8);
  // Cell (0,0): axis order (x,y) with rank 0, (y,x) with rank 1.
  CHECK(t.facets[0] == std::vector<int>{0, 3, 4});
  CHECK(t.sign(0) == 1);
  CHECK(t.facets[1] == std::vector<int>{0, 1, 4});
  CHECK(t.sign(1) == -1);
  CHECK(orientation_coherence_check(boundary_of(t)));
}

TEST_CASE("every box simplex is positively oriented") {
  const auto check_positive = [](const GridSpec& spec) {
    const auto t = kuhn_triangulation(spec);
    for (int f = 0; f < t.facet_count(); ++f) {
      RationalMatrix edges;
      const RationalVector base = grid_vertex_coords(spec, t.facets[f][0]);
      for (std::size_t j = 1; j < t.facets[f].size(); ++j) {
        RationalVector row = grid_vertex_coords(spec, t.facets[f][j]);
        for (int c = 0; c < spec.dim; ++c) row[c] -= base[c];
        edges.push_back(std::move(row));
      }
      CHECK(t.sign(f) * determinant_sign(edges) == 1);
    }
  };

  GridSpec flat = box2(2, 3);
  flat.upper = {q(3), q(2)};
  check_positive(flat);

  GridSpec solid;
  solid.dim = 3;
  solid.resolution = {2, 1, 2};
  solid.lower = RationalVector(3, q(0));
  solid.upper = {q(1), q(1), q(1)};
  const auto t = kuhn_triangulation(solid);
  CHECK(t.facet_count() == 24);
  CHECK(t.facets[0] == std::vector<int>{0, 6, 9, 10});
  check_positive(solid);
  CHECK(orientation_coherence_check(boundary_of(t)));
}

TEST_CASE("constant labels have no singular simplices") {
  const PointConfig cfg = square_config();
  const GridCover g = grid_constant(box2(3, 3), 4, 2);
  const auto report = singular_facets(g, cfg);
  CHECK(report.by_support.empty());
  CHECK(report.by_image.empty());
  CHECK(components(g, cfg, 1).empty());
  const auto add = additivity_check(g, cfg, 1);
  CHECK(add.parts.empty());
  CHECK(add.outer.degree == 0);
  CHECK(add.index_sum == 0);

  CHECK_THROWS_AS(grid_constant(box2(3, 3), 4, 4), InputError);
  CHECK_THROWS_AS(grid_constant(box2(3, 3), 0, 0), InputError);
}

TEST_CASE("single whirl: one component of local index one") {
  const PointConfig cfg = square_config();
  const GridSpec spec = box2(6, 6);
  const GridCover g = grid_vortex(spec, cfg, {q(1, 5), q(1, 5)});

  // The four sector labels meet in the cell with corner (0, 0); its two
  // simplices are exactly the balanced-support ones.
  const auto report = singular_facets(g, cfg);
  CHECK(report.by_support == std::vector<int>{42, 43});
  CHECK(report.by_image == report.by_support); // colorings: the tests agree

  const auto add = additivity_check(g, cfg, 9);
  REQUIRE(add.parts.size() == 1);
  CHECK(add.parts[0].singular == std::vector<int>{42, 43});
  // The one-ring star: both simplices of the seven fully adjacent cells,
  // but only the corner-touching simplex of the two diagonal cells.
  CHECK(add.parts[0].neighborhood ==
        std::vector<int>{28, 29, 30, 31, 32, 40, 41, 42, 43, 44, 45, 53, 54, 55,
                         56, 57});
  CHECK(add.parts[0].boundary.degree == 1);
  CHECK(add.outer.degree == 1);
  CHECK(add.index_sum == 1);
}

TEST_CASE("three-sector whirl") {
  const PointConfig cfg = triangle_config();
  const GridCover g = grid_vortex(box2(8, 8), cfg, {q(1, 5), q(1, 7)});
  const auto add = additivity_check(g, cfg, 3);
  REQUIRE(add.parts.size() == 1);
  CHECK(add.parts[0].boundary.degree == 1);
  CHECK(add.outer.degree == 1);
}

TEST_CASE("two whirls of opposite spin cancel on the box surface") {
  const PointConfig cfg = square_config();
  GridSpec spec;
  spec.dim = 2;
  spec.resolution = {16, 16};
  spec.lower = {q(-2), q(-2)};
  spec.upper = {q(2), q(2)};
  const RationalVector c1{q(-9, 10), q(1, 11)};
  const RationalVector c2{q(9, 10), q(-1, 11)};

  const GridCover opposite = grid_bivortex(spec, cfg, c1, c2, true);
  const auto cancel = additivity_check(opposite, cfg, 5);
  REQUIRE(cancel.parts.size() == 2);
  CHECK(cancel.parts[0].boundary.degree == 1);
  CHECK(cancel.parts[1].boundary.degree == -1);
  CHECK(cancel.outer.degree == 0);
  CHECK(cancel.index_sum == 0);

  const GridCover aligned = grid_bivortex(spec, cfg, c1, c2, false);
  const auto add = additivity_check(aligned, cfg, 5);
  REQUIRE(add.parts.size() == 2);
  CHECK(add.parts[0].boundary.degree == 1);
  CHECK(add.parts[1].boundary.degree == 1);
  CHECK(add.outer.degree == 2);
  CHECK(add.index_sum == 2);
}

TEST_CASE("a singular region near the box surface is reported") {
  const PointConfig cfg = square_config();
  // Whirl center in the outermost cell column: the neighborhood would
  // need facets beyond the box.
  const GridCover edge = grid_vortex(box2(4, 4), cfg, {q(9, 10), q(1, 7)});
  CHECK_THROWS_AS(components(edge, cfg, 1), BoundaryContactError);
  // On a 2x2 lattice even a central whirl has no interior margin.
  const GridCover tiny = grid_vortex(box2(2, 2), cfg, {q(1, 5), q(1, 5)});
  CHECK_THROWS_AS(components(tiny, cfg, 1), BoundaryContactError);
}

TEST_CASE("interval cover with a fractional middle vertex") {
  const PointConfig cfg = line_config();
  GridSpec spec;
  spec.dim = 1;
  spec.resolution = {7};
  spec.lower = {q(-1)};
  spec.upper = {q(1)};

  GridCover g;
  g.spec = spec;
  g.cover.m = 2;
  for (int v = 0; v <= 2; ++v) g.cover.weights[v] = {q(1), q(0)};
  g.cover.weights[3] = {q(1, 2), q(1, 2)};
  for (int v = 4; v <= 7; ++v) g.cover.weights[v] = {q(0), q(1)};

  // Both simplices at the fractional vertex have full support, but only
  // one image hull reaches the base point: the support test over-reports.
  const auto report = singular_facets(g, cfg);
  CHECK(report.by_support == std::vector<int>{2, 3});
  CHECK(report.by_image == std::vector<int>{2});
  CHECK(std::includes(report.by_support.begin(), report.by_support.end(),
                      report.by_image.begin(), report.by_image.end()));

  const auto add = additivity_check(g, cfg, 2);
  REQUIRE(add.parts.size() == 1);
  CHECK(add.parts[0].singular == std::vector<int>{2, 3});
  CHECK(add.parts[0].neighborhood == std::vector<int>{1, 2, 3, 4});
  CHECK(add.parts[0].boundary.degree == 1);
  CHECK(add.outer.degree == 1);
}

TEST_CASE("interval coloring: the two tests coincide") {
  const PointConfig cfg = line_config();
  GridSpec spec;
  spec.dim = 1;
  spec.resolution = {5};
  spec.lower = {q(-1)};
  spec.upper = {q(1)};

  GridCover g;
  g.spec = spec;
  g.cover.m = 2;
  for (int v = 0; v <= 2; ++v) g.cover.weights[v] = {q(1), q(0)};
  for (int v = 3; v <= 5; ++v) g.cover.weights[v] = {q(0), q(1)};

  const auto report = singular_facets(g, cfg);
  CHECK(report.by_support == std::vector<int>{2});
  CHECK(report.by_image == std::vector<int>{2});

  const auto add = additivity_check(g, cfg, 4);
  REQUIRE(add.parts.size() == 1);
  CHECK(add.parts[0].neighborhood == std::vector<int>{1, 2, 3});
  CHECK(add.parts[0].boundary.degree == 1);
  CHECK(add.outer.degree == 1);
}

TEST_CASE("random whirl placements satisfy additivity") {
  Rng rng(29);
  for (int trial = 0; trial < 6; ++trial) {
    const PointConfig cfg = trial % 2 == 0 ? square_config() : triangle_config();
    const int res = 8 + 2 * static_cast<int>(rng.below(3));
    // Small center offsets keep the singular cells (which must straddle the
    // sector rays) well inside the box.
    const RationalVector center{q(rng.below(13) - 6, 23),
                                q(rng.below(13) - 6, 29)};
    const GridCover g = grid_vortex(box2(res, res), cfg, center);
    const auto add = additivity_check(g, cfg, 100 + trial);
    CHECK(add.outer.degree == 1);
    CHECK(add.index_sum == 1);
    long long sum = 0;
    for (const auto& part : add.parts) sum += part.boundary.degree;
    CHECK(sum == add.index_sum);
  }
}

TEST_CASE("label and dimension mismatches are rejected") {
  const GridCover g = grid_vortex(box2(4, 4), square_config(), {q(1, 5), q(1, 5)});
  CHECK_THROWS_AS(singular_facets(g, triangle_config()), MismatchError);

  GridSpec line;
  line.dim = 1;
  line.resolution = {4};
  line.lower = {q(-1)};
  line.upper = {q(1)};
  GridCover flat;
  flat.spec = line;
  flat.cover.m = 4;
  for (int v = 0; v <= 4; ++v) flat.cover.weights[v] = {q(1), q(0), q(0), q(0)};
  CHECK_THROWS_AS(singular_facets(flat, square_config()), InputError);

  GridCover incomplete = g;
  incomplete.cover.weights.erase(0);
  CHECK_THROWS_AS(incomplete.validate(), InputError);

  CHECK_THROWS_AS(grid_vortex(box2(4, 4), line_config(), {q(0), q(0)}),
                  InputError);
  CHECK_THROWS_AS(grid_vortex(box2(4, 4), square_config(), {q(0)}), InputError);
}

TEST_CASE("picture output marks components and indices") {
  const PointConfig cfg = square_config();
  const GridCover g = grid_vortex(box2(6, 6), cfg, {q(1, 5), q(1, 5)});
  const auto parts = components(g, cfg, 9);
  const std::string svg = render_components_svg(g, cfg, parts);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find(">+1</text>") != std::string::npos);
  CHECK(svg.find("#c0392b") != std::string::npos); // singular shade
  CHECK(svg.find("#f5b7b1") != std::string::npos); // neighborhood shade
  std::size_t polygons = 0;
  for (std::size_t at = svg.find("<polygon"); at != std::string::npos;
       at = svg.find("<polygon", at + 1))
    ++polygons;
  CHECK(polygons == 72);

  GridSpec line;
  line.dim = 1;
  line.resolution = {4};
  line.lower = {q(-1)};
  line.upper = {q(1)};
  GridCover flat;
  flat.spec = line;
  flat.cover.m = 2;
  for (int v = 0; v <= 4; ++v) flat.cover.weights[v] = {q(1), q(0)};
  CHECK_THROWS_AS(render_components_svg(flat, line_config(), {}), InputError);
}
