#include "balcov/config.hpp"
#include "balcov/errors.hpp"

#include <doctest.h>

using namespace balcov;

namespace {
Rational q(long n, long d = 1) {
  Rational x(n, d);
  x.canonicalize();
  return x;
}

PointConfig square() {
  PointConfig cfg;
  cfg.dim = 2;
  cfg.points = {{q(1), q(0)}, {q(0), q(1)}, {q(-1), q(0)}, {q(0), q(-1)}};
  cfg.r = {q(0), q(0)};
  return cfg;
}
} // namespace

TEST_CASE("config validation") {
  CHECK_NOTHROW(square().validate());

  PointConfig bad = square();
  bad.dim = 0;
  CHECK_THROWS_AS(bad.validate(), InputError);

  bad = square();
  bad.points[2].pop_back();
  CHECK_THROWS_AS(bad.validate(), InputError);

  bad = square();
  bad.r.push_back(q(1));
  CHECK_THROWS_AS(bad.validate(), InputError);

  bad = square();
  bad.points.clear();
  CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("scale_transform moves points along rays from r") {
  const PointConfig cfg = square();
  const auto scaled = scale_transform(cfg, {q(2), q(1, 2), q(3), q(1)});
  CHECK(scaled.points[0] == RationalVector{q(2), q(0)});
  CHECK(scaled.points[1] == RationalVector{q(0), q(1, 2)});
  CHECK(scaled.points[2] == RationalVector{q(-3), q(0)});
  CHECK(scaled.points[3] == RationalVector{q(0), q(-1)});
  CHECK(scaled.r == cfg.r);
}

TEST_CASE("scale_transform about a noncentral base point") {
  PointConfig cfg = square();
  cfg.r = {q(1, 3), q(0)};
  const auto scaled = scale_transform(cfg, {q(3), q(1), q(1), q(1)});
  // v1' = 3 * ((1,0) - (1/3,0)) + (1/3,0) = (7/3, 0).
  CHECK(scaled.points[0] == RationalVector{q(7, 3), q(0)});
}

TEST_CASE("scale_transform rejects nonpositive factors") {
  CHECK_THROWS_AS(scale_transform(square(), {q(1), q(0), q(1), q(1)}), InputError);
  CHECK_THROWS_AS(scale_transform(square(), {q(1), q(-2), q(1), q(1)}), InputError);
  CHECK_THROWS_AS(scale_transform(square(), {q(1), q(1), q(1)}), InputError);
}
