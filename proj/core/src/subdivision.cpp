#include "balcov/subdivision.hpp"

#include "balcov/errors.hpp"

#include <string>

namespace balcov {

void CarrierLabeledTriangulation::validate() const {
  tri.validate();
  if (n < 1) throw InputError("labeled triangulation: n must be >= 1");
  if (n > 31) throw CapacityError("labeled triangulation: n must be <= 31");
  if (tri.dim != n - 1)
    throw InputError("labeled triangulation: dimension must be n - 1");
  if (carriers.size() != static_cast<std::size_t>(tri.vertex_count))
    throw InputError("labeled triangulation: one carrier per vertex required");
  const IndexMask full = (IndexMask{1} << n) - 1u;
  for (std::size_t v = 0; v < carriers.size(); ++v) {
    if (carriers[v] == 0 || (carriers[v] & ~full) != 0)
      throw InputError("labeled triangulation: carrier of vertex " +
                       std::to_string(v + 1) + " is not a nonempty label subset");
  }
}

std::vector<RationalVector> simplex_corner_coords(int n) {
  if (n < 2) throw InputError("simplex_corner_coords: n must be >= 2");
  std::vector<RationalVector> corners(n, RationalVector(n - 1, Rational(0)));
  for (int j = 1; j < n; ++j) corners[j][j - 1] = 1;
  return corners;
}

PointConfig make_kkm_config(int n) {
  PointConfig cfg;
  cfg.dim = n - 1;
  cfg.points = simplex_corner_coords(n);
  cfg.r.assign(n - 1, Rational(1, n));
  cfg.validate();
  return cfg;
}

CarrierLabeledTriangulation subdivide_segment(int k) {
  if (k < 1) throw InputError("subdivide_segment: k must be >= 1");
  CarrierLabeledTriangulation out;
  out.n = 2;
  out.tri.dim = 1;
  out.tri.vertex_count = k + 1;
  for (int i = 0; i < k; ++i) {
    out.tri.facets.push_back({i, i + 1});
    out.tri.signs.push_back(1);
  }
  out.carriers.resize(k + 1);
  for (int i = 0; i <= k; ++i) {
    if (i == 0) out.carriers[i] = 0b01;      // label 1 (coordinate 0)
    else if (i == k) out.carriers[i] = 0b10; // label 2 (coordinate 1)
    else out.carriers[i] = 0b11;
  }
  out.validate();
  return out;
}

CarrierLabeledTriangulation subdivide_triangle(int k) {
  if (k < 1) throw InputError("subdivide_triangle: k must be >= 1");
  CarrierLabeledTriangulation out;
  out.n = 3;
  out.tri.dim = 2;

  // Lattice vertices (i, j) with i + j <= k; barycentric (k-i-j, i, j)/k
  // against the corner embedding (label 1 at the origin).
  std::vector<std::vector<int>> id(k + 1, std::vector<int>(k + 1, -1));
  int next = 0;
  out.carriers.clear();
  for (int j = 0; j <= k; ++j) {
    for (int i = 0; i + j <= k; ++i) {
      id[i][j] = next++;
      IndexMask carrier = 0;
      if (k - i - j > 0) carrier |= 0b001;
      if (i > 0) carrier |= 0b010;
      if (j > 0) carrier |= 0b100;
      out.carriers.push_back(carrier);
    }
  }
  out.tri.vertex_count = next;
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i + j < k; ++i) {
      // Upward triangle; counterclockwise in the (i, j) chart.
      out.tri.facets.push_back({id[i][j], id[i + 1][j], id[i][j + 1]});
      out.tri.signs.push_back(1);
      if (i + j < k - 1) {
        // Downward triangle sharing the diagonal.
        out.tri.facets.push_back({id[i + 1][j], id[i + 1][j + 1], id[i][j + 1]});
        out.tri.signs.push_back(1);
      }
    }
  }
  out.validate();
  return out;
}

CarrierLabeledTriangulation barycentric_triangle() {
  CarrierLabeledTriangulation out;
  out.n = 3;
  out.tri.dim = 2;
  out.tri.vertex_count = 7;
  // Vertices: 0,1,2 corners (labels 1,2,3); 3,4,5 edge midpoints of
  // {1,2},{2,3},{1,3}; 6 the center.
  out.carriers = {0b001, 0b010, 0b100, 0b011, 0b110, 0b101, 0b111};
  const int corner[3] = {0, 1, 2};
  const int mid_of[3][3] = {{-1, 3, 5}, {3, -1, 4}, {5, 4, -1}};
  // Chains corner < midpoint < center, oriented counterclockwise against
  // the corner embedding (corner order 0->1->2 is counterclockwise).
  for (int c = 0; c < 3; ++c) {
    const int a = corner[c], bnext = corner[(c + 1) % 3];
    const int mid = mid_of[a][bnext];
    out.tri.facets.push_back({a, mid, 6});
    out.tri.signs.push_back(1);
    out.tri.facets.push_back({mid, bnext, 6});
    out.tri.signs.push_back(1);
  }
  out.validate();
  return out;
}

} // namespace balcov
