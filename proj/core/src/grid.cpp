#include "balcov/grid.hpp"

#include "balcov/errors.hpp"
#include "balcov/geometry.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace balcov {

namespace {

long factorial(int d) {
  long out = 1;
  for (int j = 2; j <= d; ++j) out *= j;
  return out;
}

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  std::vector<int> v = p;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) {
        std::swap(v[i], v[j]);
        sign = -sign;
      }
  return sign;
}

} // namespace

long GridSpec::cells() const {
  long out = 1;
  for (int r : resolution) out *= r;
  return out;
}

long GridSpec::vertex_count() const {
  long out = 1;
  for (int r : resolution) out *= r + 1;
  return out;
}

void GridSpec::validate() const {
  if (dim < 1 || dim > 4) throw InputError("grid dimension must be between 1 and 4");
  if (static_cast<int>(resolution.size()) != dim)
    throw InputError("grid needs one resolution per axis");
  for (int r : resolution)
    if (r < 1 || r > 4096) throw InputError("grid resolution out of range");
  if (static_cast<int>(lower.size()) != dim || static_cast<int>(upper.size()) != dim)
    throw InputError("grid box corners must have one coordinate per axis");
  for (int a = 0; a < dim; ++a)
    if (lower[a] >= upper[a])
      throw InputError("grid box must have positive extent on every axis");
  if (vertex_count() > kMaxGridVertices)
    throw CapacityError("grid has too many lattice vertices");
  if (cells() * factorial(dim) > kMaxGridFacets)
    throw CapacityError("grid has too many simplices");
}

int grid_vertex_id(const GridSpec& spec, const std::vector<int>& idx) {
  long id = 0;
  for (int a = 0; a < spec.dim; ++a) id = id * (spec.resolution[a] + 1) + idx[a];
  return static_cast<int>(id);
}

std::vector<int> grid_vertex_index(const GridSpec& spec, int vertex) {
  std::vector<int> idx(spec.dim, 0);
  long rest = vertex;
  for (int a = spec.dim - 1; a >= 0; --a) {
    const long base = spec.resolution[a] + 1;
    idx[a] = static_cast<int>(rest % base);
    rest /= base;
  }
  return idx;
}

RationalVector grid_vertex_coords(const GridSpec& spec, int vertex) {
  const std::vector<int> idx = grid_vertex_index(spec, vertex);
  RationalVector coords(spec.dim);
  for (int a = 0; a < spec.dim; ++a) {
    coords[a] = spec.lower[a] +
                (spec.upper[a] - spec.lower[a]) * idx[a] / spec.resolution[a];
  }
  return coords;
}

OrientedTriangulation kuhn_triangulation(const GridSpec& spec) {
  spec.validate();
  const int d = spec.dim;

  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(d);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  OrientedTriangulation t;
  t.dim = d;
  t.vertex_count = static_cast<int>(spec.vertex_count());

  std::vector<int> cell(d, 0);
  while (true) {
    for (const auto& p : perms) {
      std::vector<int> chain;
      chain.reserve(d + 1);
      std::vector<int> u = cell;
      chain.push_back(grid_vertex_id(spec, u));
      for (int j = 0; j < d; ++j) {
        ++u[p[j]];
        chain.push_back(grid_vertex_id(spec, u));
      }
      t.facets.push_back(std::move(chain));
      t.signs.push_back(permutation_sign(p));
    }
    int a = d - 1;
    while (a >= 0 && cell[a] + 1 == spec.resolution[a]) {
      cell[a] = 0;
      --a;
    }
    if (a < 0) break;
    ++cell[a];
  }
  return t;
}

void GridCover::validate() const {
  spec.validate();
  cover.validate();
  const long n = spec.vertex_count();
  if (static_cast<long>(cover.weights.size()) != n)
    throw InputError("grid cover must weight every lattice vertex");
  for (const auto& [vertex, w] : cover.weights) {
    (void)w;
    if (vertex < 0 || vertex >= n)
      throw InputError("grid cover mentions an unknown lattice vertex");
  }
}

namespace {

std::vector<int> singular_by_support(const OrientedTriangulation& t,
                                     const WeightedCover& cover,
                                     const BalancedProfile& profile) {
  std::vector<int> out;
  for (int f = 0; f < t.facet_count(); ++f)
    if (is_balanced(profile, facet_support(t, cover, f))) out.push_back(f);
  return out;
}

struct GridContext {
  const GridCover& g;
  const PointConfig& cfg;
  OrientedTriangulation tri;
  BalancedProfile profile;
  std::vector<std::vector<int>> vertex_facets; // lattice vertex -> facet ids
  std::set<std::vector<int>> surface_ridges;   // sorted ridges with one cofacet

  GridContext(const GridCover& g_in, const PointConfig& cfg_in)
      : g(g_in), cfg(cfg_in) {
    g.validate();
    cfg.validate();
    if (g.cover.m != cfg.m())
      throw MismatchError("grid cover labels do not match configuration size");
    if (g.spec.dim != cfg.dim)
      throw InputError("grid dimension must equal the configuration dimension");
    tri = kuhn_triangulation(g.spec);
    profile = enumerate_minimal_balanced(cfg);

    vertex_facets.resize(tri.vertex_count);
    for (int f = 0; f < tri.facet_count(); ++f)
      for (int v : tri.facets[f]) vertex_facets[v].push_back(f);

    std::map<std::vector<int>, int> ridge_uses;
    for (const auto& facet : tri.facets) {
      for (std::size_t j = 0; j < facet.size(); ++j) {
        std::vector<int> ridge;
        ridge.reserve(facet.size() - 1);
        for (std::size_t i = 0; i < facet.size(); ++i)
          if (i != j) ridge.push_back(facet[i]);
        std::sort(ridge.begin(), ridge.end());
        ++ridge_uses[ridge];
      }
    }
    for (const auto& [ridge, uses] : ridge_uses)
      if (uses == 1) surface_ridges.insert(ridge);
  }

  OrientedTriangulation sub_triangulation(const std::vector<int>& facets) const {
    OrientedTriangulation sub;
    sub.dim = tri.dim;
    sub.vertex_count = tri.vertex_count;
    for (int f : facets) {
      sub.facets.push_back(tri.facets[f]);
      sub.signs.push_back(tri.sign(f));
    }
    return sub;
  }

  std::vector<int> star(const std::vector<int>& facets) const {
    std::set<int> vertices;
    for (int f : facets)
      for (int v : tri.facets[f]) vertices.insert(v);
    std::set<int> out;
    for (int v : vertices)
      for (int f : vertex_facets[v]) out.insert(f);
    return {out.begin(), out.end()};
  }

  void check_contact(const OrientedTriangulation& boundary) const {
    for (const auto& ridge : boundary.facets) {
      std::vector<int> key = ridge;
      std::sort(key.begin(), key.end());
      if (surface_ridges.count(key))
        throw BoundaryContactError(
            "a singular component's neighborhood reaches the box surface");
    }
  }

  /// Grow a facet set until the boundary of its one-ring closure is a
  /// coherent closed manifold; the result strictly contains the seed.
  std::vector<int> grow(const std::vector<int>& seed) const {
    std::vector<int> hood = star(seed);
    for (int ring = 0; ring < kMaxGridRings; ++ring) {
      const OrientedTriangulation boundary = boundary_of(sub_triangulation(hood));
      check_contact(boundary);
      if (orientation_coherence_check(boundary)) return hood;
      hood = star(hood);
    }
    throw CapacityError("neighborhood growth did not stabilize");
  }
};

} // namespace

SingularReport singular_facets(const GridCover& g, const PointConfig& cfg) {
  GridContext ctx(g, cfg);
  SingularReport report;
  report.by_support = singular_by_support(ctx.tri, g.cover, ctx.profile);
  for (int f = 0; f < ctx.tri.facet_count(); ++f) {
    std::vector<RationalVector> images;
    for (int v : ctx.tri.facets[f]) {
      const RationalVector& w = g.cover.at(v);
      RationalVector q(cfg.dim, Rational(0));
      for (int i = 0; i < cfg.m(); ++i) {
        if (sign_of(w[i]) == 0) continue;
        for (int c = 0; c < cfg.dim; ++c) q[c] += w[i] * cfg.points[i][c];
      }
      images.push_back(std::move(q));
    }
    if (conv_membership(images, cfg.r).inside()) report.by_image.push_back(f);
  }
  return report;
}

std::vector<ComponentIndex> components(const GridCover& g, const PointConfig& cfg,
                                       std::uint64_t seed) {
  GridContext ctx(g, cfg);
  const std::vector<int> singular = singular_by_support(ctx.tri, g.cover, ctx.profile);
  if (singular.empty()) return {};

  // Union singular facets that share a lattice vertex.
  std::map<int, int> position; // facet id -> index into `singular`
  for (std::size_t i = 0; i < singular.size(); ++i)
    position[singular[i]] = static_cast<int>(i);
  std::vector<int> parent(singular.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  std::map<int, int> last_at_vertex;
  for (std::size_t i = 0; i < singular.size(); ++i) {
    for (int v : ctx.tri.facets[singular[i]]) {
      const auto it = last_at_vertex.find(v);
      if (it != last_at_vertex.end()) unite(static_cast<int>(i), it->second);
      last_at_vertex[v] = static_cast<int>(i);
    }
  }

  std::vector<std::vector<int>> regions;
  {
    std::map<int, std::vector<int>> by_root;
    for (std::size_t i = 0; i < singular.size(); ++i)
      by_root[find(static_cast<int>(i))].push_back(singular[i]);
    for (auto& [root, facets] : by_root) regions.push_back(std::move(facets));
    std::sort(regions.begin(), regions.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
  }

  // Grow every region's neighborhood; merge regions whose neighborhoods
  // share a facet and start over until no merge happens.
  std::vector<std::vector<int>> hoods;
  for (int round = 0;; ++round) {
    if (round > static_cast<int>(singular.size()) + 1)
      throw CapacityError("component merging did not stabilize");
    hoods.clear();
    for (const auto& region : regions) hoods.push_back(ctx.grow(region));

    int merge_a = -1, merge_b = -1;
    std::map<int, int> owner;
    for (std::size_t i = 0; i < hoods.size() && merge_a < 0; ++i) {
      for (int f : hoods[i]) {
        const auto it = owner.find(f);
        if (it != owner.end()) {
          merge_a = it->second;
          merge_b = static_cast<int>(i);
          break;
        }
        owner[f] = static_cast<int>(i);
      }
    }
    if (merge_a < 0) break;

    std::vector<int> merged;
    std::set_union(regions[merge_a].begin(), regions[merge_a].end(),
                   regions[merge_b].begin(), regions[merge_b].end(),
                   std::back_inserter(merged));
    regions[merge_a] = std::move(merged);
    regions.erase(regions.begin() + merge_b);
    std::sort(regions.begin(), regions.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
  }

  std::vector<ComponentIndex> out;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    ComponentIndex comp;
    comp.singular = regions[i];
    comp.neighborhood = hoods[i];
    comp.boundary =
        degree(boundary_of(ctx.sub_triangulation(hoods[i])), g.cover, cfg, seed);
    if (comp.boundary.status != DegreeStatus::Ok)
      throw TheoremViolationError(
          "a neighborhood boundary met a balanced support despite being built "
          "from non-singular facets");
    out.push_back(std::move(comp));
  }
  return out;
}

AdditivityReport additivity_check(const GridCover& g, const PointConfig& cfg,
                                  std::uint64_t seed) {
  AdditivityReport report;
  report.parts = components(g, cfg, seed);

  GridContext ctx(g, cfg);
  report.outer = degree(boundary_of(ctx.tri), g.cover, cfg, seed);
  if (report.outer.status != DegreeStatus::Ok)
    throw TheoremViolationError(
        "the box surface met a balanced support although every singular "
        "component is interior");

  for (const auto& part : report.parts) report.index_sum += part.boundary.degree;
  if (report.index_sum != report.outer.degree)
    throw TheoremViolationError(
        "index additivity failed: surface degree " +
        std::to_string(report.outer.degree) + " != component sum " +
        std::to_string(report.index_sum));
  return report;
}

GridCover grid_constant(const GridSpec& spec, int m, int color) {
  spec.validate();
  if (m < 1) throw InputError("need at least one label");
  if (color < 0 || color >= m) throw InputError("constant color out of range");
  std::map<int, int> colors;
  for (long v = 0; v < spec.vertex_count(); ++v) colors[static_cast<int>(v)] = color;
  return GridCover{spec, cover_from_colors(m, colors)};
}

namespace {

struct SectorAssigner {
  std::vector<int> order;            // configuration indices, CCW
  std::vector<RationalVector> dirs;  // matching directions from r

  explicit SectorAssigner(const PointConfig& cfg) {
    order = angular_order(cfg);
    for (int i : order)
      dirs.push_back({cfg.points[i][0] - cfg.r[0], cfg.points[i][1] - cfg.r[1]});
  }

  // Counterclockwise-from-positive-x comparison of nonzero directions:
  // -1 when a is strictly earlier than b, 0 for equal directions.
  static int compare(const RationalVector& a, const RationalVector& b) {
    const auto half = [](const RationalVector& u) {
      return (sign_of(u[1]) > 0 || (sign_of(u[1]) == 0 && sign_of(u[0]) > 0)) ? 0
                                                                              : 1;
    };
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb ? -1 : 1;
    const int cross = sign_of(a[0] * b[1] - a[1] * b[0]);
    if (cross != 0) return cross > 0 ? -1 : 1;
    return 0;
  }

  /// The configuration label whose half-open angular sector [dir_j, dir_{j+1})
  /// contains u; zero directions fall back to the angularly first label.
  int color_of(const RationalVector& u) const {
    if (sign_of(u[0]) == 0 && sign_of(u[1]) == 0) return order[0];
    if (compare(u, dirs[0]) < 0) return order.back();
    int best = 0;
    for (std::size_t j = 1; j < dirs.size(); ++j)
      if (compare(dirs[j], u) <= 0) best = static_cast<int>(j);
    return order[best];
  }
};

GridCover sector_cover(const GridSpec& spec, const PointConfig& cfg,
                       const std::function<RationalVector(const RationalVector&)>& field) {
  spec.validate();
  cfg.validate();
  if (spec.dim != 2 || cfg.dim != 2)
    throw InputError("sector construction needs a two-dimensional grid and "
                     "configuration");
  const SectorAssigner sectors(cfg);
  std::map<int, int> colors;
  for (long v = 0; v < spec.vertex_count(); ++v) {
    const RationalVector x = grid_vertex_coords(spec, static_cast<int>(v));
    colors[static_cast<int>(v)] = sectors.color_of(field(x));
  }
  return GridCover{spec, cover_from_colors(cfg.m(), colors)};
}

} // namespace

GridCover grid_vortex(const GridSpec& spec, const PointConfig& cfg,
                      const RationalVector& center) {
  if (center.size() != 2) throw InputError("vortex center must be two-dimensional");
  return sector_cover(spec, cfg, [&](const RationalVector& x) {
    return RationalVector{x[0] - center[0], x[1] - center[1]};
  });
}

GridCover grid_bivortex(const GridSpec& spec, const PointConfig& cfg,
                        const RationalVector& c1, const RationalVector& c2,
                        bool conjugate_second) {
  if (c1.size() != 2 || c2.size() != 2)
    throw InputError("vortex centers must be two-dimensional");
  return sector_cover(spec, cfg, [&](const RationalVector& x) {
    const Rational a = x[0] - c1[0], b = x[1] - c1[1];
    const Rational p = x[0] - c2[0], q = x[1] - c2[1];
    if (conjugate_second)
      return RationalVector{a * p + b * q, b * p - a * q};
    return RationalVector{a * p - b * q, a * q + b * p};
  });
}

namespace {

double to_double(const Rational& x) { return mpq_class(x).get_d(); }

std::string fmt(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.4f", x);
  return buffer;
}

} // namespace

std::string render_components_svg(const GridCover& g, const PointConfig& cfg,
                                  const std::vector<ComponentIndex>& comps) {
  g.validate();
  if (g.spec.dim != 2) throw InputError("picture output needs a 2D grid");
  (void)cfg;

  static const char* kStrong[] = {"#c0392b", "#2e6da4", "#27823b",
                                  "#b9770e", "#7d3c98", "#117a8b"};
  static const char* kLight[] = {"#f5b7b1", "#aed6f1", "#a9dfbf",
                                 "#fad7a0", "#d7bde2", "#a3e4d7"};

  const double x0 = to_double(g.spec.lower[0]), x1 = to_double(g.spec.upper[0]);
  const double y0 = to_double(g.spec.lower[1]), y1 = to_double(g.spec.upper[1]);
  const double width = 800.0, pad = 20.0;
  const double scale = width / (x1 - x0);
  const double height = (y1 - y0) * scale;
  const auto px = [&](double x) { return pad + (x - x0) * scale; };
  const auto py = [&](double y) { return pad + (y1 - y) * scale; };

  const OrientedTriangulation tri = kuhn_triangulation(g.spec);
  std::vector<int> role(tri.facet_count(), -1); // 2k = singular, 2k+1 = hood
  for (std::size_t k = 0; k < comps.size(); ++k) {
    for (int f : comps[k].neighborhood) role[f] = 2 * static_cast<int>(k) + 1;
  }
  for (std::size_t k = 0; k < comps.size(); ++k) {
    for (int f : comps[k].singular) role[f] = 2 * static_cast<int>(k);
  }

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         fmt(width + 2 * pad) + "\" height=\"" + fmt(height + 2 * pad) +
         "\" viewBox=\"0 0 " + fmt(width + 2 * pad) + " " +
         fmt(height + 2 * pad) + "\">\n";
  for (int f = 0; f < tri.facet_count(); ++f) {
    std::string points;
    for (int v : tri.facets[f]) {
      const RationalVector c = grid_vertex_coords(g.spec, v);
      if (!points.empty()) points += " ";
      points += fmt(px(to_double(c[0]))) + "," + fmt(py(to_double(c[1])));
    }
    const char* fill = "#fdfdfd";
    if (role[f] >= 0) {
      const int comp = role[f] / 2;
      fill = role[f] % 2 == 0 ? kStrong[comp % 6] : kLight[comp % 6];
    }
    svg += "  <polygon points=\"" + points + "\" fill=\"" + fill +
           "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
  }
  for (std::size_t k = 0; k < comps.size(); ++k) {
    double cx = 0, cy = 0;
    long count = 0;
    for (int f : comps[k].singular) {
      for (int v : tri.facets[f]) {
        const RationalVector c = grid_vertex_coords(g.spec, v);
        cx += to_double(c[0]);
        cy += to_double(c[1]);
        ++count;
      }
    }
    cx /= count;
    cy /= count;
    const int index = comps[k].boundary.degree;
    const std::string label = (index >= 0 ? "+" : "") + std::to_string(index);
    svg += "  <text x=\"" + fmt(px(cx)) + "\" y=\"" + fmt(py(cy)) +
           "\" font-size=\"16\" font-family=\"monospace\" text-anchor=\"middle\" "
           "fill=\"#111111\">" +
           label + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

} // namespace balcov
