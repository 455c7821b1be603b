#include "balcov/json_io.hpp"

#include "balcov/errors.hpp"

#include <algorithm>

namespace balcov {

namespace {

const Json& require(const Json& j, const char* field, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  const auto it = j.find(field);
  if (it == j.end())
    throw InputError(where + ": missing field '" + std::string(field) + "'");
  return *it;
}

int int_from(const Json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw InputError(where + ": expected an integer");
  return j.get<int>();
}

const Json& array_from(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  return j;
}

RationalVector vector_from(const Json& j, const std::string& where) {
  RationalVector out;
  for (std::size_t i = 0; i < array_from(j, where).size(); ++i)
    out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i + 1) + "]"));
  return out;
}

std::vector<int> int_list_from(const Json& j, const std::string& where) {
  std::vector<int> out;
  for (std::size_t i = 0; i < array_from(j, where).size(); ++i)
    out.push_back(int_from(j[i], where + "[" + std::to_string(i + 1) + "]"));
  return out;
}

// 1-based external list -> 0-based internal list.
std::vector<int> to_internal(std::vector<int> external, const std::string& where) {
  for (int& e : external) {
    if (e < 1) throw InputError(where + ": indices are 1-based");
    --e;
  }
  return external;
}

std::vector<int> to_external(std::vector<int> internal) {
  for (int& e : internal) ++e;
  return internal;
}

Json mask_to_external(IndexMask mask) {
  return Json(to_external(mask_to_indices(mask)));
}

int vertex_key_from(const std::string& key, const std::string& where) {
  if (key.empty() || key.size() > 9 ||
      !std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw InputError(where + ": keys must be 1-based vertex numbers, got '" + key +
                     "'");
  const int value = std::stoi(key);
  if (value < 1) throw InputError(where + ": keys must be 1-based vertex numbers");
  return value - 1;
}

Json integer_to_json(const Integer& x) { return Json(x.get_str()); }

Json integer_vector_to_json(const std::vector<Integer>& xs) {
  Json out = Json::array();
  for (const Integer& x : xs) out.push_back(integer_to_json(x));
  return out;
}

Json vector_to_json(const RationalVector& xs) {
  Json out = Json::array();
  for (const Rational& x : xs) out.push_back(rational_to_json(x));
  return out;
}

WeightedCover cover_from_weight_fields(const Json& j, const std::string& where) {
  const int m = int_from(require(j, "m", where), where + ".m");
  const bool has_weights = j.is_object() && j.contains("weights");
  const bool has_colors = j.is_object() && j.contains("colors");
  if (has_weights == has_colors)
    throw InputError(where + ": need exactly one of 'weights' and 'colors'");

  if (has_weights) {
    const Json& weights = j["weights"];
    if (!weights.is_object())
      throw InputError(where + ".weights: expected an object");
    WeightedCover cover;
    cover.m = m;
    for (const auto& [key, value] : weights.items()) {
      const int vertex = vertex_key_from(key, where + ".weights");
      cover.weights[vertex] =
          vector_from(value, where + ".weights['" + key + "']");
    }
    cover.validate();
    return cover;
  }

  const Json& colors = j["colors"];
  if (!colors.is_object()) throw InputError(where + ".colors: expected an object");
  std::map<int, int> parsed;
  for (const auto& [key, value] : colors.items()) {
    const int vertex = vertex_key_from(key, where + ".colors");
    const int color = int_from(value, where + ".colors['" + key + "']");
    if (color < 1 || color > m)
      throw InputError(where + ".colors['" + key + "']: label out of range");
    parsed[vertex] = color - 1;
  }
  return cover_from_colors(m, parsed);
}

} // namespace

Rational rational_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
      return parse_rational(std::to_string(j.get<long long>()));
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a rational as \"p/q\" string or integer");
}

Json rational_to_json(const Rational& x) { return Json(format_rational(x)); }

PointConfig config_from_json(const Json& j) {
  PointConfig cfg;
  cfg.dim = int_from(require(j, "dim", "config"), "config.dim");
  const Json& points = array_from(require(j, "points", "config"), "config.points");
  for (std::size_t i = 0; i < points.size(); ++i)
    cfg.points.push_back(
        vector_from(points[i], "config.points[" + std::to_string(i + 1) + "]"));
  cfg.r = vector_from(require(j, "r", "config"), "config.r");
  cfg.validate();
  return cfg;
}

Json config_to_json(const PointConfig& cfg) {
  Json points = Json::array();
  for (const RationalVector& p : cfg.points) points.push_back(vector_to_json(p));
  return Json{{"dim", cfg.dim}, {"points", points}, {"r", vector_to_json(cfg.r)}};
}

SimplicialComplex complex_from_json(const Json& j) {
  const int vertex_count =
      int_from(require(j, "vertex_count", "complex"), "complex.vertex_count");
  const Json& facets = array_from(require(j, "facets", "complex"), "complex.facets");
  std::vector<IndexMask> masks;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const std::string where = "complex.facets[" + std::to_string(i + 1) + "]";
    masks.push_back(
        indices_to_mask(to_internal(int_list_from(facets[i], where), where),
                        vertex_count));
  }
  return make_complex(vertex_count, std::move(masks));
}

Json complex_to_json(const SimplicialComplex& c) {
  Json facets = Json::array();
  for (IndexMask f : c.facets) facets.push_back(mask_to_external(f));
  return Json{{"vertex_count", c.vertex_count}, {"facets", facets}};
}

OrientedTriangulation triangulation_from_json(const Json& j) {
  OrientedTriangulation t;
  t.dim = int_from(require(j, "dim", "triangulation"), "triangulation.dim");
  t.vertex_count = int_from(require(j, "vertex_count", "triangulation"),
                            "triangulation.vertex_count");
  const Json& facets =
      array_from(require(j, "facets", "triangulation"), "triangulation.facets");
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const std::string where = "triangulation.facets[" + std::to_string(i + 1) + "]";
    t.facets.push_back(to_internal(int_list_from(facets[i], where), where));
  }
  if (j.contains("signs")) {
    t.signs = int_list_from(j["signs"], "triangulation.signs");
    for (int s : t.signs)
      if (s != 1 && s != -1)
        throw InputError("triangulation.signs: entries must be 1 or -1");
  }
  t.validate();
  return t;
}

Json triangulation_to_json(const OrientedTriangulation& t) {
  Json facets = Json::array();
  Json signs = Json::array();
  for (int f = 0; f < t.facet_count(); ++f) {
    facets.push_back(Json(to_external(t.facets[f])));
    signs.push_back(t.sign(f));
  }
  return Json{{"dim", t.dim},
              {"vertex_count", t.vertex_count},
              {"facets", facets},
              {"signs", signs}};
}

WeightedCover cover_from_json(const Json& j) {
  return cover_from_weight_fields(j, "cover");
}

Json cover_to_json(const WeightedCover& cover) {
  Json weights = Json::object();
  for (const auto& [vertex, w] : cover.weights)
    weights[std::to_string(vertex + 1)] = vector_to_json(w);
  return Json{{"m", cover.m}, {"weights", weights}};
}

CarrierLabeledTriangulation labeled_triangulation_from_json(const Json& j) {
  CarrierLabeledTriangulation lt;
  lt.n = int_from(require(j, "n", "labeled"), "labeled.n");
  lt.tri = triangulation_from_json(require(j, "triangulation", "labeled"));
  const Json& carriers =
      array_from(require(j, "carriers", "labeled"), "labeled.carriers");
  for (std::size_t i = 0; i < carriers.size(); ++i) {
    const std::string where = "labeled.carriers[" + std::to_string(i + 1) + "]";
    lt.carriers.push_back(
        indices_to_mask(to_internal(int_list_from(carriers[i], where), where),
                        lt.n));
  }
  lt.validate();
  return lt;
}

Json labeled_triangulation_to_json(const CarrierLabeledTriangulation& lt) {
  Json carriers = Json::array();
  for (IndexMask c : lt.carriers) carriers.push_back(mask_to_external(c));
  return Json{{"n", lt.n},
              {"triangulation", triangulation_to_json(lt.tri)},
              {"carriers", carriers}};
}

std::map<int, int> colors_from_json(const Json& j, int n) {
  if (!j.is_object()) throw InputError("colors: expected an object");
  std::map<int, int> out;
  for (const auto& [key, value] : j.items()) {
    const int vertex = vertex_key_from(key, "colors");
    const int color = int_from(value, "colors['" + key + "']");
    if (color < 1 || color > n)
      throw InputError("colors['" + key + "']: label out of range");
    out[vertex] = color - 1;
  }
  return out;
}

GridCover grid_cover_from_json(const Json& j) {
  GridCover g;
  g.spec.dim = int_from(require(j, "dim", "grid"), "grid.dim");
  g.spec.resolution =
      int_list_from(require(j, "resolution", "grid"), "grid.resolution");
  g.spec.lower = vector_from(require(j, "lower", "grid"), "grid.lower");
  g.spec.upper = vector_from(require(j, "upper", "grid"), "grid.upper");
  g.spec.validate();
  g.cover = cover_from_weight_fields(j, "grid");
  g.validate();
  return g;
}

Json grid_spec_to_json(const GridSpec& spec) {
  return Json{{"dim", spec.dim},
              {"resolution", spec.resolution},
              {"lower", vector_to_json(spec.lower)},
              {"upper", vector_to_json(spec.upper)}};
}

Json membership_to_json(const ConvexMembershipResult& result) {
  if (result.inside())
    return Json{{"inside", true},
                {"coefficients",
                 vector_to_json(result.inside_certificate().coefficients)}};
  return Json{{"inside", false},
              {"direction",
               integer_vector_to_json(result.outside_certificate().direction)}};
}

Json profile_to_json(const BalancedProfile& profile) {
  Json family = Json::array();
  for (IndexMask member : profile.minimal_balanced)
    family.push_back(mask_to_external(member));
  return Json{{"m", profile.m}, {"minimal_balanced", family}};
}

Json homology_to_json(const HomologyResult& h) {
  Json groups = Json::array();
  for (const HomologyGroup& g : h.groups) {
    groups.push_back(Json{{"degree", g.degree},
                          {"betti", g.betti},
                          {"torsion", integer_vector_to_json(g.torsion)}});
  }
  return Json{{"groups", groups}};
}

Json degree_to_json(const DegreeResult& d) {
  if (d.status == DegreeStatus::BalancedSimplexFound) {
    return Json{{"status", "balanced_witness"},
                {"facet", d.witness->facet + 1},
                {"support", mask_to_external(d.witness->support)}};
  }
  Json crossings = Json::array();
  for (const RayCrossing& c : d.certificate.crossings) {
    crossings.push_back(Json{{"facet", c.facet + 1},
                             {"t", rational_to_json(c.t)},
                             {"barycentric", vector_to_json(c.barycentric)},
                             {"sign", c.sign}});
  }
  return Json{{"status", "ok"},
              {"degree", d.degree},
              {"direction", integer_vector_to_json(d.certificate.direction)},
              {"crossings", crossings}};
}

Json rainbow_to_json(const RainbowReport& r) {
  return Json{{"facets", to_external(r.facets)}, {"signed_count", r.signed_count}};
}

Json obstruction_to_json(const ObstructionResult& r) {
  Json witness;
  if (r.witness)
    witness = Json{{"facet", r.witness->facet + 1},
                   {"support", mask_to_external(r.witness->support)}};
  return Json{{"boundary", degree_to_json(r.boundary)}, {"witness", witness}};
}

Json kkms_witness_to_json(const KkmsWitness& w) {
  Json subfamily = Json::array();
  for (IndexMask subset : w.subfamily) subfamily.push_back(mask_to_external(subset));
  return Json{{"facet", w.facet + 1}, {"subfamily", subfamily}};
}

Json singular_report_to_json(const SingularReport& r) {
  return Json{{"by_support", to_external(r.by_support)},
              {"by_image", to_external(r.by_image)}};
}

Json components_to_json(const std::vector<ComponentIndex>& comps) {
  Json out = Json::array();
  for (const ComponentIndex& comp : comps) {
    out.push_back(Json{{"singular", to_external(comp.singular)},
                       {"neighborhood", to_external(comp.neighborhood)},
                       {"index", comp.boundary.degree},
                       {"boundary", degree_to_json(comp.boundary)}});
  }
  return out;
}

Json additivity_to_json(const AdditivityReport& report) {
  return Json{{"outer", degree_to_json(report.outer)},
              {"components", components_to_json(report.parts)},
              {"index_sum", report.index_sum}};
}

Json manifest_to_json(const RunManifest& manifest) {
  return Json{{"version", manifest.version},
              {"subcommand", manifest.subcommand},
              {"inputs", manifest.input_digests},
              {"seed", manifest.seed}};
}

} // namespace balcov
