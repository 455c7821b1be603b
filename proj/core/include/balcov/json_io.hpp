#pragma once

#include "balcov/applications.hpp"
#include "balcov/balanced.hpp"
#include "balcov/complex.hpp"
#include "balcov/config.hpp"
#include "balcov/cover.hpp"
#include "balcov/degree.hpp"
#include "balcov/geometry.hpp"
#include "balcov/grid.hpp"
#include "balcov/homology.hpp"
#include "balcov/manifest.hpp"
#include "balcov/subdivision.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace balcov {

using Json = nlohmann::json;

// All wire formats use 1-based vertex/point/facet/label indices and exact
// rationals written as "p" or "p/q" strings (plain JSON integers are also
// accepted on input). Parsers throw InputError naming the offending field.

Rational rational_from_json(const Json& j, const std::string& where);
Json rational_to_json(const Rational& x);

PointConfig config_from_json(const Json& j);
Json config_to_json(const PointConfig& cfg);

SimplicialComplex complex_from_json(const Json& j); // facets are normalized
Json complex_to_json(const SimplicialComplex& c);

OrientedTriangulation triangulation_from_json(const Json& j);
Json triangulation_to_json(const OrientedTriangulation& t);

WeightedCover cover_from_json(const Json& j); // "weights" or "colors"
Json cover_to_json(const WeightedCover& cover);

CarrierLabeledTriangulation labeled_triangulation_from_json(const Json& j);
Json labeled_triangulation_to_json(const CarrierLabeledTriangulation& lt);

/// Vertex colorings: {"1": 2, ...}, both sides 1-based, labels up to n.
std::map<int, int> colors_from_json(const Json& j, int n);

GridCover grid_cover_from_json(const Json& j);
Json grid_spec_to_json(const GridSpec& spec);

Json membership_to_json(const ConvexMembershipResult& result);
Json profile_to_json(const BalancedProfile& profile);
Json homology_to_json(const HomologyResult& h);
Json degree_to_json(const DegreeResult& d);
Json rainbow_to_json(const RainbowReport& r);
Json obstruction_to_json(const ObstructionResult& r);
Json kkms_witness_to_json(const KkmsWitness& w);
Json singular_report_to_json(const SingularReport& r);
Json components_to_json(const std::vector<ComponentIndex>& comps);
Json additivity_to_json(const AdditivityReport& report);
Json manifest_to_json(const RunManifest& manifest);

} // namespace balcov
