// Command-line front end: every subcommand reads JSON inputs, runs the
// exact-arithmetic core, and prints a deterministic JSON (or CSV) report to
// stdout. Timing goes to stderr so reruns are byte-identical.
//
// Exit codes: 0 success, 2 invalid input, 3 capacity/genericity limit,
// 4 failed consistency check, 64 usage error.

#include "balcov/errors.hpp"
#include "balcov/json_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace {

using balcov::Json;

struct Inputs {
  balcov::RunManifest manifest;
  std::map<std::string, std::string> raw; // flag name -> file bytes

  std::string load(const std::string& name, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw balcov::InputError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    raw[name] = buffer.str();
    manifest.input_digests[name] = balcov::fnv1a64_hex(raw[name]);
    return raw[name];
  }

  Json load_json(const std::string& name, const std::string& path) {
    const std::string text = load(name, path);
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw balcov::InputError(name + ": " + e.what());
    }
  }
};

std::map<int, int> coloring_of(const balcov::WeightedCover& cover) {
  std::map<int, int> colors;
  for (const auto& [vertex, weights] : cover.weights) {
    int color = -1;
    for (int i = 0; i < cover.m; ++i) {
      if (balcov::sign_of(weights[i]) == 0) continue;
      if (weights[i] != 1 || color != -1)
        throw balcov::InputError("cover is not a coloring at vertex " +
                                 std::to_string(vertex + 1));
      color = i;
    }
    colors[vertex] = color;
  }
  return colors;
}

std::string join_external(const std::vector<int>& zero_based) {
  std::string out;
  for (int v : zero_based) {
    if (!out.empty()) out += " ";
    out += std::to_string(v + 1);
  }
  return out;
}

std::string join_mask(balcov::IndexMask mask) {
  return join_external(balcov::mask_to_indices(mask));
}

void emit_json(const balcov::RunManifest& manifest, Json payload) {
  Json out;
  out["manifest"] = balcov::manifest_to_json(manifest);
  out.update(payload);
  std::cout << out.dump(2) << "\n";
}

[[noreturn]] void no_csv() {
  throw balcov::InputError("csv output is not available for this subcommand");
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  ~Timer() {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    std::fprintf(stderr, "[time] %lld ms\n", static_cast<long long>(ms));
  }
};

} // namespace

int run(int argc, char** argv) {
  CLI::App app{"Exact tools for balanced point families, their non-balanced "
               "complex, mapping degrees of weighted covers, and local indices "
               "on sampled grids"};
  app.require_subcommand(1);

  std::string config_path, config_b_path, complex_path, triangulation_path,
      cover_path, grid_path, svg_path, format = "json";
  std::uint64_t seed = 0;
  bool up_to_permutation = false;
  int circle_k = 0;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };
  const auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Random seed for ray directions");
  };

  CLI::App* balanced = app.add_subcommand(
      "balanced", "Minimal balanced subsets of a point configuration");
  balanced->add_option("--config", config_path)->required();
  add_format(balanced);

  CLI::App* complex_cmd = app.add_subcommand(
      "complex", "Facets of the complex of non-balanced subsets");
  complex_cmd->add_option("--config", config_path)->required();
  add_format(complex_cmd);

  CLI::App* homology = app.add_subcommand(
      "homology", "Reduced integral homology (with the sphere/cone dichotomy "
                  "check when a configuration is given)");
  homology->add_option("--config", config_path);
  homology->add_option("--complex", complex_path);
  add_format(homology);

  CLI::App* equiv = app.add_subcommand(
      "equiv", "Compare the minimal balanced families of two configurations");
  equiv->add_option("--config", config_path)->required();
  equiv->add_option("--config-b", config_b_path)->required();
  equiv->add_flag("--up-to-permutation", up_to_permutation,
                  "Allow a relabeling of the points");
  add_format(equiv);

  CLI::App* degree_cmd = app.add_subcommand(
      "degree", "Mapping degree of a weighted cover on a closed oriented "
                "triangulation");
  degree_cmd->add_option("--config", config_path)->required();
  degree_cmd->add_option("--triangulation", triangulation_path)->required();
  degree_cmd->add_option("--cover", cover_path)->required();
  add_seed(degree_cmd);
  add_format(degree_cmd);

  CLI::App* make_circle = app.add_subcommand(
      "make-circle", "Build a colored cycle of prescribed degree (dim 2)");
  make_circle->add_option("--config", config_path)->required();
  make_circle->add_option("--k", circle_k, "Target degree")->required();
  add_seed(make_circle);
  add_format(make_circle);

  CLI::App* sperner = app.add_subcommand(
      "sperner", "Carrier-admissibility and fully multicolored facets of a "
                 "colored subdivision");
  sperner->add_option("--triangulation", triangulation_path)->required();
  sperner->add_option("--cover", cover_path)->required();
  add_format(sperner);

  CLI::App* kkm = app.add_subcommand(
      "kkm", "Boundary-degree obstruction for a carrier-subordinate cover "
             "over the reference labels");
  kkm->add_option("--triangulation", triangulation_path)->required();
  kkm->add_option("--cover", cover_path)->required();
  add_seed(kkm);
  add_format(kkm);

  CLI::App* kkms = app.add_subcommand(
      "kkms", "Balanced-subfamily witness for a cover over the nonempty "
              "label subsets");
  kkms->add_option("--triangulation", triangulation_path)->required();
  kkms->add_option("--cover", cover_path)->required();
  add_seed(kkms);
  add_format(kkms);

  CLI::App* theorem_b = app.add_subcommand(
      "theorem-b", "Boundary-degree obstruction on a triangulated ball: a "
                   "nonzero boundary degree forces a facet with balanced "
                   "support");
  theorem_b->add_option("--config", config_path)->required();
  theorem_b->add_option("--triangulation", triangulation_path)->required();
  theorem_b->add_option("--cover", cover_path)->required();
  add_seed(theorem_b);
  add_format(theorem_b);

  CLI::App* index = app.add_subcommand(
      "index", "Local indices of singular components on a sampled grid and "
               "their sum against the box-surface degree");
  index->add_option("--grid", grid_path)->required();
  index->add_option("--config", config_path)->required();
  index->add_option("--emit-svg", svg_path, "Write a 2D picture to this path");
  add_seed(index);
  add_format(index);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  }

  Timer timer;
  Inputs inputs;
  CLI::App* active = app.get_subcommands().front();
  inputs.manifest.subcommand = active->get_name();
  inputs.manifest.seed = seed;
  const bool csv = format == "csv";

  if (active == balanced) {
    const auto cfg = balcov::config_from_json(inputs.load_json("config", config_path));
    const auto profile = balcov::enumerate_minimal_balanced(cfg);
    if (csv) {
      std::cout << "minimal_balanced\n";
      for (balcov::IndexMask member : profile.minimal_balanced)
        std::cout << join_mask(member) << "\n";
    } else {
      emit_json(inputs.manifest, Json{{"profile", profile_to_json(profile)}});
    }
  } else if (active == complex_cmd) {
    const auto cfg = balcov::config_from_json(inputs.load_json("config", config_path));
    const auto complex = balcov::nonbalanced_complex(cfg);
    if (csv) {
      std::cout << "facets\n";
      for (balcov::IndexMask facet : complex.facets)
        std::cout << join_mask(facet) << "\n";
    } else {
      emit_json(inputs.manifest, Json{{"complex", complex_to_json(complex)}});
    }
  } else if (active == homology) {
    if (config_path.empty() == complex_path.empty())
      throw balcov::InputError("homology needs exactly one of --config and --complex");
    Json payload;
    balcov::SimplicialComplex complex;
    if (!complex_path.empty()) {
      complex = balcov::complex_from_json(inputs.load_json("complex", complex_path));
    } else {
      const auto cfg =
          balcov::config_from_json(inputs.load_json("config", config_path));
      complex = balcov::nonbalanced_complex(cfg);
      const int rank = balcov::affine_rank(cfg.points);
      const bool relint = balcov::relint_membership(cfg.points, cfg.r);
      const auto apex = balcov::cone_apex_detect(complex);
      payload["rank"] = rank;
      payload["relint"] = relint;
      payload["cone_apex"] = apex ? Json(*apex + 1) : Json();
      const auto result = balcov::reduced_homology(complex);
      const bool ok = relint ? balcov::verify_sphere_homology(complex, rank)
                             : (result.trivial() && apex.has_value());
      payload["dichotomy_ok"] = ok;
      payload["complex"] = complex_to_json(complex);
      payload["homology"] = homology_to_json(result);
      if (!ok)
        throw balcov::TheoremViolationError(
            relint ? "interior base point but the complex is not a homology "
                     "sphere of the expected rank"
                   : "non-interior base point but the complex is not a cone "
                     "with trivial reduced homology");
      if (csv) no_csv();
      emit_json(inputs.manifest, payload);
      return 0;
    }
    const auto result = balcov::reduced_homology(complex);
    if (csv) {
      std::cout << "degree,betti,torsion\n";
      for (const auto& g : result.groups) {
        std::cout << g.degree << "," << g.betti << ",";
        std::string torsion;
        for (const auto& t : g.torsion) {
          if (!torsion.empty()) torsion += " ";
          torsion += t.get_str();
        }
        std::cout << torsion << "\n";
      }
    } else {
      payload["complex"] = complex_to_json(complex);
      payload["homology"] = homology_to_json(result);
      emit_json(inputs.manifest, payload);
    }
  } else if (active == equiv) {
    const auto cfg_a = balcov::config_from_json(inputs.load_json("config", config_path));
    const auto cfg_b =
        balcov::config_from_json(inputs.load_json("config_b", config_b_path));
    const auto profile_a = balcov::enumerate_minimal_balanced(cfg_a);
    const auto profile_b = balcov::enumerate_minimal_balanced(cfg_b);
    const bool equivalent =
        up_to_permutation ? balcov::bs_equivalent_up_to_permutation(profile_a, profile_b)
                          : balcov::bs_equivalent(profile_a, profile_b);
    if (csv) {
      std::cout << "equivalent\n" << (equivalent ? "true" : "false") << "\n";
    } else {
      emit_json(inputs.manifest,
                Json{{"equivalent", equivalent},
                     {"up_to_permutation", up_to_permutation},
                     {"profile_a", profile_to_json(profile_a)},
                     {"profile_b", profile_to_json(profile_b)}});
    }
  } else if (active == degree_cmd) {
    const auto cfg = balcov::config_from_json(inputs.load_json("config", config_path));
    const auto tri = balcov::triangulation_from_json(
        inputs.load_json("triangulation", triangulation_path));
    const auto cover = balcov::cover_from_json(inputs.load_json("cover", cover_path));
    const auto result = balcov::degree(tri, cover, cfg, seed);
    if (csv) no_csv();
    emit_json(inputs.manifest, Json{{"result", degree_to_json(result)}});
  } else if (active == make_circle) {
    const auto cfg = balcov::config_from_json(inputs.load_json("config", config_path));
    const auto instance = balcov::construct_degree_k_circle(cfg, circle_k);
    const auto check = balcov::degree(instance.tri, instance.cover, cfg, seed);
    if (check.status != balcov::DegreeStatus::Ok || check.degree != circle_k)
      throw balcov::TheoremViolationError(
          "constructed cycle does not have the requested degree");
    if (csv) no_csv();
    emit_json(inputs.manifest,
              Json{{"triangulation", triangulation_to_json(instance.tri)},
                   {"cover", cover_to_json(instance.cover)},
                   {"degree", circle_k}});
  } else if (active == sperner) {
    const auto labeled = balcov::labeled_triangulation_from_json(
        inputs.load_json("triangulation", triangulation_path));
    const auto cover = balcov::cover_from_json(inputs.load_json("cover", cover_path));
    if (cover.m != labeled.n)
      throw balcov::MismatchError("coloring labels do not match the reference labels");
    const auto colors = coloring_of(cover);
    const bool admissible = balcov::check_sperner(labeled, colors);
    const auto rainbow = balcov::find_rainbow(labeled, colors);
    if (csv) no_csv();
    emit_json(inputs.manifest,
              Json{{"admissible", admissible}, {"rainbow", rainbow_to_json(rainbow)}});
  } else if (active == kkm) {
    const auto labeled = balcov::labeled_triangulation_from_json(
        inputs.load_json("triangulation", triangulation_path));
    const auto cover = balcov::cover_from_json(inputs.load_json("cover", cover_path));
    const auto result = balcov::kkm_check(labeled, cover, seed);
    if (csv) no_csv();
    emit_json(inputs.manifest, Json{{"result", obstruction_to_json(result)}});
  } else if (active == kkms) {
    balcov::KkmsInstance instance;
    instance.labeled = balcov::labeled_triangulation_from_json(
        inputs.load_json("triangulation", triangulation_path));
    instance.cover = balcov::cover_from_json(inputs.load_json("cover", cover_path));
    const auto witness = balcov::kkms_witness(instance);
    const auto boundary = balcov::kkms_boundary_degree(instance, seed);
    if (csv) no_csv();
    emit_json(inputs.manifest, Json{{"witness", kkms_witness_to_json(witness)},
                                    {"boundary", degree_to_json(boundary)}});
  } else if (active == theorem_b) {
    const auto cfg = balcov::config_from_json(inputs.load_json("config", config_path));
    const auto ball = balcov::triangulation_from_json(
        inputs.load_json("triangulation", triangulation_path));
    const auto cover = balcov::cover_from_json(inputs.load_json("cover", cover_path));
    const auto result = balcov::theorem_b_check(ball, cover, cfg, seed);
    if (csv) no_csv();
    emit_json(inputs.manifest, Json{{"result", obstruction_to_json(result)}});
  } else if (active == index) {
    const auto grid = balcov::grid_cover_from_json(inputs.load_json("grid", grid_path));
    const auto cfg = balcov::config_from_json(inputs.load_json("config", config_path));
    const auto singular = balcov::singular_facets(grid, cfg);
    const auto report = balcov::additivity_check(grid, cfg, seed);
    if (!svg_path.empty()) {
      std::ofstream out(svg_path, std::ios::binary);
      if (!out) throw balcov::InputError("cannot write picture to " + svg_path);
      out << balcov::render_components_svg(grid, cfg, report.parts);
    }
    if (csv) {
      std::cout << "component,index,singular_facets,neighborhood_size\n";
      for (std::size_t i = 0; i < report.parts.size(); ++i) {
        std::cout << i + 1 << "," << report.parts[i].boundary.degree << ","
                  << join_external(report.parts[i].singular) << ","
                  << report.parts[i].neighborhood.size() << "\n";
      }
      std::cout << "outer," << report.outer.degree << ",,\n";
    } else {
      emit_json(inputs.manifest,
                Json{{"grid", grid_spec_to_json(grid.spec)},
                     {"singular", singular_report_to_json(singular)},
                     {"additivity", additivity_to_json(report)}});
    }
  }
  return 0;
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const balcov::TheoremViolationError& e) {
    std::cerr << "consistency check failed: " << e.what() << "\n";
    return 4;
  } catch (const balcov::CapacityError& e) {
    std::cerr << "capacity limit: " << e.what() << "\n";
    return 3;
  } catch (const balcov::GenericityError& e) {
    std::cerr << "genericity limit: " << e.what() << "\n";
    return 3;
  } catch (const balcov::OracleError& e) {
    std::cerr << "oracle degeneracy: " << e.what() << "\n";
    return 3;
  } catch (const balcov::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
