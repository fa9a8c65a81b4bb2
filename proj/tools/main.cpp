// strata: command-line front end.
#include "strata/boundary.hpp"
#include "strata/elliptic.hpp"
#include "strata/fixtures.hpp"
#include "strata/json_io.hpp"
#include "strata/p1_forms.hpp"
#include "strata/residues.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace strata;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

json load_json(const std::string& arg, const std::string& what) {
  std::string text = arg;
  std::size_t first = arg.find_first_not_of(" \t\n");
  if (first == std::string::npos) throw InvalidInput(what + ": empty input");
  if (arg[first] != '{' && arg[first] != '[') {
    std::ifstream in(arg);
    if (!in) throw InvalidInput(what + ": cannot open '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(what + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_scalar_list(const json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v)
    if (x.is_structured()) return false;
  return true;
}

// Table view rendered from the JSON report.
void render_table(const json& j, std::ostream& out, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (!j.is_object()) {
    out << pad << (is_scalar_list(j) || !j.is_structured() ? scalar_text(j) : j.dump()) << "\n";
    return;
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (!v.is_structured() || is_scalar_list(v)) {
      out << pad << it.key() << ": " << scalar_text(v) << "\n";
    } else if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render_table(v, out, indent + 2);
    } else {
      out << pad << it.key() << ": (" << v.size() << ")\n";
      std::size_t k = 0;
      for (const auto& row : v) {
        out << pad << "  [" << k++ << "]\n";
        render_table(row, out, indent + 4);
      }
    }
  }
}

struct Common {
  std::string format = "json";
  std::uint64_t seed = 0;
  bool symmetrize = false;
  SearchCaps caps = SearchCaps::from_environment();
};

void emit(const json& j, const Common& c) {
  if (c.format == "table") render_table(j, std::cout);
  else std::cout << j.dump(2) << "\n";
}

std::pair<DualGraph, StratumDescriptor> read_graph(const std::string& arg) {
  return graph_from_json(load_json(arg, "--graph"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary combinatorics of strata of differentials"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", common.seed, "Seed for generic points and sampling");
  app.add_flag("--symmetrize", common.symmetrize, "Treat equal entries of mu as unordered");
  app.add_option("--cap-vertices", common.caps.max_vertices, "Search cap on vertices");
  app.add_option("--cap-edges", common.caps.max_edges, "Search cap on edges");

  std::string graph_arg, levels_arg, orders_arg, assignment_arg, base_arg;
  bool want_polys = false;

  auto* validate = app.add_subcommand("validate", "Validate a dual graph against its stratum");
  validate->add_option("--graph", graph_arg, "Graph JSON (file or inline)")->required();

  auto* levels = app.add_subcommand("levels", "Enumerate level structures");
  levels->add_option("--graph", graph_arg, "Graph JSON")->required();

  auto* twisted = app.add_subcommand("twisted", "Enumerate or check twisted types");
  twisted->add_option("--graph", graph_arg, "Graph JSON")->required();
  twisted->add_option("--orders", orders_arg, "Half-edge orders JSON; checks this type instead of enumerating");
  twisted->add_option("--levels", levels_arg, "Levels JSON; with --orders, also checks condition (3)");

  auto* residues = app.add_subcommand("residues", "Build and solve the residue system");
  residues->add_option("--graph", graph_arg, "Graph JSON")->required();
  residues->add_option("--levels", levels_arg, "Levels JSON")->required();
  residues->add_option("--orders", orders_arg, "Half-edge orders JSON")->required();
  residues->add_option("--assignment", assignment_arg, "Residue values to check: {site: \"p/q\" | [re, im]}");
  residues->add_option("--scaling-base", base_arg, "Base residues for the scaling problem");
  residues->add_flag("--polynomials", want_polys, "Report eliminated polynomial conditions");

  auto* membership = app.add_subcommand("membership", "Feasible (level graph, type) configurations on a graph");
  membership->add_option("--graph", graph_arg, "Graph JSON")->required();
  bool no_grc = false;
  membership->add_flag("--no-grc", no_grc, "Drop the global residue rows");

  int bgenus = 0, max_v = 3, max_e = 4;
  std::vector<int> bmu;
  bool keep_dominated = false;
  auto* boundary = app.add_subcommand("boundary", "Enumerate boundary loci of a stratum");
  boundary->add_option("--genus", bgenus, "Genus")->required();
  boundary->add_option("--mu", bmu, "Orders, comma separated")->required()->delimiter(',')->allow_extra_args(false);
  boundary->add_option("--max-vertices", max_v, "Vertex bound");
  boundary->add_option("--max-edges", max_e, "Edge bound");
  boundary->add_flag("--keep-dominated", keep_dominated, "Evaluate loop-dominated graphs instead of skipping them");
  boundary->add_flag("--no-grc", no_grc, "Drop the global residue rows");

  std::string support_arg, at_arg;
  std::vector<int> sample_orders;
  int trials = 100;
  auto* p1 = app.add_subcommand("p1", "Differentials on the projective line");
  p1->add_option("--support", support_arg, "[[point, order], ...]; points \"p/q\" or \"oo\"");
  p1->add_option("--sample", sample_orders, "Orders for residue sampling, comma separated")->delimiter(',')->allow_extra_args(false);
  p1->add_option("--trials", trials, "Sampling trials");

  std::string ea = "-1", eb = "0", add_arg, equiv_arg, weier_arg, torsion_arg;
  auto* elliptic = app.add_subcommand("elliptic", "Divisors on y^2 = x^3 + a x + b");
  elliptic->add_option("--a", ea, "Coefficient a as \"p/q\"");
  elliptic->add_option("--b", eb, "Coefficient b as \"p/q\"");
  elliptic->add_option("--add", add_arg, "[P, Q]");
  elliptic->add_option("--equivalent", equiv_arg, "[D1, D2]");
  elliptic->add_option("--weierstrass", weier_arg, "{\"zs\": D, \"qs\": [points]}");
  elliptic->add_option("--two-torsion", torsion_arg, "[z, q]");

  std::string fixture_name, out_dir;
  bool list_fixtures = false;
  auto* fixtures = app.add_subcommand("fixtures", "Bundled input files for the worked examples");
  fixtures->add_option("name", fixture_name, "Fixture name");
  fixtures->add_option("--out", out_dir, "Write graph/levels/orders files into this directory");
  fixtures->add_flag("--list", list_fixtures, "List fixture names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*validate) {
      auto [g, s] = read_graph(graph_arg);
      auto rep = validate_dual_graph(g, s, common.symmetrize);
      json j{{"valid", rep.ok()}, {"violations", rep.violations}};
      if (is_connected(g)) j["arithmetic_genus"] = arithmetic_genus(g);
      emit(j, common);
    } else if (*levels) {
      auto [g, s] = read_graph(graph_arg);
      json list = json::array();
      for (const auto& lg : enumerate_level_structures(g)) list.push_back(levels_to_json(lg)["levels"]);
      emit({{"count", list.size()}, {"level_graphs", list}}, common);
    } else if (*twisted) {
      auto [g, s] = read_graph(graph_arg);
      if (!orders_arg.empty()) {
        auto t = orders_from_json(load_json(orders_arg, "--orders"), g);
        auto rep = check_type(t, s, common.symmetrize);
        json j{{"check", {{"ok", rep.ok()}, {"violations", rep.violations}}}};
        auto induced = induced_partial_order(t);
        json rel = json::array();
        for (const auto& r : induced.relations)
          rel.push_back({{"upper", g.vertex_ids[static_cast<std::size_t>(r.upper)]},
                         {"lower", g.vertex_ids[static_cast<std::size_t>(r.lower)]}, {"tie", r.tie}});
        j["relation"] = rel;
        json comp = json::array();
        for (const auto& lg : induced.compatible) comp.push_back(levels_to_json(lg)["levels"]);
        j["compatible_level_graphs"] = comp;
        if (!levels_arg.empty())
          j["condition3"] = check_condition3(levels_from_json(load_json(levels_arg, "--levels"), g), t);
        emit(j, common);
      } else {
        auto vr = validate_dual_graph(g, s, common.symmetrize);
        if (!vr.ok()) throw InvalidInput("graph does not validate: " + vr.violations.front());
        json list = json::array();
        for (const auto& t : enumerate_twisted_types(g, s)) {
          json comp = json::array();
          for (const auto& lg : compatible_level_graphs(t)) comp.push_back(levels_to_json(lg)["levels"]);
          list.push_back({{"half_edge_orders", orders_to_json(t)["half_edge_orders"]}, {"compatible_level_graphs", comp}});
        }
        emit({{"count", list.size()}, {"types", list}}, common);
      }
    } else if (*residues) {
      auto [g, s] = read_graph(graph_arg);
      auto lg = levels_from_json(load_json(levels_arg, "--levels"), g);
      auto t = orders_from_json(load_json(orders_arg, "--orders"), g);
      auto sys = build_residue_system(lg, t, s);
      json j{{"system", system_to_json(sys)}};
      auto f = feasible_residues(sys, common.seed);
      if (want_polys) f.eliminated = scaling_elimination(sys).strings;
      j["feasibility"] = feasibility_to_json(f);
      if (!assignment_arg.empty()) {
        json a = load_json(assignment_arg, "--assignment");
        bool complex = false;
        for (const auto& v : a) complex = complex || v.is_array();
        j["assignment_ok"] = complex ? check_assignment(sys, complex_assignment_from_json(a))
                                     : check_assignment(sys, assignment_from_json(a));
      }
      if (!base_arg.empty())
        j["scalings"] = feasibility_to_json(
            feasible_with_scalings(lg, t, s, assignment_from_json(load_json(base_arg, "--scaling-base")), want_polys,
                                   common.seed));
      emit(j, common);
    } else if (*membership) {
      auto [g, s] = read_graph(graph_arg);
      auto vr = validate_dual_graph(g, s, common.symmetrize);
      if (!vr.ok()) throw InvalidInput("graph does not validate: " + vr.violations.front());
      json list = json::array();
      for (const auto& c : decide_membership(g, s, {!no_grc, common.seed}))
        list.push_back({{"levels", levels_to_json(c.level_graph)["levels"]},
                        {"half_edge_orders", orders_to_json(c.type)["half_edge_orders"]},
                        {"feasibility", feasibility_to_json(c.feasibility)},
                        {"top_level_components", top_level_components(c.level_graph)}});
      emit({{"count", list.size()}, {"configurations", list}}, common);
    } else if (*boundary) {
      StratumDescriptor s{bgenus, bmu};
      if (!s.valid_degree()) throw InvalidInput("--mu must sum to 2g-2");
      BoundaryOptions opt;
      opt.prune_dominated = !keep_dominated;
      opt.include_grc = !no_grc;
      opt.symmetrize = common.symmetrize;
      opt.seed = common.seed;
      auto rep = enumerate_boundary(s, max_v, max_e, opt, common.caps);
      emit(boundary_to_json(rep), common);
    } else if (*p1) {
      if (!sample_orders.empty()) {
        auto st = sample_residue_profiles(sample_orders, trials, common.seed);
        json j{{"orders", st.orders},
               {"trials", st.trials},
               {"all_poles_zero", st.all_poles_zero},
               {"some_pole_zero", st.some_pole_zero},
               {"zero_count_per_pole", st.zero_count_per_pole}};
        auto pts = [](const std::optional<std::vector<Rational>>& v) {
          json a = json::array();
          if (v)
            for (const auto& r : *v) a.push_back(to_string(r));
          return a;
        };
        j["all_zero_example"] = pts(st.all_zero_example);
        j["some_zero_example"] = pts(st.some_zero_example);
        emit(j, common);
      } else {
        if (support_arg.empty()) throw InvalidInput("p1: give --support or --sample");
        json sj = load_json(support_arg, "--support");
        std::vector<SupportEntry> sup;
        try {
          sup = support_from_json(sj);
        } catch (const InvalidInput& e) {
          throw InvalidInput(std::string("--support") + e.what());
        }
        RationalDifferential w;
        try {
          w = build_p1_differential(sup);
        } catch (const std::invalid_argument& e) {
          throw InvalidInput(std::string("--support: ") + e.what());
        }
        emit(p1_to_json(w), common);
      }
    } else if (*elliptic) {
      EllipticCurveQ E(parse_rational(ea), parse_rational(eb));
      json j{{"curve", {{"a", to_string(E.a)}, {"b", to_string(E.b)}}}};
      if (!add_arg.empty()) {
        json pq = load_json(add_arg, "--add");
        if (!pq.is_array() || pq.size() != 2) throw InvalidInput("--add: expected [P, Q]");
        j["sum"] = epoint_to_json(add_points(E, epoint_from_json(pq[0]), epoint_from_json(pq[1])));
      }
      if (!equiv_arg.empty()) {
        json d = load_json(equiv_arg, "--equivalent");
        if (!d.is_array() || d.size() != 2) throw InvalidInput("--equivalent: expected [D1, D2]");
        j["linearly_equivalent"] = linearly_equivalent(E, divisor_from_json(d[0]), divisor_from_json(d[1]));
      }
      if (!weier_arg.empty()) {
        json w = load_json(weier_arg, "--weierstrass");
        if (!w.is_object() || !w.contains("zs") || !w.contains("qs")) throw InvalidInput("--weierstrass: expected {zs, qs}");
        std::vector<EPoint> qs;
        for (const auto& q : w["qs"]) qs.push_back(epoint_from_json(q));
        j["weierstrass_binary"] = check_weierstrass_binary(E, divisor_from_json(w["zs"]), qs);
      }
      if (!torsion_arg.empty()) {
        json zq = load_json(torsion_arg, "--two-torsion");
        if (!zq.is_array() || zq.size() != 2) throw InvalidInput("--two-torsion: expected [z, q]");
        j["differ_by_two_torsion"] = differ_by_two_torsion(E, epoint_from_json(zq[0]), epoint_from_json(zq[1]));
      }
      emit(j, common);
    } else if (*fixtures) {
      if (list_fixtures || fixture_name.empty()) {
        emit({{"fixtures", fixture_names()}}, common);
        return 0;
      }
      Fixture f = fixture(fixture_name);
      json j{{"name", f.name}, {"description", f.description}, {"graph", graph_to_json(f.graph, f.stratum)}};
      json configs = json::array();
      for (const auto& [lg, t] : f.configurations)
        configs.push_back({{"levels", levels_to_json(lg)["levels"]}, {"half_edge_orders", orders_to_json(t)["half_edge_orders"]}});
      j["configurations"] = configs;
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        auto write = [&](const std::string& file, const json& body) {
          std::ofstream(std::filesystem::path(out_dir) / file) << body.dump(2) << "\n";
        };
        write("graph.json", graph_to_json(f.graph, f.stratum));
        for (std::size_t i = 0; i < f.configurations.size(); ++i) {
          write("levels-" + std::to_string(i) + ".json", levels_to_json(f.configurations[i].first));
          write("orders-" + std::to_string(i) + ".json", orders_to_json(f.configurations[i].second));
        }
      }
      emit(j, common);
    }
  } catch (const CapExceeded& e) {
    std::cerr << "refused: " << e.what() << " (cap " << e.cap << ")\n";
    return kExitCap;
  } catch (const InvalidInput& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
