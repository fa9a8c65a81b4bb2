#include "strata/fixtures.hpp"

#include <algorithm>
#include <map>

namespace strata {

DualGraph build_graph(const GraphSpec& spec) {
  DualGraph g;
  for (const auto& [id, genus] : spec.vertices) {
    g.vertex_ids.push_back(id);
    g.genus.push_back(genus);
  }
  for (const auto& [id, a, b] : spec.edges) {
    g.edge_ids.push_back(id);
    g.edge_ends.push_back({g.vertex_index(a), g.vertex_index(b)});
  }
  for (const auto& [id, v, order] : spec.legs) g.legs.push_back({id, g.vertex_index(v), order});
  return g;
}

TwistedDiffType type_from_side0(const DualGraph& g, const std::vector<int>& side0_orders) {
  TwistedDiffType t{g, {}};
  for (int o : side0_orders) {
    t.half_edge_order.push_back(o);
    t.half_edge_order.push_back(-2 - o);
  }
  return t;
}

LevelGraph level_graph_from(const DualGraph& g, const std::vector<std::pair<std::string, int>>& levels) {
  LevelGraph lg{g, std::vector<int>(static_cast<std::size_t>(g.num_vertices()), 0)};
  for (const auto& [id, l] : levels) lg.level[static_cast<std::size_t>(g.vertex_index(id))] = l;
  return lg;
}

namespace {

Fixture make(std::string name, std::string description, GraphSpec spec, int genus,
             const std::vector<std::pair<std::vector<std::pair<std::string, int>>, std::vector<int>>>& configs) {
  Fixture f;
  f.name = std::move(name);
  f.description = std::move(description);
  f.graph = build_graph(spec);
  f.stratum.genus = genus;
  for (const auto& leg : f.graph.legs) f.stratum.mu.push_back(leg.order);
  for (const auto& [levels, orders] : configs)
    f.configurations.emplace_back(level_graph_from(f.graph, levels), type_from_side0(f.graph, orders));
  return f;
}

std::map<std::string, Fixture> build_all() {
  std::map<std::string, Fixture> all;
  auto add = [&](Fixture f) { all.emplace(f.name, std::move(f)); };

  add(make("figure-1",
           "two top components (genus 1 and genus g-2, g = 4) over a genus-1 component carrying both marked zeros",
           {{{"X1", 1}, {"Y", 2}, {"X2", 1}}, {{"q1", "X1", "X2"}, {"q2", "Y", "X2"}}, {{"z1", "X2", 3}, {"z2", "X2", 3}}},
           4, {{{{"X1", 0}, {"Y", 0}, {"X2", -1}}, {0, 2}}}));

  GraphSpec six{{{"X1", 1}, {"X2", 1}, {"X3", 1}, {"X4", 0}, {"X5", 0}, {"X6", 0}},
                {{"q14", "X1", "X4"}, {"q15", "X1", "X5"}, {"q25", "X2", "X5"}, {"q26", "X2", "X6"},
                 {"q46", "X4", "X6"}, {"q34", "X3", "X4"}, {"q35", "X3", "X5"}},
                {{"z1", "X4", 2}, {"z2", "X5", 4}, {"z3", "X6", 2}}};
  std::vector<int> six_orders(7, 0);
  auto six_fixture = [&](std::string name) {
    return make(std::move(name), "six components, three on top; two level graphs differing in the level of X5", six, 5,
                {{{{"X1", 0}, {"X2", 0}, {"X3", 0}, {"X4", -1}, {"X5", -1}, {"X6", -2}}, six_orders},
                 {{{"X1", 0}, {"X2", 0}, {"X3", 0}, {"X4", -1}, {"X5", -2}, {"X6", -2}}, six_orders}});
  };
  add(six_fixture("figure-2"));
  add(six_fixture("example-3.4"));

  GraphSpec v{{{"X1", 2}, {"X2", 1}, {"X3", 0}}, {{"q1", "X1", "X3"}, {"q2", "X2", "X3"}}, {{"z1", "X3", 4}}};
  auto v_fixture = [&](std::string name) {
    return make(std::move(name), "two top components over a rational component carrying the marked zero", v, 3,
                {{{{"X1", 0}, {"X2", 0}, {"X3", -1}}, {2, 0}}});
  };
  add(v_fixture("figure-3"));
  add(v_fixture("example-3.1"));

  add(make("figure-4", "genus-1 component with one non-separating node", {{{"X", 1}}, {{"q", "X", "X"}}, {{"z", "X", 2}}},
           2, {{{{"X", 0}}, {-1}}}));
  add(make("figure-5", "two elliptic components meeting at one node, marked point on the lower one",
           {{{"X1", 1}, {"X2", 1}}, {{"q", "X1", "X2"}}, {{"z", "X2", 2}}}, 2, {{{{"X1", 0}, {"X2", -1}}, {0}}}));
  add(make("figure-6", "irreducible rational curve with two nodes",
           {{{"X", 0}}, {{"q1", "X", "X"}, {"q2", "X", "X"}}, {{"z", "X", 2}}}, 2, {{{{"X", 0}}, {-1, -1}}}));
  add(make("figure-7", "rational nodal curve on top of an elliptic component carrying the marked point",
           {{{"X1", 0}, {"X2", 1}}, {{"q1", "X1", "X1"}, {"q2", "X1", "X2"}}, {{"z", "X2", 2}}}, 2,
           {{{{"X1", 0}, {"X2", -1}}, {-1, 0}}}));
  add(make("figure-8", "two elliptic components joined by a marked rational bridge",
           {{{"X1", 1}, {"X2", 1}, {"X3", 0}}, {{"q1", "X1", "X3"}, {"q2", "X2", "X3"}}, {{"z", "X3", 2}}}, 2,
           {{{{"X1", 0}, {"X2", 0}, {"X3", -1}}, {0, 0}}}));
  add(make("figure-9", "banana: elliptic and rational components meeting at two nodes",
           {{{"X1", 1}, {"X2", 0}}, {{"q1", "X1", "X2"}, {"q2", "X1", "X2"}}, {{"z", "X2", 2}}}, 2,
           {{{{"X1", 0}, {"X2", -1}}, {0, 0}}}));

  GraphSpec four{{{"X1", 1}, {"X2", 2}, {"X3", 0}, {"X4", 0}},
                 {{"q1", "X1", "X2"}, {"q2", "X2", "X3"}, {"q3", "X2", "X4"}, {"q4", "X3", "X4"}},
                 {{"z1", "X3", 2}, {"z2", "X4", 4}}};
  auto four_fixture = [&](std::string name) {
    return make(std::move(name),
                "triangle under a top elliptic component; the two types (k = 4, k = 0) give different full orders", four,
                4,
                {{{{"X1", 0}, {"X2", -1}, {"X3", -2}, {"X4", -3}}, {0, 4, 0, 2}},
                 {{{"X1", 0}, {"X2", -1}, {"X4", -2}, {"X3", -3}}, {0, 0, 4, -2}}});
  };
  add(four_fixture("figure-10"));
  add(four_fixture("example-3.3"));

  GraphSpec five{{{"X1", 1}, {"X2", 1}, {"X3", 1}, {"X4", 0}, {"X5", 0}},
                 {{"q14", "X1", "X4"}, {"q15", "X1", "X5"}, {"q24", "X2", "X4"}, {"q25", "X2", "X5"},
                  {"q34", "X3", "X4"}, {"q35", "X3", "X5"}},
                 {{"z1", "X4", 4}, {"z2", "X5", 4}}};
  auto five_fixture = [&](std::string name) {
    return make(std::move(name), "three elliptic components on top, each meeting both rational components below", five, 5,
                {{{{"X1", 0}, {"X2", 0}, {"X3", 0}, {"X4", -1}, {"X5", -1}}, std::vector<int>(6, 0)}});
  };
  add(five_fixture("figure-11"));
  add(five_fixture("example-3.5"));

  add(make("example-3.2", "chain of three levels; the middle component's node orders are not forced by the level graph",
           {{{"X1", 1}, {"X2", 1}, {"X3", 0}}, {{"q1", "X1", "X2"}, {"q2", "X2", "X3"}, {"q3", "X2", "X3"}}, {{"z1", "X3", 4}}},
           3, {{{{"X1", 0}, {"X2", -1}, {"X3", -2}}, {0, 0, 2}}}));
  return all;
}

const std::map<std::string, Fixture>& registry() {
  static const std::map<std::string, Fixture> all = build_all();
  return all;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [k, f] : registry()) out.push_back(k);
  return out;
}

Fixture fixture(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) {
    std::string list;
    for (const auto& n : fixture_names()) list += (list.empty() ? "" : ", ") + n;
    throw InvalidInput("unknown fixture '" + name + "'; available: " + list);
  }
  return it->second;
}

}  // namespace strata
