#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <strata/fixtures.hpp>
#include <strata/level_order.hpp>

#include "oracles.hpp"

using namespace strata;

namespace {

DualGraph path_graph(int n) {
  std::vector<int> genus(static_cast<std::size_t>(n), 1);
  std::vector<std::array<int, 2>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return make_graph(genus, edges, {{0, 0}});
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> ids(const DualGraph& g, const std::vector<std::string>& names) {
  std::vector<int> out;
  for (const auto& n : names) out.push_back(g.vertex_index(n));
  return sorted(out);
}

}  // namespace

TEST_CASE("level structure counts match a brute-force weak-order oracle") {
  const std::vector<std::size_t> ordered_bell = {1, 3, 13, 75, 541};
  for (int n = 1; n <= 5; ++n) {
    auto lgs = enumerate_level_structures(path_graph(n));
    auto oracle_set = oracle::weak_orders(n);
    CHECK(oracle_set.size() == ordered_bell[static_cast<std::size_t>(n - 1)]);
    CHECK(lgs.size() == oracle_set.size());
    std::set<std::vector<int>> got;
    for (const auto& lg : lgs) {
      CHECK(is_normalized(lg.level));
      got.insert(lg.level);
    }
    CHECK(got == oracle_set);
  }
}

TEST_CASE("normalization") {
  CHECK(normalize_levels({5, 2, 5, -7}) == std::vector<int>{0, -1, 0, -2});
  CHECK(is_normalized({0, -1, -1, -2}));
  CHECK_FALSE(is_normalized({0, -2}));
  CHECK_FALSE(is_normalized({-1, -1}));
}

TEST_CASE("views on the example with two top components over a rational one") {
  Fixture f = fixture("example-3.1");
  const LevelGraph& lg = f.configurations[0].first;
  const DualGraph& g = lg.graph;
  int L = lg.level[static_cast<std::size_t>(g.vertex_index("X3"))];
  auto view = subgraph_above(lg, L);
  CHECK(sorted(view.vertices) == ids(g, {"X1", "X2"}));
  CHECK(view.edges.empty());
  CHECK(subgraph_above(lg, 0).vertices.empty());

  auto comps = connected_components_above(lg, L);
  REQUIRE(comps.size() == 2);
  for (const auto& c : comps) {
    CHECK(c.vertices.size() == 1);
    CHECK(c.edges_to_level.size() == 1);
    CHECK_FALSE(c.has_marked_pole);
  }
  CHECK(connected_components_above(lg, 0).empty());
}

TEST_CASE("views on the six-component example") {
  Fixture f = fixture("example-3.4");
  const LevelGraph& lg2 = f.configurations[1].first;
  const DualGraph& g = lg2.graph;
  int L4 = lg2.level[static_cast<std::size_t>(g.vertex_index("X4"))];
  auto view = subgraph_above(lg2, L4);
  CHECK(sorted(view.vertices) == ids(g, {"X1", "X2", "X3"}));
  CHECK(view.edges.empty());

  auto comps = connected_components_above(lg2, lg2.min_level());
  std::set<std::vector<int>> got;
  for (const auto& c : comps) got.insert(sorted(c.vertices));
  CHECK(got == std::set<std::vector<int>>{ids(g, {"X2"}), ids(g, {"X1", "X3", "X4"})});
}

TEST_CASE("views partition the vertices and components are disjoint and connected") {
  for (const auto& name : fixture_names()) {
    const DualGraph& g = fixture(name).graph;
    if (g.num_vertices() > 5) continue;
    for (const auto& lg : enumerate_level_structures(g)) {
      for (int L = 0; L >= lg.min_level() - 1; --L) {
        std::vector<int> all;
        for (const auto& part : {subgraph_above(lg, L), at_level(lg, L), below(lg, L)})
          all.insert(all.end(), part.vertices.begin(), part.vertices.end());
        std::vector<int> expect(static_cast<std::size_t>(g.num_vertices()));
        std::iota(expect.begin(), expect.end(), 0);
        CHECK(sorted(all) == expect);
        auto above = subgraph_above(lg, L).vertices;
        std::vector<int> union_;
        for (const auto& c : connected_components_above(lg, L)) {
          CHECK(components_of(g, c.vertices).size() == 1);
          union_.insert(union_.end(), c.vertices.begin(), c.vertices.end());
          for (int e : c.edges_to_level) {
            auto [a, b] = g.edge_ends[static_cast<std::size_t>(e)];
            bool a_in = std::count(c.vertices.begin(), c.vertices.end(), a) > 0;
            int other = a_in ? b : a;
            CHECK(lg.level[static_cast<std::size_t>(other)] == L);
          }
        }
        CHECK(sorted(union_) == sorted(above));  // disjoint cover
      }
    }
  }
}
