#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <strata/boundary.hpp>
#include <strata/fixtures.hpp>
#include <strata/twisted_type.hpp>

#include "oracles.hpp"

using namespace strata;

namespace {

std::set<std::vector<int>> order_set(const std::vector<TwistedDiffType>& ts) {
  std::set<std::vector<int>> out;
  for (const auto& t : ts) out.insert(t.half_edge_order);
  return out;
}

int level_of(const LevelGraph& lg, const std::string& id) {
  return lg.level[static_cast<std::size_t>(lg.graph.vertex_index(id))];
}

}  // namespace

TEST_CASE("check_type examples") {
  Fixture f5 = fixture("figure-5");
  CHECK(check_type(f5.configurations[0].second, f5.stratum).ok());
  TwistedDiffType bad = f5.configurations[0].second;
  bad.half_edge_order = {0, -1};
  auto rep = check_type(bad, f5.stratum);
  CHECK_FALSE(rep.ok());
  CHECK(rep.violations.front().rfind("(1)", 0) == 0);

  Fixture e2 = fixture("example-3.2");
  const auto& t = e2.configurations[0].second;
  CHECK(check_type(t, e2.stratum).ok());
  int x1 = e2.graph.vertex_index("X1");
  CHECK(t.vertex_orders(x1) == std::vector<int>{2 * e2.graph.genus[static_cast<std::size_t>(x1)] - 2});
}

TEST_CASE("check_type flags leg orders and degrees") {
  Fixture f9 = fixture("figure-9");
  TwistedDiffType t = f9.configurations[0].second;
  CHECK_FALSE(check_type(t, StratumDescriptor{2, {3}}).ok());
  t.half_edge_order = {1, -3, 0, -2};
  auto rep = check_type(t, f9.stratum);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("condition (3) examples") {
  Fixture f9 = fixture("figure-9");
  const auto& [lg, t] = f9.configurations[0];
  CHECK(check_condition3(lg, t));
  LevelGraph flat = lg;
  flat.level = {0, 0};
  CHECK_FALSE(check_condition3(flat, t));

  Fixture e3 = fixture("example-3.3");
  const auto& [lg_a, t_a] = e3.configurations[0];
  const auto& [lg_b, t_b] = e3.configurations[1];
  CHECK(check_condition3(lg_a, t_a));
  CHECK(check_condition3(lg_b, t_b));
  CHECK_FALSE(check_condition3(lg_b, t_a));
  CHECK_FALSE(check_condition3(lg_a, t_b));
}

TEST_CASE("enumeration examples") {
  Fixture f9 = fixture("figure-9");
  auto types = enumerate_twisted_types(f9.graph, f9.stratum);
  REQUIRE(types.size() == 1);
  CHECK(types[0].half_edge_order == std::vector<int>{0, -2, 0, -2});

  Fixture f5 = fixture("figure-5");
  CHECK(enumerate_twisted_types(f5.graph, f5.stratum).size() == 1);

  Fixture f8 = fixture("figure-8");
  auto bridge = enumerate_twisted_types(f8.graph, f8.stratum);
  REQUIRE(bridge.size() == 1);
  int x3 = f8.graph.vertex_index("X3");
  CHECK(bridge[0].vertex_orders(x3) == std::vector<int>{2, -2, -2});
  for (const char* id : {"X1", "X2"}) CHECK(bridge[0].vertex_orders(f8.graph.vertex_index(id)) == std::vector<int>{0});
}

TEST_CASE("induced order examples") {
  Fixture f9 = fixture("figure-9");
  auto lgs = compatible_level_graphs(f9.configurations[0].second);
  REQUIRE(lgs.size() == 1);
  CHECK(level_of(lgs[0], "X1") > level_of(lgs[0], "X2"));

  Fixture e3 = fixture("example-3.3");
  auto a = compatible_level_graphs(e3.configurations[0].second);
  auto b = compatible_level_graphs(e3.configurations[1].second);
  REQUIRE(a.size() == 1);
  REQUIRE(b.size() == 1);
  CHECK(a[0].level == e3.configurations[0].first.level);
  CHECK(b[0].level == e3.configurations[1].first.level);
  CHECK(a[0].level != b[0].level);

  DualGraph one = make_graph({2}, {}, {{0, 2}});
  auto trivial = compatible_level_graphs(TwistedDiffType{one, {}});
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].level == std::vector<int>{0});
}

TEST_CASE("inconsistent relation yields no level graph") {
  // a directed cycle: X1 over X2 over X3 over X1
  DualGraph g = make_graph({1, 1, 1}, {{0, 1}, {1, 2}, {2, 0}}, {{0, 2}});
  TwistedDiffType t{g, {0, -2, 0, -2, 0, -2}};
  auto ind = induced_partial_order(t);
  CHECK(ind.relations.size() == 3);
  CHECK(ind.compatible.empty());
}

TEST_CASE("enumeration agrees with a capped brute force at two caps") {
  for (auto [genus, mu] : std::vector<std::pair<int, std::vector<int>>>{{2, {2}}, {2, {1, 1}}, {3, {4}}, {1, {2, -2}}}) {
    StratumDescriptor s{genus, mu};
    for (const auto& g : enumerate_stable_graphs(s, 4, 3)) {
      auto got = order_set(enumerate_twisted_types(g, s));
      auto small = oracle::twisted_types_capped(g, 6);
      auto large = oracle::twisted_types_capped(g, 10);
      CHECK(small == large);
      CHECK(got == large);
    }
  }
}

TEST_CASE("enumerated types satisfy the defining conditions") {
  StratumDescriptor s{3, {4}};
  for (const auto& g : enumerate_stable_graphs(s, 3, 4)) {
    for (const auto& t : enumerate_twisted_types(g, s)) {
      CHECK(check_type(t, s).ok());
      for (int e = 0; e < g.num_edges(); ++e) CHECK(t.order(2 * e) + t.order(2 * e + 1) == -2);
      for (int v = 0; v < g.num_vertices(); ++v) {
        auto o = t.vertex_orders(v);
        CHECK(std::accumulate(o.begin(), o.end(), 0) == 2 * g.genus[static_cast<std::size_t>(v)] - 2);
      }
      CHECK_FALSE(compatible_level_graphs(t).empty());
    }
  }
}

TEST_CASE("compatible level graphs are exactly the level structures passing (3)") {
  for (auto [genus, mu] : std::vector<std::pair<int, std::vector<int>>>{{2, {2}}, {3, {4}}, {1, {3, -3}}}) {
    StratumDescriptor s{genus, mu};
    for (const auto& g : enumerate_stable_graphs(s, 4, 4)) {
      auto all = enumerate_level_structures(g);
      for (const auto& t : enumerate_twisted_types(g, s)) {
        std::set<std::vector<int>> expect, got;
        for (const auto& lg : all)
          if (check_condition3(lg, t)) expect.insert(lg.level);
        for (const auto& lg : compatible_level_graphs(t)) {
          CHECK(check_condition3(lg, t));
          got.insert(lg.level);
        }
        CHECK(got == expect);
      }
    }
  }
}

TEST_CASE("every local minimum of a compatible level graph carries a marked point") {
  for (auto [genus, mu] : std::vector<std::pair<int, std::vector<int>>>{
           {2, {2}}, {2, {1, 1}}, {3, {4}}, {3, {2, 2}}, {0, {1, -1, -2}}, {1, {2, 1, -3}}}) {
    StratumDescriptor s{genus, mu};
    for (const auto& g : enumerate_stable_graphs(s, 3, 4))
      for (const auto& t : enumerate_twisted_types(g, s))
        for (const auto& lg : compatible_level_graphs(t))
          for (int v : nonstrict_local_minima(lg)) CHECK_FALSE(g.legs_at(v).empty());
  }
}

TEST_CASE("single-zero strata: the unique local minimum is the marked component") {
  for (int genus : {2, 3}) {
    StratumDescriptor s{genus, {2 * genus - 2}};
    for (const auto& g : enumerate_stable_graphs(s, 3, 4))
      for (const auto& t : enumerate_twisted_types(g, s))
        for (const auto& lg : compatible_level_graphs(t)) {
          auto mins = nonstrict_local_minima(lg);
          REQUIRE(mins.size() == 1);
          CHECK(mins[0] == g.legs[0].vertex);
          CHECK(single_zero_minimum_ok(lg));
        }
  }
}
