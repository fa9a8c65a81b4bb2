#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <strata/boundary.hpp>
#include <strata/fixtures.hpp>
#include <strata/p1_forms.hpp>
#include <strata/residues.hpp>

#include "oracles.hpp"

using namespace strata;

namespace {

ResidueSystem system_of(const Fixture& f, std::size_t k = 0, ResidueSystemOptions opt = {}) {
  return build_residue_system(f.configurations[k].first, f.configurations[k].second, f.stratum, opt);
}

// Sites touched by a row, by name.
std::set<std::string> row_sites(const ResidueSystem& sys, const Constraint& c) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < sys.sites.size(); ++i)
    if (c.coeffs(static_cast<Eigen::Index>(i)) != 0) out.insert(sys.sites[i].id);
  return out;
}

std::vector<std::set<std::string>> grc_rows(const ResidueSystem& sys, int level) {
  std::vector<std::set<std::string>> out;
  for (const auto& c : sys.constraints)
    if (c.kind == RowKind::GlobalResidue && c.level == level) out.push_back(row_sites(sys, c));
  return out;
}

ResidueAssignment assign(const std::vector<std::pair<std::string, long long>>& v) {
  ResidueAssignment a;
  for (const auto& [k, x] : v) a.values[k] = Rational(x);
  return a;
}

// Residues at the lower branches of the six edges of the five-component example.
ResidueAssignment five_base(long long r14, long long r24, long long r34, long long r15, long long r25, long long r35) {
  return assign({{"q14:1", r14}, {"q24:1", r24}, {"q34:1", r34}, {"q15:1", r15}, {"q25:1", r25}, {"q35:1", r35}});
}

}  // namespace

TEST_CASE("global residue rows: two top components over a rational component") {
  Fixture f = fixture("example-3.1");
  auto sys = system_of(f);
  auto rows = grc_rows(sys, -1);
  std::set<std::set<std::string>> got(rows.begin(), rows.end());
  CHECK(got == std::set<std::set<std::string>>{{"q1:1"}, {"q2:1"}});
  CHECK(sys.obstructed_vertices == std::vector<int>{f.graph.vertex_index("X3")});
}

TEST_CASE("global residue rows: six-component example, middle level") {
  Fixture f = fixture("example-3.4");
  auto sys = system_of(f, 0);
  auto rows = grc_rows(sys, -1);
  std::set<std::set<std::string>> got(rows.begin(), rows.end());
  CHECK(got == std::set<std::set<std::string>>{{"q14:1", "q15:1"}, {"q25:1"}, {"q34:1", "q35:1"}});
  CHECK(sys.extra_rank() == 2);
}

TEST_CASE("single level with one internal node") {
  Fixture f = fixture("figure-4");
  auto sys = system_of(f);
  REQUIRE(sys.constraints.size() == 2);
  std::multiset<RowKind> kinds;
  for (const auto& c : sys.constraints) {
    kinds.insert(c.kind);
    CHECK(row_sites(sys, c) == std::set<std::string>{"q:0", "q:1"});
  }
  CHECK(kinds == std::multiset<RowKind>{RowKind::Pairing, RowKind::ResidueTheorem});
  CHECK(sys.nonzero_sites.size() == 2);
}

TEST_CASE("build rejects mismatched data") {
  Fixture a = fixture("figure-9");
  Fixture b = fixture("figure-8");
  CHECK_THROWS_AS(build_residue_system(a.configurations[0].first, b.configurations[0].second, b.stratum), InvalidInput);
  LevelGraph flat = a.configurations[0].first;
  flat.level = {0, 0};
  CHECK_THROWS_AS(build_residue_system(flat, a.configurations[0].second, a.stratum), InvalidInput);
}

TEST_CASE("check_assignment examples") {
  Fixture banana = fixture("figure-9");
  auto sys = system_of(banana);
  CHECK(check_assignment(sys, assign({{"q1:1", 1}, {"q2:1", -1}})));
  CHECK_FALSE(check_assignment(sys, assign({{"q1:1", 1}, {"q2:1", 1}})));

  auto e31 = system_of(fixture("example-3.1"));
  CHECK_FALSE(check_assignment(e31, assign({{"q1:1", 1}, {"q2:1", -1}})));
  CHECK_FALSE(check_assignment(e31, assign({{"q1:1", 0}, {"q2:1", 0}})));

  auto loop = system_of(fixture("figure-4"));
  CHECK_FALSE(check_assignment(loop, assign({{"q:0", 0}, {"q:1", 0}})));
  CHECK(check_assignment(loop, assign({{"q:0", 3}, {"q:1", -3}})));
  CHECK_THROWS_AS(check_assignment(loop, assign({{"q:0", 3}})), InvalidInput);

  ComplexResidueAssignment c;
  c.values["q:0"] = GaussianRational(0, 1);
  c.values["q:1"] = GaussianRational(0, -1);
  CHECK(check_assignment(loop, c));
  c.values["q:1"] = GaussianRational(0, 1);
  CHECK_FALSE(check_assignment(loop, c));
}

TEST_CASE("feasibility examples") {
  auto e31 = feasible_residues(system_of(fixture("example-3.1")));
  CHECK(e31.verdict == Verdict::Infeasible);
  CHECK(e31.certificate.find("X3") != std::string::npos);

  auto f5 = feasible_residues(system_of(fixture("figure-5")));
  CHECK(f5.feasible());
  REQUIRE(f5.witness);
  CHECK(f5.witness->values.at("q:1") == 0);
  CHECK(f5.forced_zero == std::vector<std::string>{"q:1"});
  CHECK(std::count(f5.assumptions.begin(), f5.assumptions.end(), std::string(kPositiveGenusAssumption)) == 1);

  auto f8 = feasible_residues(system_of(fixture("figure-8")));
  CHECK(f8.verdict == Verdict::Infeasible);

  auto loop = feasible_residues(system_of(fixture("figure-4")));
  CHECK(loop.feasible());
}

TEST_CASE("witnesses pass check_assignment and are seed-reproducible") {
  for (const auto& name : fixture_names()) {
    Fixture f = fixture(name);
    for (std::size_t k = 0; k < f.configurations.size(); ++k) {
      auto sys = system_of(f, k);
      auto a = feasible_residues(sys, 5);
      auto b = feasible_residues(sys, 5);
      CHECK(a.verdict == b.verdict);
      if (a.feasible()) {
        REQUIRE(a.witness);
        CHECK(check_assignment(sys, *a.witness));
        CHECK(a.witness->values == b.witness->values);
      }
    }
  }
}

TEST_CASE("scalings: the quadratic condition on the five-component example") {
  Fixture f = fixture("example-3.5");
  const auto& [lg, t] = f.configurations[0];
  auto yes = feasible_with_scalings(lg, t, f.stratum, five_base(1, 2, -3, 2, 4, -6));
  CHECK(yes.verdict == Verdict::Feasible);
  REQUIRE(yes.scaling);
  for (const auto& [v, l] : yes.scaling->values) CHECK(l != 0);
  CHECK(check_assignment(system_of(f), *yes.witness));

  auto no = feasible_with_scalings(lg, t, f.stratum, five_base(1, 1, -2, 1, 2, -3));
  CHECK(no.verdict == Verdict::Infeasible);

  auto ones = feasible_with_scalings(lg, t, f.stratum, five_base(1, 2, -3, -1, -2, 3));
  REQUIRE(ones.feasible());
  for (const auto& [v, l] : ones.scaling->values) CHECK(l == 1);

  CHECK_THROWS_AS(feasible_with_scalings(lg, t, f.stratum, five_base(1, 2, 3, -1, -2, 3)), InvalidInput);
}

TEST_CASE("scalings: eliminated condition equals the 2x2 minor") {
  Fixture f = fixture("example-3.5");
  auto sys = system_of(f);
  auto elim = scaling_elimination(sys);
  REQUIRE(elim.conditions.size() == 1);
  auto idx = [&](const std::string& id) { return static_cast<std::size_t>(sys.site_index(id)); };
  const std::size_t n = sys.sites.size();
  auto x = [&](const std::string& id) { return Polynomial::variable(n, idx(id)); };
  Polynomial minor = x("q14:1") * x("q25:1") - x("q24:1") * x("q15:1");
  CHECK((elim.conditions[0] == minor || elim.conditions[0] == minor * Rational(-1)));
  CHECK(elim.strings[0].find("= 0") != std::string::npos);
}

TEST_CASE("scalings: componentwise rescaling within a level preserves the verdict") {
  Fixture f = fixture("example-3.5");
  const auto& [lg, t] = f.configurations[0];
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    ResidueAssignment base;
    Rational r14 = oracle::random_nonzero(rng), r24 = oracle::random_nonzero(rng);
    Rational c = trial % 2 ? oracle::random_nonzero(rng) : Rational(0);
    Rational r15 = trial % 2 ? c * r14 : oracle::random_nonzero(rng);
    Rational r25 = trial % 2 ? c * r24 : oracle::random_nonzero(rng);
    base.values = {{"q14:1", r14}, {"q24:1", r24}, {"q34:1", -r14 - r24},
                   {"q15:1", r15}, {"q25:1", r25}, {"q35:1", -r15 - r25}};
    auto before = feasible_with_scalings(lg, t, f.stratum, base).feasible();
    Rational s = oracle::random_nonzero(rng);
    for (const char* id : {"q15:1", "q25:1", "q35:1"}) base.values[id] *= s;
    CHECK(feasible_with_scalings(lg, t, f.stratum, base).feasible() == before);
  }
}

TEST_CASE("membership examples") {
  Fixture banana = fixture("figure-9");
  CHECK(decide_membership(banana.graph, banana.stratum).size() == 1);
  Fixture bridge = fixture("figure-8");
  CHECK(decide_membership(bridge.graph, bridge.stratum).empty());
  CHECK_FALSE(evaluate_configurations(bridge.graph, bridge.stratum).empty());
  auto smooth = decide_membership(make_graph({3}, {}, {{0, 4}}), StratumDescriptor{3, {4}});
  REQUIRE(smooth.size() == 1);
  CHECK(smooth[0].feasibility.verdict == Verdict::Feasible);
}

TEST_CASE("dropping the global residue rows never loses a feasible configuration") {
  for (auto [genus, mu] : std::vector<std::pair<int, std::vector<int>>>{{2, {2}}, {3, {4}}, {1, {2, 1, -3}}, {2, {1, 1}}}) {
    StratumDescriptor s{genus, mu};
    for (const auto& g : enumerate_stable_graphs(s, 3, 4)) {
      auto with = evaluate_configurations(g, s, {true, 0});
      auto without = evaluate_configurations(g, s, {false, 0});
      REQUIRE(with.size() == without.size());
      for (std::size_t i = 0; i < with.size(); ++i)
        if (with[i].feasibility.feasible()) CHECK(without[i].feasibility.feasible());
    }
  }
}

TEST_CASE("redundant global residue rows do not change feasibility") {
  for (auto [genus, mu] : std::vector<std::pair<int, std::vector<int>>>{{2, {2}}, {3, {4}}, {1, {4, -4}}}) {
    StratumDescriptor s{genus, mu};
    for (const auto& g : enumerate_stable_graphs(s, 3, 4))
      for (const auto& t : enumerate_twisted_types(g, s))
        for (const auto& lg : compatible_level_graphs(t)) {
          auto sys = build_residue_system(lg, t, s);
          if (sys.grc_rank_modulo_local() != 0) continue;
          auto bare = build_residue_system(lg, t, s, {false});
          CHECK(feasible_residues(sys).feasible() == feasible_residues(bare).feasible());
        }
  }
}

TEST_CASE("obstruction flags match the genus-0 unique-zero rule and the sampler") {
  for (auto [genus, mu] : std::vector<std::pair<int, std::vector<int>>>{{2, {2}}, {3, {4}}, {1, {2, 1, -3}}, {0, {2, 1, -1, -4}}}) {
    StratumDescriptor s{genus, mu};
    for (const auto& g : enumerate_stable_graphs(s, 3, 4))
      for (const auto& t : enumerate_twisted_types(g, s))
        for (const auto& lg : compatible_level_graphs(t)) {
          auto sys = build_residue_system(lg, t, s);
          for (int v = 0; v < g.num_vertices(); ++v) {
            auto ords = t.vertex_orders(v);
            int positive = static_cast<int>(std::count_if(ords.begin(), ords.end(), [](int o) { return o > 0; }));
            int polar = static_cast<int>(std::count_if(ords.begin(), ords.end(), [](int o) { return o < 0; }));
            bool expect = g.genus[static_cast<std::size_t>(v)] == 0 && positive == 1 && polar >= 2;
            bool flagged = std::count(sys.obstructed_vertices.begin(), sys.obstructed_vertices.end(), v) > 0;
            CHECK(flagged == expect);
            if (expect && std::count(ords.begin(), ords.end(), 0) == 0) {
              auto st = sample_residue_profiles(ords, 20, 3);
              CHECK(st.all_poles_zero == 0);
            }
          }
        }
  }
}
