#pragma once
#include "strata/curve_graph.hpp"
#include "strata/level_order.hpp"
#include "strata/twisted_type.hpp"

#include <string>
#include <utility>
#include <vector>

namespace strata {

struct Fixture {
  std::string name;
  std::string description;
  DualGraph graph;
  StratumDescriptor stratum;
  std::vector<std::pair<LevelGraph, TwistedDiffType>> configurations;
};

std::vector<std::string> fixture_names();
// Throws InvalidInput listing the available names.
Fixture fixture(const std::string& name);

// Builder used by fixtures and tests: vertices named as given, edges (id, upper, lower,
// order at side 0), legs (id, vertex, order).
struct GraphSpec {
  std::vector<std::pair<std::string, int>> vertices;
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  std::vector<std::tuple<std::string, std::string, int>> legs;
};
DualGraph build_graph(const GraphSpec& spec);
TwistedDiffType type_from_side0(const DualGraph& g, const std::vector<int>& side0_orders);
LevelGraph level_graph_from(const DualGraph& g, const std::vector<std::pair<std::string, int>>& levels);

}  // namespace strata
