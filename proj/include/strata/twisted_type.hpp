#pragma once
#include "strata/curve_graph.hpp"
#include "strata/level_order.hpp"

#include <string>
#include <vector>

namespace strata {

struct TwistedDiffType {
  DualGraph graph;
  std::vector<int> half_edge_order;  // indexed by half-edge

  int order(int h) const { return half_edge_order[static_cast<std::size_t>(h)]; }
  // Leg orders followed by incident half-edge orders.
  std::vector<int> vertex_orders(int v) const;
};

struct CheckReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

CheckReport check_type(const TwistedDiffType& t, const StratumDescriptor& s, bool symmetrize = false);

bool check_condition3(const LevelGraph& lg, const TwistedDiffType& t);

// Union over all weak orders of the types compatible with that order,
// deduplicated and sorted lexicographically by half-edge order vector.
std::vector<TwistedDiffType> enumerate_twisted_types(const DualGraph& g, const StratumDescriptor& s);

// Types compatible with one fixed level graph.
std::vector<TwistedDiffType> types_for_level_graph(const LevelGraph& lg);

struct OrderRelation {
  int upper;
  int lower;
  bool tie;  // (-1,-1) edge
};

struct InducedOrder {
  std::vector<OrderRelation> relations;  // one per edge
  std::vector<LevelGraph> compatible;    // empty iff the relation is inconsistent
};

InducedOrder induced_partial_order(const TwistedDiffType& t);
std::vector<LevelGraph> compatible_level_graphs(const TwistedDiffType& t);

// Vertices v whose every neighbour u satisfies u >= v.
std::vector<int> nonstrict_local_minima(const LevelGraph& lg);

}  // namespace strata
