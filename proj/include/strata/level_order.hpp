#pragma once
#include "strata/curve_graph.hpp"

#include <vector>

namespace strata {

struct LevelGraph {
  DualGraph graph;
  std::vector<int> level;  // per vertex, image {0, -1, ..., -(k-1)}

  int num_levels() const;
  int min_level() const;
  bool above_or_equal(int v1, int v2) const { return level[static_cast<std::size_t>(v1)] >= level[static_cast<std::size_t>(v2)]; }
  bool same_level(int v1, int v2) const { return level[static_cast<std::size_t>(v1)] == level[static_cast<std::size_t>(v2)]; }
};

// Shifts and compresses an arbitrary level function to consecutive levels with top 0.
std::vector<int> normalize_levels(const std::vector<int>& raw);
bool is_normalized(const std::vector<int>& level);

std::vector<LevelGraph> enumerate_level_structures(const DualGraph& g);

// Vertex subset plus the edges with both ends inside.
struct GraphView {
  std::vector<int> vertices;
  std::vector<int> edges;
};

GraphView subgraph_above(const LevelGraph& lg, int L);  // level > L
GraphView at_level(const LevelGraph& lg, int L);        // level == L
GraphView above_or_at(const LevelGraph& lg, int L);     // level >= L
GraphView below(const LevelGraph& lg, int L);           // level < L

struct ComponentAbove {
  std::vector<int> vertices;
  std::vector<int> edges_to_level;   // edges joining the component to vertices at level exactly L
  std::vector<int> edges_below;      // edges to vertices strictly below L (not used by the GRC)
  bool has_marked_pole = false;
};

std::vector<ComponentAbove> connected_components_above(const LevelGraph& lg, int L);

// Connected components of the subgraph induced on a vertex set.
std::vector<std::vector<int>> components_of(const DualGraph& g, const std::vector<int>& vertices);

}  // namespace strata
