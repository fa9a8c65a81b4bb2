#include "strata/level_order.hpp"

#include <algorithm>
#include <set>

namespace strata {

int LevelGraph::num_levels() const { return level.empty() ? 0 : 1 - min_level(); }

int LevelGraph::min_level() const {
  return level.empty() ? 0 : *std::min_element(level.begin(), level.end());
}

std::vector<int> normalize_levels(const std::vector<int>& raw) {
  std::set<int> distinct(raw.begin(), raw.end());
  std::vector<int> sorted(distinct.rbegin(), distinct.rend());
  std::vector<int> out;
  out.reserve(raw.size());
  for (int x : raw)
    out.push_back(-static_cast<int>(std::find(sorted.begin(), sorted.end(), x) - sorted.begin()));
  return out;
}

bool is_normalized(const std::vector<int>& level) { return normalize_levels(level) == level; }

namespace {

void weak_orders(int n, int v, std::vector<int>& rank, std::vector<std::vector<int>>& out) {
  if (v == n) {
    int top = *std::max_element(rank.begin(), rank.end());
    std::vector<bool> used(static_cast<std::size_t>(top + 1), false);
    for (int r : rank) used[static_cast<std::size_t>(r)] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) out.push_back(rank);
    return;
  }
  for (int r = 0; r < n; ++r) {
    rank[static_cast<std::size_t>(v)] = r;
    weak_orders(n, v + 1, rank, out);
  }
}

}  // namespace

std::vector<LevelGraph> enumerate_level_structures(const DualGraph& g) {
  const int n = g.num_vertices();
  std::vector<LevelGraph> out;
  if (n == 0) return out;
  std::vector<int> rank(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> ranks;
  weak_orders(n, 0, rank, ranks);
  for (auto& r : ranks) {
    for (int& x : r) x = -x;
    out.push_back({g, r});
  }
  return out;
}

namespace {

template <class Pred>
GraphView view_where(const LevelGraph& lg, Pred keep) {
  GraphView view;
  for (int v = 0; v < lg.graph.num_vertices(); ++v)
    if (keep(lg.level[static_cast<std::size_t>(v)])) view.vertices.push_back(v);
  for (int e = 0; e < lg.graph.num_edges(); ++e) {
    auto [a, b] = lg.graph.edge_ends[static_cast<std::size_t>(e)];
    if (keep(lg.level[static_cast<std::size_t>(a)]) && keep(lg.level[static_cast<std::size_t>(b)])) view.edges.push_back(e);
  }
  return view;
}

}  // namespace

GraphView subgraph_above(const LevelGraph& lg, int L) { return view_where(lg, [L](int l) { return l > L; }); }
GraphView at_level(const LevelGraph& lg, int L) { return view_where(lg, [L](int l) { return l == L; }); }
GraphView above_or_at(const LevelGraph& lg, int L) { return view_where(lg, [L](int l) { return l >= L; }); }
GraphView below(const LevelGraph& lg, int L) { return view_where(lg, [L](int l) { return l < L; }); }

std::vector<std::vector<int>> components_of(const DualGraph& g, const std::vector<int>& vertices) {
  std::vector<int> comp(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<bool> inside(static_cast<std::size_t>(g.num_vertices()), false);
  for (int v : vertices) inside[static_cast<std::size_t>(v)] = true;
  std::vector<std::vector<int>> out;
  for (int s : vertices) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> members, stack = {s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (auto [a, b] : g.edge_ends) {
        int w = a == v ? b : (b == v ? a : -1);
        if (w < 0 || !inside[static_cast<std::size_t>(w)] || comp[static_cast<std::size_t>(w)] >= 0) continue;
        comp[static_cast<std::size_t>(w)] = id;
        stack.push_back(w);
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<ComponentAbove> connected_components_above(const LevelGraph& lg, int L) {
  const DualGraph& g = lg.graph;
  GraphView view = subgraph_above(lg, L);
  std::vector<ComponentAbove> out;
  for (auto& members : components_of(g, view.vertices)) {
    ComponentAbove c;
    c.vertices = members;
    std::vector<bool> in(static_cast<std::size_t>(g.num_vertices()), false);
    for (int v : members) in[static_cast<std::size_t>(v)] = true;
    for (int e = 0; e < g.num_edges(); ++e) {
      auto [a, b] = g.edge_ends[static_cast<std::size_t>(e)];
      bool ia = in[static_cast<std::size_t>(a)], ib = in[static_cast<std::size_t>(b)];
      if (ia == ib) continue;
      int other = ia ? b : a;
      int lo = lg.level[static_cast<std::size_t>(other)];
      if (lo == L) c.edges_to_level.push_back(e);
      else if (lo < L) c.edges_below.push_back(e);
    }
    for (const auto& leg : g.legs)
      if (in[static_cast<std::size_t>(leg.vertex)] && leg.order < 0) c.has_marked_pole = true;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace strata
