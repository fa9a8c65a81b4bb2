#include "strata/twisted_type.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace strata {

std::vector<int> TwistedDiffType::vertex_orders(int v) const {
  std::vector<int> out;
  for (int i : graph.legs_at(v)) out.push_back(graph.legs[static_cast<std::size_t>(i)].order);
  for (int h : graph.half_edges_at(v)) out.push_back(order(h));
  return out;
}

CheckReport check_type(const TwistedDiffType& t, const StratumDescriptor& s, bool symmetrize) {
  CheckReport rep;
  const DualGraph& g = t.graph;
  if (static_cast<int>(t.half_edge_order.size()) != g.num_half_edges()) {
    rep.violations.push_back("order vector length differs from the half-edge count");
    return rep;
  }
  // condition (0)
  if (g.legs.size() != s.mu.size()) {
    rep.violations.push_back("(0) leg count differs from |mu|");
  } else if (symmetrize) {
    std::vector<int> a, b = s.mu;
    for (const auto& leg : g.legs) a.push_back(leg.order);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) rep.violations.push_back("(0) leg orders differ from mu as multisets");
  } else {
    for (std::size_t i = 0; i < g.legs.size(); ++i)
      if (g.legs[i].order != s.mu[i]) rep.violations.push_back("(0) leg " + g.legs[i].id + " order differs from mu");
  }
  // condition (1)
  for (int e = 0; e < g.num_edges(); ++e)
    if (t.order(2 * e) + t.order(2 * e + 1) != -2)
      rep.violations.push_back("(1) edge " + g.edge_ids[static_cast<std::size_t>(e)] + " orders " +
                               std::to_string(t.order(2 * e)) + "," + std::to_string(t.order(2 * e + 1)) +
                               " do not sum to -2");
  // canonical degree per vertex
  for (int v = 0; v < g.num_vertices(); ++v) {
    auto ords = t.vertex_orders(v);
    int deg = std::accumulate(ords.begin(), ords.end(), 0);
    int want = 2 * g.genus[static_cast<std::size_t>(v)] - 2;
    if (deg != want)
      rep.violations.push_back("degree at " + g.vertex_ids[static_cast<std::size_t>(v)] + " is " +
                               std::to_string(deg) + ", expected " + std::to_string(want));
  }
  return rep;
}

bool check_condition3(const LevelGraph& lg, const TwistedDiffType& t) {
  const DualGraph& g = t.graph;
  for (int h = 0; h < g.num_half_edges(); ++h) {
    int v1 = g.half_edge_vertex(h), v2 = g.half_edge_vertex(DualGraph::partner(h));
    int o = t.order(h);
    if (lg.above_or_equal(v1, v2) != (o >= -1)) return false;
    if (lg.same_level(v1, v2) != (o == -1)) return false;
  }
  return true;
}

namespace {

void compositions(int total, int parts, std::vector<int>& cur, const std::function<void()>& emit) {
  if (parts == 0) {
    if (total == 0) emit();
    return;
  }
  if (parts == 1) {
    cur.push_back(total);
    emit();
    cur.pop_back();
    return;
  }
  for (int x = 0; x <= total; ++x) {
    cur.push_back(x);
    compositions(total - x, parts - 1, cur, emit);
    cur.pop_back();
  }
}

void types_for_levels(const DualGraph& g, const std::vector<int>& level, std::vector<std::vector<int>>& out) {
  const int n = g.num_vertices();
  std::vector<int> ord(static_cast<std::size_t>(g.num_half_edges()), 0);
  std::vector<int> vertices(static_cast<std::size_t>(n));
  std::iota(vertices.begin(), vertices.end(), 0);
  std::stable_sort(vertices.begin(), vertices.end(),
                   [&](int a, int b) { return level[static_cast<std::size_t>(a)] > level[static_cast<std::size_t>(b)]; });
  // horizontal edges are (-1,-1)
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.edge_ends[static_cast<std::size_t>(e)];
    if (level[static_cast<std::size_t>(a)] == level[static_cast<std::size_t>(b)]) ord[static_cast<std::size_t>(2 * e)] = ord[static_cast<std::size_t>(2 * e + 1)] = -1;
  }
  std::function<void(std::size_t)> step = [&](std::size_t idx) {
    if (idx == vertices.size()) {
      out.push_back(ord);
      return;
    }
    const int v = vertices[idx];
    int budget = 2 * g.genus[static_cast<std::size_t>(v)] - 2;
    for (int i : g.legs_at(v)) budget -= g.legs[static_cast<std::size_t>(i)].order;
    std::vector<int> down;
    for (int h : g.half_edges_at(v)) {
      int w = g.half_edge_vertex(DualGraph::partner(h));
      int lv = level[static_cast<std::size_t>(v)], lw = level[static_cast<std::size_t>(w)];
      if (lv == lw || lv < lw) budget -= ord[static_cast<std::size_t>(h)];  // fixed: horizontal or lower branch
      else down.push_back(h);
    }
    if (budget < 0) return;
    std::vector<int> cur;
    compositions(budget, static_cast<int>(down.size()), cur, [&]() {
      for (std::size_t k = 0; k < down.size(); ++k) {
        ord[static_cast<std::size_t>(down[k])] = cur[k];
        ord[static_cast<std::size_t>(DualGraph::partner(down[k]))] = -2 - cur[k];
      }
      step(idx + 1);
    });
  };
  step(0);
}

}  // namespace

std::vector<TwistedDiffType> types_for_level_graph(const LevelGraph& lg) {
  std::vector<std::vector<int>> raw;
  types_for_levels(lg.graph, lg.level, raw);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<TwistedDiffType> out;
  for (auto& o : raw) out.push_back({lg.graph, std::move(o)});
  return out;
}

std::vector<TwistedDiffType> enumerate_twisted_types(const DualGraph& g, const StratumDescriptor& s) {
  std::vector<std::vector<int>> raw;
  for (const auto& lg : enumerate_level_structures(g)) types_for_levels(g, lg.level, raw);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<TwistedDiffType> out;
  for (auto& o : raw) {
    TwistedDiffType t{g, std::move(o)};
    if (check_type(t, s).ok()) out.push_back(std::move(t));
  }
  return out;
}

InducedOrder induced_partial_order(const TwistedDiffType& t) {
  InducedOrder res;
  const DualGraph& g = t.graph;
  for (int e = 0; e < g.num_edges(); ++e) {
    int h = 2 * e;
    int o = t.order(h);
    int a = g.half_edge_vertex(h), b = g.half_edge_vertex(h + 1);
    if (o == -1) res.relations.push_back({a, b, true});
    else if (o >= 0) res.relations.push_back({a, b, false});
    else res.relations.push_back({b, a, false});
  }
  for (auto& lg : enumerate_level_structures(g))
    if (check_condition3(lg, t)) res.compatible.push_back(std::move(lg));
  return res;
}

std::vector<LevelGraph> compatible_level_graphs(const TwistedDiffType& t) {
  return induced_partial_order(t).compatible;
}

std::vector<int> nonstrict_local_minima(const LevelGraph& lg) {
  std::vector<int> out;
  const DualGraph& g = lg.graph;
  for (int v = 0; v < g.num_vertices(); ++v) {
    bool minimum = true;
    for (auto [a, b] : g.edge_ends) {
      int w = a == v ? b : (b == v ? a : -1);
      if (w >= 0 && !lg.above_or_equal(w, v)) minimum = false;
    }
    if (minimum) out.push_back(v);
  }
  return out;
}

}  // namespace strata
