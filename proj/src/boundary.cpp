#include "strata/boundary.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace strata {

SignatureOfVertex vertex_signature(const TwistedDiffType& t, int v) {
  return {t.graph.genus[static_cast<std::size_t>(v)], t.vertex_orders(v)};
}

int stratum_dimension(const SignatureOfVertex& sig, bool projectivized) {
  if (std::accumulate(sig.orders.begin(), sig.orders.end(), 0) != 2 * sig.genus - 2)
    throw InvalidInput("stratum_dimension: orders do not sum to 2g-2");
  const int n = static_cast<int>(sig.orders.size());
  const bool holomorphic = std::all_of(sig.orders.begin(), sig.orders.end(), [](int m) { return m >= 0; });
  int d = holomorphic ? 2 * sig.genus - 1 + n : 2 * sig.genus - 2 + n;
  return projectivized ? d - 1 : d;
}

int stratum_dimension(const StratumDescriptor& s, bool projectivized) {
  return stratum_dimension(SignatureOfVertex{s.genus, s.mu}, projectivized);
}

int top_level_components(const LevelGraph& lg) {
  return static_cast<int>(components_of(lg.graph, at_level(lg, 0).vertices).size());
}

namespace {

int dimension_from(const TwistedDiffType& t, const LevelGraph& lg, int extra_rank) {
  int total = 0;
  for (int v = 0; v < t.graph.num_vertices(); ++v) total += stratum_dimension(vertex_signature(t, v), false);
  return total - 1 - extra_rank - (lg.num_levels() - 1);
}

}  // namespace

int locus_dimension(const BoundaryStratumRecord& rec) {
  if (!rec.feasibility.feasible()) throw InvalidInput("locus_dimension: record is not feasible");
  StratumDescriptor s{arithmetic_genus(rec.graph), {}};
  for (const auto& leg : rec.graph.legs) s.mu.push_back(leg.order);
  ResidueSystem sys = build_residue_system(rec.level_graph, rec.type, s);
  return dimension_from(rec.type, rec.level_graph, sys.extra_rank());
}

int pi2_fiber_dimension(const DualGraph& g, const StratumDescriptor& s, std::uint64_t seed) {
  auto configs = decide_membership(g, s, {true, seed});
  if (configs.empty()) throw InvalidInput("pi2_fiber_dimension: no feasible configuration (empty preimage)");
  int best = 0;
  for (const auto& c : configs) best = std::max(best, top_level_components(c.level_graph) - 1);
  return best;
}

bool dominated_by_loop(const DualGraph& g) {
  if (g.num_edges() < 2) return false;
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.is_loop(e)) return true;
  return false;
}

namespace {

bool is_bridge(const DualGraph& g, int e) {
  if (g.is_loop(e)) return false;
  DualGraph h = g;
  h.edge_ends.erase(h.edge_ends.begin() + e);
  h.edge_ids.erase(h.edge_ids.begin() + e);
  return !is_connected(h);
}

}  // namespace

int separating_genus_zero_vertex(const LevelGraph& lg, const TwistedDiffType& t, const StratumDescriptor& s) {
  if (!s.holomorphic()) return -1;
  const DualGraph& g = t.graph;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.genus[static_cast<std::size_t>(v)] != 0) continue;
    auto hs = g.half_edges_at(v);
    if (hs.size() < 2) continue;
    auto ords = t.vertex_orders(v);
    if (std::count_if(ords.begin(), ords.end(), [](int o) { return o > 0; }) != 1) continue;
    bool ok = true;
    for (int h : hs)
      if (t.order(h) > -1 || !is_bridge(g, DualGraph::edge_of(h))) ok = false;
    if (!ok) continue;
    // every upper component touching v meets v's level through exactly one node
    const int L = lg.level[static_cast<std::size_t>(v)];
    for (const auto& comp : connected_components_above(lg, L)) {
      bool touches = false;
      for (int e : comp.edges_to_level) {
        auto [a, b] = g.edge_ends[static_cast<std::size_t>(e)];
        if (a == v || b == v) touches = true;
      }
      if (touches && (comp.edges_to_level.size() != 1 || comp.has_marked_pole)) ok = false;
    }
    if (ok) return v;
  }
  return -1;
}

bool single_zero_minimum_ok(const LevelGraph& lg) {
  const DualGraph& g = lg.graph;
  if (g.legs.size() != 1) return true;
  auto minima = nonstrict_local_minima(lg);
  return minima.size() == 1 && minima[0] == g.legs[0].vertex;
}

std::vector<const BoundaryStratumRecord*> BoundaryReport::divisorial() const {
  std::vector<const BoundaryStratumRecord*> out;
  for (const auto& r : records)
    if (!r.dominated && r.dim == target_dim) out.push_back(&r);
  return out;
}

std::string BoundaryReport::summary() const {
  return std::to_string(divisorial_count) + " divisorial loci";
}

BoundaryReport enumerate_boundary(const StratumDescriptor& s, int max_vertices, int max_edges,
                                  const BoundaryOptions& opt, const SearchCaps& caps) {
  BoundaryReport rep;
  rep.stratum = s;
  rep.target_dim = stratum_dimension(s, true) - 1;
  const bool single_zero = s.mu.size() == 1 && s.mu[0] == 2 * s.genus - 2 && s.genus >= 1;

  std::set<std::vector<int>> seen;
  for (const auto& g : enumerate_stable_graphs(s, max_vertices, max_edges, opt.symmetrize, caps)) {
    if (g.num_edges() == 0) continue;  // the open stratum
    ++rep.graphs_examined;
    const bool dominated = dominated_by_loop(g);
    if (dominated) {
      ++rep.dominated_graphs;
      if (opt.prune_dominated) {
        rep.rejections.push_back({g, std::nullopt, std::nullopt, "dominated: a loop added to a graph with fewer nodes"});
        continue;
      }
    }
    for (const auto& t : enumerate_twisted_types(g, s)) {
      for (const auto& lg : compatible_level_graphs(t)) {
        if (opt.prune_single_zero && single_zero && !single_zero_minimum_ok(lg)) {
          rep.rejections.push_back({g, lg, t, "level graph lacks a unique minimum at the marked vertex"});
          continue;
        }
        if (opt.prune_separating) {
          int v = separating_genus_zero_vertex(lg, t, s);
          if (v >= 0) {
            rep.rejections.push_back({g, lg, t,
                                      "residue-infeasible: separating genus-0 component " +
                                          g.vertex_ids[static_cast<std::size_t>(v)] +
                                          " with a unique zero has all node residues forced to zero"});
            continue;
          }
        }
        ResidueSystem sys = build_residue_system(lg, t, s, {opt.include_grc});
        Feasibility f = feasible_residues(sys, opt.seed);
        if (!f.feasible()) {
          rep.rejections.push_back({g, lg, t, "residue-infeasible: " + f.certificate});
          continue;
        }
        BoundaryStratumRecord rec;
        rec.key = canonical_key(g, opt.symmetrize, {&lg.level, &t.half_edge_order});
        if (!seen.insert(rec.key).second) continue;
        rec.graph = g;
        rec.level_graph = lg;
        rec.type = t;
        rec.extra_rank = sys.extra_rank();
        rec.grc_extra_rank = sys.grc_rank_modulo_local();
        rec.dim = dimension_from(t, lg, rec.extra_rank);
        rec.pi2_fiber_dim = top_level_components(lg) - 1;
        rec.dominated = dominated;
        if (dominated) rec.tags.push_back("dominated");
        if (rec.grc_extra_rank > 0) rec.tags.push_back("heuristic");
        if (f.verdict == Verdict::NecessaryConditionsFeasible) rec.tags.push_back("necessary-conditions");
        if (std::find(f.assumptions.begin(), f.assumptions.end(), std::string(kPositiveGenusAssumption)) !=
            f.assumptions.end())
          rec.tags.push_back("positive-genus-residue-assumption");
        rec.tags.push_back("components: unknown");
        rec.feasibility = std::move(f);
        rep.records.push_back(std::move(rec));
      }
    }
  }
  std::stable_sort(rep.records.begin(), rep.records.end(),
                   [](const BoundaryStratumRecord& a, const BoundaryStratumRecord& b) { return a.dim > b.dim; });
  for (const auto& r : rep.records)
    if (!r.dominated) ++rep.counts_by_dim[r.dim];
  rep.divisorial_count = static_cast<int>(rep.divisorial().size());
  return rep;
}

}  // namespace strata
