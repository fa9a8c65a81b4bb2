#include "strata/curve_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <tuple>

namespace strata {

std::vector<HalfEdge> DualGraph::half_edges() const {
  std::vector<HalfEdge> out;
  out.reserve(static_cast<std::size_t>(num_half_edges()));
  for (int h = 0; h < num_half_edges(); ++h) out.push_back({h, half_edge_vertex(h), partner(h)});
  return out;
}

std::vector<int> DualGraph::half_edges_at(int v) const {
  std::vector<int> out;
  for (int h = 0; h < num_half_edges(); ++h)
    if (half_edge_vertex(h) == v) out.push_back(h);
  return out;
}

std::vector<int> DualGraph::legs_at(int v) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(legs.size()); ++i)
    if (legs[static_cast<std::size_t>(i)].vertex == v) out.push_back(i);
  return out;
}

int DualGraph::valence(int v) const {
  return static_cast<int>(half_edges_at(v).size() + legs_at(v).size());
}

int DualGraph::vertex_index(const std::string& id) const {
  auto it = std::find(vertex_ids.begin(), vertex_ids.end(), id);
  return it == vertex_ids.end() ? -1 : static_cast<int>(it - vertex_ids.begin());
}

int DualGraph::edge_index(const std::string& id) const {
  auto it = std::find(edge_ids.begin(), edge_ids.end(), id);
  return it == edge_ids.end() ? -1 : static_cast<int>(it - edge_ids.begin());
}

int DualGraph::half_edge_index(const std::string& id) const {
  auto colon = id.rfind(':');
  if (colon == std::string::npos) return -1;
  int e = edge_index(id.substr(0, colon));
  std::string side = id.substr(colon + 1);
  if (e < 0 || (side != "0" && side != "1")) return -1;
  return 2 * e + (side == "1" ? 1 : 0);
}

bool StratumDescriptor::holomorphic() const {
  return std::all_of(mu.begin(), mu.end(), [](int m) { return m >= 0; });
}

bool StratumDescriptor::valid_degree() const {
  return std::accumulate(mu.begin(), mu.end(), 0) == 2 * genus - 2;
}

SearchCaps SearchCaps::from_environment() {
  SearchCaps caps;
  auto read = [](const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    char* end = nullptr;
    long x = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || x < 1) return fallback;
    return static_cast<int>(x);
  };
  caps.max_vertices = read("STRATA_CAP_VERTICES", caps.max_vertices);
  caps.max_edges = read("STRATA_CAP_EDGES", caps.max_edges);
  return caps;
}

bool is_connected(const DualGraph& g) {
  const int n = g.num_vertices();
  if (n == 0) return false;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (auto [a, b] : g.edge_ends) parent[static_cast<std::size_t>(find(a))] = find(b);
  int root = find(0);
  for (int v = 1; v < n; ++v)
    if (find(v) != root) return false;
  return true;
}

int arithmetic_genus(const DualGraph& g) {
  if (!is_connected(g)) throw InvalidInput("arithmetic_genus: graph is not connected");
  return std::accumulate(g.genus.begin(), g.genus.end(), 0) + g.num_edges() - g.num_vertices() + 1;
}

ValidationReport validate_dual_graph(const DualGraph& g, const StratumDescriptor& s, bool symmetrize) {
  ValidationReport rep;
  auto& out = rep.violations;
  const int n = g.num_vertices();
  if (n == 0) {
    out.push_back("graph has no vertices");
    return rep;
  }
  if (g.vertex_ids.size() != g.genus.size()) out.push_back("vertex id list and genus list differ in length");
  for (int v = 0; v < n; ++v)
    if (g.genus[static_cast<std::size_t>(v)] < 0)
      out.push_back("vertex " + g.vertex_ids[static_cast<std::size_t>(v)] + " has negative genus");
  bool ends_ok = true;
  for (int e = 0; e < g.num_edges(); ++e)
    for (int side : {0, 1}) {
      int v = g.edge_ends[static_cast<std::size_t>(e)][static_cast<std::size_t>(side)];
      if (v < 0 || v >= n) {
        out.push_back("edge " + g.edge_ids[static_cast<std::size_t>(e)] + " has an end outside the vertex set");
        ends_ok = false;
      }
    }
  for (const auto& leg : g.legs)
    if (leg.vertex < 0 || leg.vertex >= n) {
      out.push_back("leg " + leg.id + " sits on no vertex");
      ends_ok = false;
    }
  if (!ends_ok) return rep;

  const bool connected = is_connected(g);
  if (!connected) out.push_back("graph is not connected");
  for (int v = 0; v < n; ++v) {
    const int gv = g.genus[static_cast<std::size_t>(v)];
    const int val = g.valence(v);
    const std::string& id = g.vertex_ids[static_cast<std::size_t>(v)];
    if (gv == 0 && val < 3)
      out.push_back("vertex " + id + " unstable: genus 0 with valence " + std::to_string(val) + " < 3");
    if (gv == 1 && val < 1) out.push_back("vertex " + id + " unstable: genus 1 with valence 0");
  }
  if (connected) {
    int ag = arithmetic_genus(g);
    if (ag != s.genus)
      out.push_back("arithmetic genus " + std::to_string(ag) + " differs from stratum genus " +
                    std::to_string(s.genus));
  }
  if (!s.valid_degree()) out.push_back("mu does not sum to 2g-2");
  if (g.legs.size() != s.mu.size()) {
    out.push_back("leg count " + std::to_string(g.legs.size()) + " differs from |mu| = " +
                  std::to_string(s.mu.size()));
  } else if (symmetrize) {
    std::vector<int> a, b = s.mu;
    for (const auto& leg : g.legs) a.push_back(leg.order);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) out.push_back("leg orders differ from mu as multisets");
  } else {
    for (std::size_t i = 0; i < g.legs.size(); ++i)
      if (g.legs[i].order != s.mu[i])
        out.push_back("leg " + g.legs[i].id + " has order " + std::to_string(g.legs[i].order) +
                      ", mu prescribes " + std::to_string(s.mu[i]));
  }
  return rep;
}

DualGraph make_graph(const std::vector<int>& genus, const std::vector<std::array<int, 2>>& edges,
                     const std::vector<std::pair<int, int>>& legs) {
  DualGraph g;
  g.genus = genus;
  for (std::size_t v = 0; v < genus.size(); ++v) g.vertex_ids.push_back("v" + std::to_string(v));
  g.edge_ends = edges;
  for (std::size_t e = 0; e < edges.size(); ++e) g.edge_ids.push_back("e" + std::to_string(e));
  for (std::size_t i = 0; i < legs.size(); ++i)
    g.legs.push_back({"z" + std::to_string(i + 1), legs[i].first, legs[i].second});
  return g;
}

// ---------------------------------------------------------------------------
// canonical form

namespace {

std::vector<int> vertex_invariant(const DualGraph& g, int v, bool symmetrize, const GraphDecoration& deco) {
  std::vector<int> inv;
  inv.push_back(g.genus[static_cast<std::size_t>(v)]);
  inv.push_back(deco.level ? (*deco.level)[static_cast<std::size_t>(v)] : 0);
  int loops = 0;
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.is_loop(e) && g.edge_ends[static_cast<std::size_t>(e)][0] == v) ++loops;
  inv.push_back(loops);
  auto hs = g.half_edges_at(v);
  inv.push_back(static_cast<int>(hs.size()));
  if (deco.half_edge_order) {
    std::vector<int> ords;
    for (int h : hs) ords.push_back((*deco.half_edge_order)[static_cast<std::size_t>(h)]);
    std::sort(ords.begin(), ords.end());
    inv.insert(inv.end(), ords.begin(), ords.end());
  }
  std::vector<int> legs;
  for (int i : g.legs_at(v)) legs.push_back(symmetrize ? g.legs[static_cast<std::size_t>(i)].order : i);
  std::sort(legs.begin(), legs.end());
  inv.push_back(static_cast<int>(legs.size()));
  inv.insert(inv.end(), legs.begin(), legs.end());
  return inv;
}

std::vector<int> encode(const DualGraph& g, const std::vector<int>& perm, bool symmetrize,
                        const GraphDecoration& deco) {
  const int n = g.num_vertices();
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
  std::vector<int> key;
  if (symmetrize) {
    std::vector<std::pair<int, int>> ls;
    for (const auto& leg : g.legs) ls.emplace_back(inv[static_cast<std::size_t>(leg.vertex)], leg.order);
    std::sort(ls.begin(), ls.end());
    for (auto [v, o] : ls) { key.push_back(v); key.push_back(o); }
  } else {
    for (const auto& leg : g.legs) { key.push_back(inv[static_cast<std::size_t>(leg.vertex)]); key.push_back(leg.order); }
  }
  std::vector<std::array<int, 4>> es;
  for (int e = 0; e < g.num_edges(); ++e) {
    int a = inv[static_cast<std::size_t>(g.edge_ends[static_cast<std::size_t>(e)][0])];
    int b = inv[static_cast<std::size_t>(g.edge_ends[static_cast<std::size_t>(e)][1])];
    int oa = deco.half_edge_order ? (*deco.half_edge_order)[static_cast<std::size_t>(2 * e)] : 0;
    int ob = deco.half_edge_order ? (*deco.half_edge_order)[static_cast<std::size_t>(2 * e + 1)] : 0;
    if (std::make_pair(a, oa) > std::make_pair(b, ob)) { std::swap(a, b); std::swap(oa, ob); }
    es.push_back({a, b, oa, ob});
  }
  std::sort(es.begin(), es.end());
  for (const auto& t : es) key.insert(key.end(), t.begin(), t.end());
  return key;
}

}  // namespace

std::vector<int> canonical_key(const DualGraph& g, bool symmetrize, GraphDecoration deco) {
  const int n = g.num_vertices();
  std::vector<std::pair<std::vector<int>, int>> tagged;
  for (int v = 0; v < n; ++v) tagged.emplace_back(vertex_invariant(g, v, symmetrize, deco), v);
  std::sort(tagged.begin(), tagged.end());

  std::vector<int> key = {n, g.num_edges(), static_cast<int>(g.legs.size())};
  for (const auto& [inv, v] : tagged) {
    key.push_back(static_cast<int>(inv.size()));
    key.insert(key.end(), inv.begin(), inv.end());
  }

  // blocks of equal invariants; permute only inside blocks
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < tagged.size();) {
    std::size_t j = i;
    while (j < tagged.size() && tagged[j].first == tagged[i].first) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::vector<int> perm;
  for (const auto& t : tagged) perm.push_back(t.second);
  for (auto [b, e] : blocks) std::sort(perm.begin() + static_cast<long>(b), perm.begin() + static_cast<long>(e));

  std::vector<int> best;
  bool have = false;
  // odometer over per-block permutations
  while (true) {
    auto enc = encode(g, perm, symmetrize, deco);
    if (!have || enc < best) { best = std::move(enc); have = true; }
    std::size_t k = 0;
    for (; k < blocks.size(); ++k) {
      auto [b, e] = blocks[k];
      if (std::next_permutation(perm.begin() + static_cast<long>(b), perm.begin() + static_cast<long>(e))) break;
    }
    if (k == blocks.size()) break;
  }
  key.insert(key.end(), best.begin(), best.end());
  return key;
}

bool isomorphic(const DualGraph& a, const DualGraph& b, bool symmetrize) {
  return canonical_key(a, symmetrize) == canonical_key(b, symmetrize);
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

void sorted_compositions(int total, int parts, int min_part, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int x = min_part; x * parts <= total; ++x) {
    cur.push_back(x);
    sorted_compositions(total - x, parts - 1, x, cur, out);
    cur.pop_back();
  }
}

void multisets(int total, int slots, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int x = 0; x <= total; ++x) {
    cur.push_back(x);
    multisets(total - x, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<DualGraph> enumerate_stable_graphs(const StratumDescriptor& s, int max_vertices, int max_edges,
                                               bool symmetrize, const SearchCaps& caps) {
  if (max_vertices < 1 || max_edges < 0) throw InvalidInput("enumerate_stable_graphs: bounds must be >= 1");
  if (max_vertices > caps.max_vertices)
    throw CapExceeded("max_vertices " + std::to_string(max_vertices) + " exceeds search cap " +
                          std::to_string(caps.max_vertices),
                      caps.max_vertices);
  if (max_edges > caps.max_edges)
    throw CapExceeded("max_edges " + std::to_string(max_edges) + " exceeds search cap " +
                          std::to_string(caps.max_edges),
                      caps.max_edges);
  if (s.genus < 0 || !s.valid_degree()) throw InvalidInput("enumerate_stable_graphs: mu does not sum to 2g-2");

  std::map<std::vector<int>, DualGraph> found;
  const int nlegs = s.n();
  for (int k = 1; k <= max_vertices; ++k) {
    std::vector<std::array<int, 2>> pairs;
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) pairs.push_back({i, j});
    for (int e = 0; e <= max_edges; ++e) {
      const int h1 = e - k + 1;
      if (h1 < 0 || h1 > s.genus) continue;
      std::vector<std::vector<int>> genera, mults;
      std::vector<int> cur;
      sorted_compositions(s.genus - h1, k, 0, cur, genera);
      cur.clear();
      multisets(e, static_cast<int>(pairs.size()), cur, mults);
      long long leg_choices = 1;
      for (int i = 0; i < nlegs; ++i) leg_choices *= k;
      for (const auto& gv : genera) {
        for (const auto& m : mults) {
          std::vector<std::array<int, 2>> edges;
          for (std::size_t p = 0; p < pairs.size(); ++p)
            for (int c = 0; c < m[p]; ++c) edges.push_back(pairs[p]);
          DualGraph base = make_graph(gv, edges, {});
          if (!is_connected(base)) continue;
          for (long long code = 0; code < leg_choices; ++code) {
            DualGraph g = base;
            long long c = code;
            for (int i = 0; i < nlegs; ++i) {
              g.legs.push_back({"z" + std::to_string(i + 1), static_cast<int>(c % k), s.mu[static_cast<std::size_t>(i)]});
              c /= k;
            }
            bool stable = true;
            for (int v = 0; v < k && stable; ++v) {
              int gvv = g.genus[static_cast<std::size_t>(v)], val = g.valence(v);
              if ((gvv == 0 && val < 3) || (gvv == 1 && val < 1)) stable = false;
            }
            if (!stable) continue;
            auto key = canonical_key(g, symmetrize);
            found.emplace(std::move(key), std::move(g));
          }
        }
      }
    }
  }
  std::vector<DualGraph> out;
  out.reserve(found.size());
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace strata
