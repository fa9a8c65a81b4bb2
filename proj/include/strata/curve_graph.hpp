#pragma once
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace strata {

// Half-edge h sits on edge h / 2, side h % 2; its partner is h ^ 1.
struct HalfEdge {
  int id;
  int vertex;
  int partner;
};

struct Leg {
  std::string id;
  int vertex;
  int order;
};

struct DualGraph {
  std::vector<std::string> vertex_ids;
  std::vector<int> genus;
  std::vector<std::string> edge_ids;
  std::vector<std::array<int, 2>> edge_ends;
  std::vector<Leg> legs;

  int num_vertices() const { return static_cast<int>(genus.size()); }
  int num_edges() const { return static_cast<int>(edge_ends.size()); }
  int num_half_edges() const { return 2 * num_edges(); }

  static int partner(int h) { return h ^ 1; }
  static int edge_of(int h) { return h >> 1; }
  int half_edge_vertex(int h) const { return edge_ends[h >> 1][h & 1]; }
  std::string half_edge_id(int h) const { return edge_ids[h >> 1] + ":" + std::to_string(h & 1); }
  std::vector<HalfEdge> half_edges() const;

  bool is_loop(int e) const { return edge_ends[e][0] == edge_ends[e][1]; }
  std::vector<int> half_edges_at(int v) const;
  std::vector<int> legs_at(int v) const;
  int valence(int v) const;  // incident half-edges plus legs
  int vertex_index(const std::string& id) const;  // -1 if absent
  int edge_index(const std::string& id) const;
  int half_edge_index(const std::string& id) const;  // "<edge>:<side>"
};

struct StratumDescriptor {
  int genus = 0;
  std::vector<int> mu;

  int n() const { return static_cast<int>(mu.size()); }
  bool holomorphic() const;
  bool valid_degree() const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, int cap_value)
      : std::runtime_error(what), cap(cap_value) {}
  int cap;
};

struct SearchCaps {
  int max_vertices = 6;
  int max_edges = 8;
  // Reads STRATA_CAP_VERTICES / STRATA_CAP_EDGES when set.
  static SearchCaps from_environment();
};

bool is_connected(const DualGraph& g);

ValidationReport validate_dual_graph(const DualGraph& g, const StratumDescriptor& s,
                                     bool symmetrize = false);

int arithmetic_genus(const DualGraph& g);

std::vector<DualGraph> enumerate_stable_graphs(const StratumDescriptor& s, int max_vertices,
                                               int max_edges, bool symmetrize = false,
                                               const SearchCaps& caps = SearchCaps::from_environment());

// Optional decorations participating in the canonical form.
struct GraphDecoration {
  const std::vector<int>* level = nullptr;       // per vertex
  const std::vector<int>* half_edge_order = nullptr;  // per half-edge
};

// Lexicographically minimal encoding over vertex relabelings; equal keys iff
// isomorphic (respecting leg labels, or leg orders when symmetrize is set).
std::vector<int> canonical_key(const DualGraph& g, bool symmetrize = false,
                               GraphDecoration deco = {});

bool isomorphic(const DualGraph& a, const DualGraph& b, bool symmetrize = false);

// Vertex ids v0.., edge ids e0.., leg ids z1.. (in mu order).
DualGraph make_graph(const std::vector<int>& genus, const std::vector<std::array<int, 2>>& edges,
                     const std::vector<std::pair<int, int>>& legs);

}  // namespace strata
