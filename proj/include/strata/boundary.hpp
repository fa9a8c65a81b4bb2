#pragma once
#include "strata/curve_graph.hpp"
#include "strata/level_order.hpp"
#include "strata/residues.hpp"
#include "strata/twisted_type.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace strata {

struct SignatureOfVertex {
  int genus = 0;
  std::vector<int> orders;
};

SignatureOfVertex vertex_signature(const TwistedDiffType& t, int v);

// Throws InvalidInput on a degree mismatch.
int stratum_dimension(const SignatureOfVertex& sig, bool projectivized);
int stratum_dimension(const StratumDescriptor& s, bool projectivized);

struct BoundaryStratumRecord {
  DualGraph graph;
  LevelGraph level_graph;
  TwistedDiffType type;
  Feasibility feasibility;
  int dim = 0;
  int pi2_fiber_dim = 0;
  int grc_extra_rank = 0;  // GRC rows modulo residue-theorem and pairing rows
  int extra_rank = 0;      // all rows modulo residue-theorem rows
  bool dominated = false;
  std::vector<std::string> tags;
  std::vector<int> key;    // canonical form of (graph, levels, orders)
};

int top_level_components(const LevelGraph& lg);

// Throws InvalidInput when the record is infeasible.
int locus_dimension(const BoundaryStratumRecord& rec);

// Throws InvalidInput when no feasible configuration exists.
int pi2_fiber_dimension(const DualGraph& g, const StratumDescriptor& s, std::uint64_t seed = 0);

// A loop plus at least one further edge.
bool dominated_by_loop(const DualGraph& g);

// Separating genus-0 component with a unique zero whose every node residue is
// isolated by the global residue condition; returns the vertex or -1.
int separating_genus_zero_vertex(const LevelGraph& lg, const TwistedDiffType& t, const StratumDescriptor& s);

// For a single-zero holomorphic stratum: unique non-strict local minimum carrying the leg.
bool single_zero_minimum_ok(const LevelGraph& lg);

struct BoundaryOptions {
  bool prune_dominated = true;
  bool prune_separating = true;
  bool prune_single_zero = true;
  bool include_grc = true;
  bool symmetrize = false;
  std::uint64_t seed = 0;
};

struct Rejection {
  DualGraph graph;
  std::optional<LevelGraph> level_graph;
  std::optional<TwistedDiffType> type;
  std::string reason;
};

struct BoundaryReport {
  StratumDescriptor stratum;
  int target_dim = 0;  // projectivized stratum dimension minus one
  std::vector<BoundaryStratumRecord> records;
  std::vector<Rejection> rejections;
  std::map<int, int> counts_by_dim;  // non-dominated records
  int divisorial_count = 0;
  int graphs_examined = 0;
  int dominated_graphs = 0;

  std::vector<const BoundaryStratumRecord*> divisorial() const;
  std::string summary() const;
};

BoundaryReport enumerate_boundary(const StratumDescriptor& s, int max_vertices, int max_edges,
                                  const BoundaryOptions& opt = {},
                                  const SearchCaps& caps = SearchCaps::from_environment());

}  // namespace strata
