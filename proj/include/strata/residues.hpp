#pragma once
#include "strata/level_order.hpp"
#include "strata/linalg.hpp"
#include "strata/polynomial.hpp"
#include "strata/rational.hpp"
#include "strata/twisted_type.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace strata {

struct PolarSite {
  bool is_leg = false;
  int index = 0;  // half-edge or leg index
  int vertex = 0;
  int order = 0;
  std::string id;
};

enum class RowKind { Pairing, ResidueTheorem, GlobalResidue };
std::string to_string(RowKind k);

struct Constraint {
  RowKind kind;
  int level = 0;               // GRC rows: the level L
  std::vector<int> support;    // vertices of Y (GRC), {v} (residue theorem), {edge} (pairing)
  vec_type<Rational> coeffs;   // one entry per site
};

struct ResidueSystemOptions {
  bool include_grc = true;
};

struct ResidueSystem {
  LevelGraph level_graph;
  TwistedDiffType type;
  std::vector<PolarSite> sites;
  std::vector<Constraint> constraints;
  std::vector<int> nonzero_sites;         // indices into sites, order exactly -1
  std::vector<int> obstructed_vertices;   // genus 0, one positive site, >= 2 polar sites

  int site_index(const std::string& id) const;
  int site_of_half_edge(int h) const;
  std::vector<int> sites_at(int v) const;
  std::vector<std::string> site_names() const;
  mat_type<Rational> matrix() const;
  mat_type<Rational> matrix(RowKind k) const;
  // rank(all rows) - rank(residue-theorem rows)
  int extra_rank() const;
  // rank of GRC rows modulo residue-theorem and pairing rows
  int grc_rank_modulo_local() const;
};

template <class Value>
struct Assignment {
  std::map<std::string, Value> values;
};
using ResidueAssignment = Assignment<Rational>;
using ComplexResidueAssignment = Assignment<GaussianRational>;

struct ScalingAssignment {
  std::map<std::string, Rational> values;  // vertex id -> lambda
};

enum class Verdict { Feasible, NecessaryConditionsFeasible, Infeasible, Undecided };
std::string to_string(Verdict v);

struct Feasibility {
  Verdict verdict = Verdict::Undecided;
  std::optional<ResidueAssignment> witness;
  std::optional<ScalingAssignment> scaling;
  std::string certificate;
  std::vector<std::string> forced_zero;
  std::vector<std::string> assumptions;
  std::vector<std::string> eliminated;  // integer polynomial conditions
  int kernel_dimension = 0;

  bool feasible() const { return verdict == Verdict::Feasible || verdict == Verdict::NecessaryConditionsFeasible; }
};

ResidueSystem build_residue_system(const LevelGraph& lg, const TwistedDiffType& t, const StratumDescriptor& s,
                                   ResidueSystemOptions opt = {});

// Throws InvalidInput on a missing site.
bool check_assignment(const ResidueSystem& sys, const ResidueAssignment& a);
bool check_assignment(const ResidueSystem& sys, const ComplexResidueAssignment& a);

Feasibility feasible_residues(const ResidueSystem& sys, std::uint64_t seed = 0);

Feasibility feasible_with_scalings(const LevelGraph& lg, const TwistedDiffType& t, const StratumDescriptor& s,
                                   const ResidueAssignment& base, bool want_polynomials = false,
                                   std::uint64_t seed = 0);

// Eliminated conditions on the base residues (primitive integer polynomials in the
// free residue variables, after solving the residue-theorem and pairing rows).
struct EliminationResult {
  std::vector<std::string> variable_names;
  std::vector<Polynomial> conditions;
  std::vector<std::string> strings;
};
EliminationResult scaling_elimination(const ResidueSystem& sys);

struct Configuration {
  LevelGraph level_graph;
  TwistedDiffType type;
  Feasibility feasibility;
};

struct MembershipOptions {
  bool include_grc = true;
  std::uint64_t seed = 0;
};

// Every (type, compatible level graph) pair with its feasibility verdict.
std::vector<Configuration> evaluate_configurations(const DualGraph& g, const StratumDescriptor& s,
                                                   MembershipOptions opt = {});
// Feasible configurations only.
std::vector<Configuration> decide_membership(const DualGraph& g, const StratumDescriptor& s,
                                             MembershipOptions opt = {});

extern const char* const kPositiveGenusAssumption;
extern const char* const kGenusZeroAssumption;

}  // namespace strata
