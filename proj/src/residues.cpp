#include "strata/residues.hpp"

#include "strata/p1_forms.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace strata {

const char* const kPositiveGenusAssumption =
    "positive-genus components: any sum-zero residue tuple with nonzero simple-pole entries is assumed realizable";
const char* const kGenusZeroAssumption =
    "genus-0 components: residue tuple satisfies the necessary conditions; no explicit realization produced";

std::string to_string(RowKind k) {
  switch (k) {
    case RowKind::Pairing: return "pairing";
    case RowKind::ResidueTheorem: return "residue-theorem";
    case RowKind::GlobalResidue: return "global-residue";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Feasible: return "feasible";
    case Verdict::NecessaryConditionsFeasible: return "necessary-conditions feasible";
    case Verdict::Infeasible: return "infeasible";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

int ResidueSystem::site_index(const std::string& id) const {
  for (std::size_t i = 0; i < sites.size(); ++i)
    if (sites[i].id == id) return static_cast<int>(i);
  return -1;
}

int ResidueSystem::site_of_half_edge(int h) const {
  for (std::size_t i = 0; i < sites.size(); ++i)
    if (!sites[i].is_leg && sites[i].index == h) return static_cast<int>(i);
  return -1;
}

std::vector<int> ResidueSystem::sites_at(int v) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < sites.size(); ++i)
    if (sites[i].vertex == v) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<std::string> ResidueSystem::site_names() const {
  std::vector<std::string> out;
  for (const auto& s : sites) out.push_back(s.id);
  return out;
}

namespace {

mat_type<Rational> stack_rows(const std::vector<const Constraint*>& rows, Eigen::Index cols) {
  mat_type<Rational> m(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i]->coeffs.transpose();
  return m;
}

}  // namespace

mat_type<Rational> ResidueSystem::matrix() const {
  std::vector<const Constraint*> rows;
  for (const auto& c : constraints) rows.push_back(&c);
  return stack_rows(rows, static_cast<Eigen::Index>(sites.size()));
}

mat_type<Rational> ResidueSystem::matrix(RowKind k) const {
  std::vector<const Constraint*> rows;
  for (const auto& c : constraints)
    if (c.kind == k) rows.push_back(&c);
  return stack_rows(rows, static_cast<Eigen::Index>(sites.size()));
}

int ResidueSystem::extra_rank() const {
  mat_type<Rational> rt = matrix(RowKind::ResidueTheorem);
  std::vector<const Constraint*> rest;
  for (const auto& c : constraints)
    if (c.kind != RowKind::ResidueTheorem) rest.push_back(&c);
  return static_cast<int>(relative_rank<Rational>(rt, stack_rows(rest, static_cast<Eigen::Index>(sites.size()))));
}

int ResidueSystem::grc_rank_modulo_local() const {
  std::vector<const Constraint*> local;
  for (const auto& c : constraints)
    if (c.kind != RowKind::GlobalResidue) local.push_back(&c);
  return static_cast<int>(relative_rank<Rational>(stack_rows(local, static_cast<Eigen::Index>(sites.size())),
                                                  matrix(RowKind::GlobalResidue)));
}

ResidueSystem build_residue_system(const LevelGraph& lg, const TwistedDiffType& t, const StratumDescriptor& s,
                                   ResidueSystemOptions opt) {
  const DualGraph& g = t.graph;
  if (lg.graph.num_vertices() != g.num_vertices() || lg.graph.edge_ends != g.edge_ends ||
      static_cast<int>(lg.level.size()) != g.num_vertices())
    throw InvalidInput("build_residue_system: level graph and type live on different graphs");
  if (!check_type(t, s).ok()) throw InvalidInput("build_residue_system: type fails check_type");
  if (!check_condition3(lg, t)) throw InvalidInput("build_residue_system: type violates condition (3) on this level graph");

  ResidueSystem sys;
  sys.level_graph = lg;
  sys.type = t;
  for (int h = 0; h < g.num_half_edges(); ++h)
    if (t.order(h) <= -1) sys.sites.push_back({false, h, g.half_edge_vertex(h), t.order(h), g.half_edge_id(h)});
  for (int i = 0; i < static_cast<int>(g.legs.size()); ++i) {
    const Leg& leg = g.legs[static_cast<std::size_t>(i)];
    if (leg.order <= -1) sys.sites.push_back({true, i, leg.vertex, leg.order, leg.id});
  }
  const Eigen::Index n = static_cast<Eigen::Index>(sys.sites.size());
  auto blank = [n]() { return vec_type<Rational>::Zero(n).eval(); };

  for (int e = 0; e < g.num_edges(); ++e)
    if (t.order(2 * e) == -1) {
      Constraint c{RowKind::Pairing, lg.level[static_cast<std::size_t>(g.edge_ends[static_cast<std::size_t>(e)][0])], {e}, blank()};
      c.coeffs(sys.site_of_half_edge(2 * e)) += 1;
      c.coeffs(sys.site_of_half_edge(2 * e + 1)) += 1;
      sys.constraints.push_back(std::move(c));
    }
  for (int v = 0; v < g.num_vertices(); ++v) {
    auto at = sys.sites_at(v);
    if (at.empty()) continue;
    Constraint c{RowKind::ResidueTheorem, lg.level[static_cast<std::size_t>(v)], {v}, blank()};
    for (int i : at) c.coeffs(i) = 1;
    sys.constraints.push_back(std::move(c));
  }
  if (opt.include_grc) {
    for (int L = -1; L >= lg.min_level(); --L)
      for (const auto& comp : connected_components_above(lg, L)) {
        if (comp.has_marked_pole || comp.edges_to_level.empty()) continue;
        Constraint c{RowKind::GlobalResidue, L, comp.vertices, blank()};
        std::set<int> members(comp.vertices.begin(), comp.vertices.end());
        for (int e : comp.edges_to_level) {
          int h = members.count(g.edge_ends[static_cast<std::size_t>(e)][0]) ? 2 * e + 1 : 2 * e;
          c.coeffs(sys.site_of_half_edge(h)) += 1;
        }
        sys.constraints.push_back(std::move(c));
      }
  }
  for (std::size_t i = 0; i < sys.sites.size(); ++i)
    if (sys.sites[i].order == -1) sys.nonzero_sites.push_back(static_cast<int>(i));
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.genus[static_cast<std::size_t>(v)] != 0) continue;
    auto ords = t.vertex_orders(v);
    auto positive = std::count_if(ords.begin(), ords.end(), [](int o) { return o > 0; });
    if (positive == 1 && sys.sites_at(v).size() >= 2) sys.obstructed_vertices.push_back(v);
  }
  return sys;
}

namespace {

template <class Value>
bool check_assignment_impl(const ResidueSystem& sys, const Assignment<Value>& a) {
  std::vector<Value> x;
  for (const auto& s : sys.sites) {
    auto it = a.values.find(s.id);
    if (it == a.values.end()) throw InvalidInput("assignment misses site " + s.id);
    x.push_back(it->second);
  }
  for (const auto& c : sys.constraints) {
    Value acc{};
    for (std::size_t i = 0; i < x.size(); ++i)
      if (c.coeffs(static_cast<Eigen::Index>(i)) != 0) acc = acc + c.coeffs(static_cast<Eigen::Index>(i)) * x[i];
    if (!is_zero(acc)) return false;
  }
  for (int i : sys.nonzero_sites)
    if (is_zero(x[static_cast<std::size_t>(i)])) return false;
  for (int v : sys.obstructed_vertices) {
    bool any = false;
    for (int i : sys.sites_at(v)) any = any || !is_zero(x[static_cast<std::size_t>(i)]);
    if (!any) return false;
  }
  return true;
}

// Point of the column span of K avoiding every listed hyperplane (given by rows of K).
vec_type<Rational> generic_point(const mat_type<Rational>& K, const std::vector<Eigen::Index>& must_be_nonzero,
                                 std::uint64_t seed) {
  const Eigen::Index d = K.cols();
  auto ok = [&](const vec_type<Rational>& x) {
    for (auto i : must_be_nonzero)
      if (x(i) == 0) return false;
    return true;
  };
  if (d == 0) return vec_type<Rational>::Zero(K.rows());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int attempt = 0; attempt < 32; ++attempt) {
    vec_type<Rational> c(d);
    for (Eigen::Index j = 0; j < d; ++j) c(j) = coef(rng);
    vec_type<Rational> x = K * c;
    if (ok(x)) return x;
  }
  // moment curve: each hyperplane meets it in at most d - 1 points
  const long limit = static_cast<long>(must_be_nonzero.size()) * static_cast<long>(d) + 1;
  for (long t = 1; t <= limit; ++t) {
    vec_type<Rational> c(d);
    Rational p = 1;
    for (Eigen::Index j = 0; j < d; ++j) { c(j) = p; p *= t; }
    vec_type<Rational> x = K * c;
    if (ok(x)) return x;
  }
  throw std::logic_error("generic_point: no point found off the hyperplanes");
}

// Genus-0 component with at most two polar sites: realize the witness by a scaled
// differential on P^1.
bool realize_genus_zero(const ResidueSystem& sys, int v, const vec_type<Rational>& x, std::uint64_t seed) {
  auto at = sys.sites_at(v);
  if (at.size() <= 1) return true;
  if (at.size() > 2) return false;
  const Rational& r = x(at[0]);
  if (r == 0) return false;
  auto ords = sys.type.vertex_orders(v);
  // position of site at[0] inside vertex_orders
  const DualGraph& g = sys.type.graph;
  std::vector<std::pair<bool, int>> labels;
  for (int i : g.legs_at(v)) labels.emplace_back(true, i);
  for (int h : g.half_edges_at(v)) labels.emplace_back(false, h);
  std::size_t pos = 0;
  for (; pos < labels.size(); ++pos)
    if (labels[pos].first == sys.sites[static_cast<std::size_t>(at[0])].is_leg &&
        labels[pos].second == sys.sites[static_cast<std::size_t>(at[0])].index)
      break;
  for (int attempt = 0; attempt < 8; ++attempt) {
    auto pts = random_distinct_rationals(ords.size(), seed + static_cast<std::uint64_t>(attempt));
    std::vector<SupportEntry> support;
    for (std::size_t i = 0; i < ords.size(); ++i) support.push_back({P1Point::finite(pts[i]), ords[i]});
    auto w = build_p1_differential(support);
    Rational rho = residue_at(w, support[pos].point);
    if (rho != 0) {
      auto scaled = w.scaled(r / rho);
      return residue_at(scaled, support[pos].point) == r;
    }
  }
  return false;
}

}  // namespace

bool check_assignment(const ResidueSystem& sys, const ResidueAssignment& a) { return check_assignment_impl(sys, a); }
bool check_assignment(const ResidueSystem& sys, const ComplexResidueAssignment& a) {
  return check_assignment_impl(sys, a);
}

Feasibility feasible_residues(const ResidueSystem& sys, std::uint64_t seed) {
  Feasibility f;
  const DualGraph& g = sys.type.graph;
  mat_type<Rational> K = nullspace<Rational>(sys.matrix());
  f.kernel_dimension = static_cast<int>(K.cols());
  for (std::size_t i = 0; i < sys.sites.size(); ++i)
    if (row_is_zero<Rational>(K, static_cast<Eigen::Index>(i))) f.forced_zero.push_back(sys.sites[i].id);

  std::vector<Eigen::Index> hyper;
  for (int i : sys.nonzero_sites) {
    if (row_is_zero<Rational>(K, i)) {
      f.verdict = Verdict::Infeasible;
      f.certificate = "simple-pole site " + sys.sites[static_cast<std::size_t>(i)].id + " is forced to residue zero";
      return f;
    }
    hyper.push_back(i);
  }
  for (int v : sys.obstructed_vertices) {
    Eigen::Index pick = -1;
    for (int i : sys.sites_at(v))
      if (!row_is_zero<Rational>(K, i)) { pick = i; break; }
    if (pick < 0) {
      f.verdict = Verdict::Infeasible;
      f.certificate = "vertex " + g.vertex_ids[static_cast<std::size_t>(v)] +
                      " is genus 0 with a unique zero and all its residues are forced to zero";
      return f;
    }
    hyper.push_back(pick);
  }
  // prefer nonzero residues on two-pole genus-0 components (needed for realization)
  for (int v = 0; v < g.num_vertices(); ++v) {
    auto at = sys.sites_at(v);
    if (g.genus[static_cast<std::size_t>(v)] == 0 && at.size() == 2 && !row_is_zero<Rational>(K, at[0]))
      hyper.push_back(at[0]);
  }
  std::sort(hyper.begin(), hyper.end());
  hyper.erase(std::unique(hyper.begin(), hyper.end()), hyper.end());
  vec_type<Rational> x = generic_point(K, hyper, seed);

  ResidueAssignment w;
  for (std::size_t i = 0; i < sys.sites.size(); ++i) w.values[sys.sites[i].id] = x(static_cast<Eigen::Index>(i));
  f.witness = std::move(w);

  bool realized = true, positive_genus_poles = false;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.genus[static_cast<std::size_t>(v)] > 0) {
      positive_genus_poles = positive_genus_poles || !sys.sites_at(v).empty();
      continue;
    }
    if (!realize_genus_zero(sys, v, x, seed)) realized = false;
  }
  f.verdict = realized ? Verdict::Feasible : Verdict::NecessaryConditionsFeasible;
  if (positive_genus_poles) f.assumptions.push_back(kPositiveGenusAssumption);
  if (!realized) f.assumptions.push_back(kGenusZeroAssumption);
  f.certificate = "solution space of dimension " + std::to_string(K.cols()) + " meets every nonzero condition";
  return f;
}

// ---------------------------------------------------------------------------
// scalings

namespace {

Rational dot(const vec_type<Rational>& c, const std::vector<Rational>& x) {
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (c(static_cast<Eigen::Index>(i)) != 0) acc += c(static_cast<Eigen::Index>(i)) * x[i];
  return acc;
}

// Rows of the linear system for the lambdas of one level. Entry (row, k) is the
// coefficient of lambda_{W[k]}, as a function of the per-site values.
template <class Entry, class SiteValue>
std::vector<std::vector<Entry>> level_rows(const ResidueSystem& sys, int L, const std::vector<int>& W,
                                           SiteValue site_value, Entry zero) {
  const DualGraph& g = sys.type.graph;
  std::vector<std::vector<Entry>> rows;
  auto col_of = [&](int v) { return static_cast<std::size_t>(std::find(W.begin(), W.end(), v) - W.begin()); };
  for (const auto& c : sys.constraints) {
    if (c.level != L) continue;
    if (c.kind == RowKind::GlobalResidue) {
      std::vector<Entry> row(W.size(), zero);
      for (std::size_t i = 0; i < sys.sites.size(); ++i) {
        const Rational& k = c.coeffs(static_cast<Eigen::Index>(i));
        if (k == 0) continue;
        std::size_t col = col_of(sys.sites[i].vertex);
        row[col] = row[col] + site_value(static_cast<int>(i)) * k;
      }
      rows.push_back(std::move(row));
    } else if (c.kind == RowKind::Pairing) {
      int e = c.support[0];
      if (g.is_loop(e)) continue;
      std::vector<Entry> row(W.size(), zero);
      for (int h : {2 * e, 2 * e + 1}) {
        int i = sys.site_of_half_edge(h);
        std::size_t col = col_of(sys.sites[static_cast<std::size_t>(i)].vertex);
        row[col] = row[col] + site_value(i);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) { out.push_back(cur); return; }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

EliminationResult scaling_elimination(const ResidueSystem& sys) {
  EliminationResult res;
  const std::size_t n = sys.sites.size();
  for (const auto& s : sys.sites) res.variable_names.push_back("r[" + s.id + "]");

  // solve the local rows for the latest variables
  std::vector<const Constraint*> local;
  for (const auto& c : sys.constraints)
    if (c.kind != RowKind::GlobalResidue) local.push_back(&c);
  mat_type<Rational> m(static_cast<Eigen::Index>(local.size()), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < local.size(); ++r)
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) = local[r]->coeffs(static_cast<Eigen::Index>(n - 1 - j));
  auto re = row_reduce<Rational>(m);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(n, i));
  for (std::size_t r = 0; r < re.pivots.size(); ++r) {
    std::size_t pivot = n - 1 - static_cast<std::size_t>(re.pivots[r]);
    Polynomial img(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == static_cast<std::size_t>(re.pivots[r])) continue;
      const Rational& k = re.reduced(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j));
      if (k != 0) img = img - Polynomial::variable(n, n - 1 - j) * k;
    }
    images[pivot] = img;
  }

  std::set<std::vector<std::pair<std::vector<int>, std::string>>> seen;
  const LevelGraph& lg = sys.level_graph;
  for (int L = -1; L >= lg.min_level(); --L) {
    std::vector<int> W;
    for (int v = 0; v < lg.graph.num_vertices(); ++v)
      if (lg.level[static_cast<std::size_t>(v)] == L) W.push_back(v);
    auto rows = level_rows<Polynomial>(sys, L, W, [&](int i) { return Polynomial::variable(n, static_cast<std::size_t>(i)); },
                                       Polynomial(n));
    if (rows.size() < W.size() || W.empty()) continue;
    std::vector<std::vector<std::size_t>> picks;
    std::vector<std::size_t> cur;
    subsets(rows.size(), W.size(), 0, cur, picks);
    for (const auto& pick : picks) {
      std::vector<std::vector<Polynomial>> sq;
      for (auto r : pick) sq.push_back(rows[r]);
      Polynomial p = determinant(sq).substitute(images).primitive();
      if (p.is_zero()) continue;
      std::vector<std::pair<std::vector<int>, std::string>> key;
      for (const auto& [e, c] : p.terms()) key.emplace_back(e, to_string(c));
      if (!seen.insert(key).second) continue;
      res.conditions.push_back(p);
      res.strings.push_back(p.to_string(res.variable_names) + " = 0");
    }
  }
  return res;
}

Feasibility feasible_with_scalings(const LevelGraph& lg, const TwistedDiffType& t, const StratumDescriptor& s,
                                   const ResidueAssignment& base, bool want_polynomials, std::uint64_t seed) {
  ResidueSystem sys = build_residue_system(lg, t, s);
  const DualGraph& g = t.graph;
  std::vector<Rational> x;
  for (const auto& site : sys.sites) {
    auto it = base.values.find(site.id);
    if (it == base.values.end()) throw InvalidInput("base misses site " + site.id);
    x.push_back(it->second);
  }
  for (const auto& c : sys.constraints)
    if (c.kind != RowKind::GlobalResidue && dot(c.coeffs, x) != 0)
      throw InvalidInput("base violates a " + to_string(c.kind) + " row");
  for (int i : sys.nonzero_sites)
    if (x[static_cast<std::size_t>(i)] == 0) throw InvalidInput("base has zero residue at simple pole " + sys.sites[static_cast<std::size_t>(i)].id);

  Feasibility f;
  ScalingAssignment lambda;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (lg.level[static_cast<std::size_t>(v)] == 0) lambda.values[g.vertex_ids[static_cast<std::size_t>(v)]] = 1;
  for (int L = -1; L >= lg.min_level(); --L) {
    std::vector<int> W;
    for (int v = 0; v < g.num_vertices(); ++v)
      if (lg.level[static_cast<std::size_t>(v)] == L) W.push_back(v);
    auto rows = level_rows<Rational>(sys, L, W, [&](int i) { return x[static_cast<std::size_t>(i)]; }, Rational(0));
    mat_type<Rational> A(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(W.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t k = 0; k < W.size(); ++k) A(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = rows[r][k];
    vec_type<Rational> ones = vec_type<Rational>::Constant(static_cast<Eigen::Index>(W.size()), Rational(1));
    vec_type<Rational> lam;
    if (rows.empty() || (A * ones).isZero(0)) {
      lam = ones;
    } else {
      mat_type<Rational> K = nullspace<Rational>(A);
      std::vector<Eigen::Index> all;
      for (std::size_t k = 0; k < W.size(); ++k) {
        if (row_is_zero<Rational>(K, static_cast<Eigen::Index>(k))) {
          f.verdict = Verdict::Infeasible;
          f.certificate = "level " + std::to_string(L) + ": scaling of " + g.vertex_ids[static_cast<std::size_t>(W[k])] +
                          " is forced to zero by the global residue condition";
          if (want_polynomials) f.eliminated = scaling_elimination(sys).strings;
          return f;
        }
        all.push_back(static_cast<Eigen::Index>(k));
      }
      lam = generic_point(K, all, seed + static_cast<std::uint64_t>(-L));
    }
    for (std::size_t k = 0; k < W.size(); ++k) lambda.values[g.vertex_ids[static_cast<std::size_t>(W[k])]] = lam(static_cast<Eigen::Index>(k));
  }
  ResidueAssignment scaled;
  for (std::size_t i = 0; i < sys.sites.size(); ++i) {
    const auto& vid = g.vertex_ids[static_cast<std::size_t>(sys.sites[i].vertex)];
    scaled.values[sys.sites[i].id] = lambda.values[vid] * x[i];
  }
  if (!check_assignment(sys, scaled)) {
    f.verdict = Verdict::Infeasible;
    f.certificate = "scaled residues are zero on a genus-0 component with a unique zero";
    return f;
  }
  f.verdict = Verdict::Feasible;
  f.witness = std::move(scaled);
  f.scaling = std::move(lambda);
  f.certificate = "nonzero scalings found level by level";
  if (want_polynomials) f.eliminated = scaling_elimination(sys).strings;
  return f;
}

// ---------------------------------------------------------------------------

std::vector<Configuration> evaluate_configurations(const DualGraph& g, const StratumDescriptor& s, MembershipOptions opt) {
  std::vector<Configuration> out;
  for (const auto& t : enumerate_twisted_types(g, s))
    for (const auto& lg : compatible_level_graphs(t)) {
      ResidueSystem sys = build_residue_system(lg, t, s, {opt.include_grc});
      out.push_back({lg, t, feasible_residues(sys, opt.seed)});
    }
  return out;
}

std::vector<Configuration> decide_membership(const DualGraph& g, const StratumDescriptor& s, MembershipOptions opt) {
  auto all = evaluate_configurations(g, s, opt);
  std::vector<Configuration> out;
  for (auto& c : all)
    if (c.feasibility.feasible()) out.push_back(std::move(c));
  return out;
}

}  // namespace strata
