#include "strata/json_io.hpp"

#include <set>

namespace strata {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InvalidInput(where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected an integer or a \"p/q\" string");
}

json graph_to_json(const DualGraph& g, const StratumDescriptor& s) {
  json j;
  j["genus"] = s.genus;
  j["mu"] = s.mu;
  j["vertices"] = json::array();
  for (int v = 0; v < g.num_vertices(); ++v)
    j["vertices"].push_back({{"id", g.vertex_ids[static_cast<std::size_t>(v)]}, {"genus", g.genus[static_cast<std::size_t>(v)]}});
  j["edges"] = json::array();
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.edge_ends[static_cast<std::size_t>(e)];
    j["edges"].push_back({{"id", g.edge_ids[static_cast<std::size_t>(e)]},
                          {"ends", {g.vertex_ids[static_cast<std::size_t>(a)], g.vertex_ids[static_cast<std::size_t>(b)]}}});
  }
  j["legs"] = json::array();
  for (const auto& leg : g.legs)
    j["legs"].push_back({{"id", leg.id}, {"vertex", g.vertex_ids[static_cast<std::size_t>(leg.vertex)]}, {"order", leg.order}});
  return j;
}

std::pair<DualGraph, StratumDescriptor> graph_from_json(const json& j) {
  StratumDescriptor s;
  s.genus = as_int(field(j, "genus", "/"), "/genus");
  const json& mu = field(j, "mu", "/");
  if (!mu.is_array()) fail("/mu", "expected an array");
  for (std::size_t i = 0; i < mu.size(); ++i) s.mu.push_back(as_int(mu[i], "/mu/" + std::to_string(i)));

  DualGraph g;
  const json& vs = field(j, "vertices", "/");
  if (!vs.is_array()) fail("/vertices", "expected an array");
  if (vs.empty()) fail("/vertices", "graph has no vertices");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::string w = "/vertices/" + std::to_string(i);
    std::string id = as_string(field(vs[i], "id", w), w + "/id");
    if (!ids.insert(id).second) fail(w + "/id", "duplicate vertex id '" + id + "'");
    int genus = as_int(field(vs[i], "genus", w), w + "/genus");
    if (genus < 0) fail(w + "/genus", "negative genus");
    g.vertex_ids.push_back(id);
    g.genus.push_back(genus);
  }
  auto vertex = [&](const json& x, const std::string& w) {
    std::string id = as_string(x, w);
    int v = g.vertex_index(id);
    if (v < 0) fail(w, "unknown vertex '" + id + "'");
    return v;
  };
  const json& es = field(j, "edges", "/");
  if (!es.is_array()) fail("/edges", "expected an array");
  std::set<std::string> eids;
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::string w = "/edges/" + std::to_string(i);
    std::string id = as_string(field(es[i], "id", w), w + "/id");
    if (!eids.insert(id).second) fail(w + "/id", "duplicate edge id '" + id + "'");
    const json& ends = field(es[i], "ends", w);
    if (!ends.is_array() || ends.size() != 2) fail(w + "/ends", "expected two vertex ids");
    g.edge_ids.push_back(id);
    g.edge_ends.push_back({vertex(ends[0], w + "/ends/0"), vertex(ends[1], w + "/ends/1")});
  }
  const json& ls = field(j, "legs", "/");
  if (!ls.is_array()) fail("/legs", "expected an array");
  for (std::size_t i = 0; i < ls.size(); ++i) {
    std::string w = "/legs/" + std::to_string(i);
    g.legs.push_back({as_string(field(ls[i], "id", w), w + "/id"), vertex(field(ls[i], "vertex", w), w + "/vertex"),
                      as_int(field(ls[i], "order", w), w + "/order")});
  }
  return {std::move(g), std::move(s)};
}

json levels_to_json(const LevelGraph& lg) {
  json m = json::object();
  for (int v = 0; v < lg.graph.num_vertices(); ++v) m[lg.graph.vertex_ids[static_cast<std::size_t>(v)]] = lg.level[static_cast<std::size_t>(v)];
  return {{"levels", m}};
}

LevelGraph levels_from_json(const json& j, const DualGraph& g) {
  const json& m = field(j, "levels", "/");
  if (!m.is_object()) fail("/levels", "expected an object");
  LevelGraph lg{g, std::vector<int>(static_cast<std::size_t>(g.num_vertices()), 0)};
  std::vector<bool> seen(static_cast<std::size_t>(g.num_vertices()), false);
  for (auto it = m.begin(); it != m.end(); ++it) {
    int v = g.vertex_index(it.key());
    if (v < 0) fail("/levels/" + it.key(), "unknown vertex");
    lg.level[static_cast<std::size_t>(v)] = as_int(it.value(), "/levels/" + it.key());
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!seen[static_cast<std::size_t>(v)]) fail("/levels", "no level for vertex '" + g.vertex_ids[static_cast<std::size_t>(v)] + "'");
  if (!is_normalized(lg.level)) fail("/levels", "levels must be consecutive integers 0, -1, ..., with 0 attained");
  return lg;
}

json orders_to_json(const TwistedDiffType& t) {
  json m = json::object();
  for (int h = 0; h < t.graph.num_half_edges(); ++h) m[t.graph.half_edge_id(h)] = t.order(h);
  return {{"half_edge_orders", m}};
}

TwistedDiffType orders_from_json(const json& j, const DualGraph& g) {
  const json& m = field(j, "half_edge_orders", "/");
  if (!m.is_object()) fail("/half_edge_orders", "expected an object");
  TwistedDiffType t{g, std::vector<int>(static_cast<std::size_t>(g.num_half_edges()), 0)};
  std::vector<bool> seen(static_cast<std::size_t>(g.num_half_edges()), false);
  for (auto it = m.begin(); it != m.end(); ++it) {
    int h = g.half_edge_index(it.key());
    if (h < 0) fail("/half_edge_orders/" + it.key(), "unknown half-edge");
    t.half_edge_order[static_cast<std::size_t>(h)] = as_int(it.value(), "/half_edge_orders/" + it.key());
    seen[static_cast<std::size_t>(h)] = true;
  }
  for (int h = 0; h < g.num_half_edges(); ++h)
    if (!seen[static_cast<std::size_t>(h)]) fail("/half_edge_orders", "no order for half-edge '" + g.half_edge_id(h) + "'");
  return t;
}

json system_to_json(const ResidueSystem& sys) {
  json j;
  j["sites"] = json::array();
  for (const auto& s : sys.sites)
    j["sites"].push_back({{"id", s.id}, {"kind", s.is_leg ? "leg" : "half-edge"},
                          {"vertex", sys.type.graph.vertex_ids[static_cast<std::size_t>(s.vertex)]}, {"order", s.order}});
  j["constraints"] = json::array();
  for (const auto& c : sys.constraints) {
    json row = json::array();
    for (Eigen::Index i = 0; i < c.coeffs.size(); ++i) row.push_back(to_string(c.coeffs(i)));
    json entry{{"kind", to_string(c.kind)}, {"coefficients", row}};
    if (c.kind == RowKind::GlobalResidue) {
      entry["level"] = c.level;
      json comp = json::array();
      for (int v : c.support) comp.push_back(sys.type.graph.vertex_ids[static_cast<std::size_t>(v)]);
      entry["component"] = comp;
    }
    j["constraints"].push_back(entry);
  }
  j["nonzero_sites"] = json::array();
  for (int i : sys.nonzero_sites) j["nonzero_sites"].push_back(sys.sites[static_cast<std::size_t>(i)].id);
  j["obstructed_vertices"] = json::array();
  for (int v : sys.obstructed_vertices) j["obstructed_vertices"].push_back(sys.type.graph.vertex_ids[static_cast<std::size_t>(v)]);
  j["extra_rank"] = sys.extra_rank();
  j["grc_extra_rank"] = sys.grc_rank_modulo_local();
  return j;
}

json feasibility_to_json(const Feasibility& f) {
  json j;
  j["verdict"] = to_string(f.verdict);
  j["feasible"] = f.feasible();
  j["certificate"] = f.certificate;
  j["kernel_dimension"] = f.kernel_dimension;
  j["forced_zero"] = f.forced_zero;
  j["assumptions"] = f.assumptions;
  j["eliminated"] = f.eliminated;
  if (f.witness) {
    json w = json::object();
    for (const auto& [k, v] : f.witness->values) w[k] = to_string(v);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  if (f.scaling) {
    json w = json::object();
    for (const auto& [k, v] : f.scaling->values) w[k] = to_string(v);
    j["scaling"] = w;
  }
  return j;
}

ResidueAssignment assignment_from_json(const json& j) {
  if (!j.is_object()) fail("/", "expected an object mapping site ids to \"p/q\"");
  ResidueAssignment a;
  for (auto it = j.begin(); it != j.end(); ++it) a.values[it.key()] = rational_from_json(it.value(), "/" + it.key());
  return a;
}

ComplexResidueAssignment complex_assignment_from_json(const json& j) {
  if (!j.is_object()) fail("/", "expected an object mapping site ids to values");
  ComplexResidueAssignment a;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string w = "/" + it.key();
    if (it.value().is_array()) {
      if (it.value().size() != 2) fail(w, "expected [re, im]");
      a.values[it.key()] = {rational_from_json(it.value()[0], w + "/0"), rational_from_json(it.value()[1], w + "/1")};
    } else {
      a.values[it.key()] = GaussianRational(rational_from_json(it.value(), w));
    }
  }
  return a;
}

json record_to_json(const BoundaryStratumRecord& r, const StratumDescriptor& s) {
  json j;
  j["graph"] = graph_to_json(r.graph, s);
  j["levels"] = levels_to_json(r.level_graph)["levels"];
  j["half_edge_orders"] = orders_to_json(r.type)["half_edge_orders"];
  j["feasibility"] = feasibility_to_json(r.feasibility);
  j["dim"] = r.dim;
  j["pi2_fiber_dim"] = r.pi2_fiber_dim;
  j["grc_extra_rank"] = r.grc_extra_rank;
  j["extra_rank"] = r.extra_rank;
  j["dominated"] = r.dominated;
  j["tags"] = r.tags;
  json sigs = json::array();
  for (int v = 0; v < r.graph.num_vertices(); ++v) {
    auto sig = vertex_signature(r.type, v);
    sigs.push_back({{"vertex", r.graph.vertex_ids[static_cast<std::size_t>(v)]}, {"genus", sig.genus}, {"orders", sig.orders},
                    {"level", r.level_graph.level[static_cast<std::size_t>(v)]}});
  }
  j["signatures"] = sigs;
  return j;
}

json boundary_to_json(const BoundaryReport& rep) {
  json j;
  j["stratum"] = {{"genus", rep.stratum.genus}, {"mu", rep.stratum.mu}};
  j["target_dimension"] = rep.target_dim;
  j["records"] = json::array();
  for (const auto& r : rep.records) j["records"].push_back(record_to_json(r, rep.stratum));
  j["rejections"] = json::array();
  for (const auto& x : rep.rejections) {
    json e{{"graph", graph_to_json(x.graph, rep.stratum)}, {"reason", x.reason}};
    if (x.level_graph) e["levels"] = levels_to_json(*x.level_graph)["levels"];
    if (x.type) e["half_edge_orders"] = orders_to_json(*x.type)["half_edge_orders"];
    j["rejections"].push_back(e);
  }
  json counts = json::object();
  for (const auto& [d, c] : rep.counts_by_dim) counts[std::to_string(d)] = c;
  j["summary"] = {{"counts_by_dimension", counts},
                  {"divisorial_loci", rep.divisorial_count},
                  {"graphs_examined", rep.graphs_examined},
                  {"dominated_graphs", rep.dominated_graphs},
                  {"text", rep.summary()}};
  return j;
}

P1Point p1_point_from_json(const json& j) {
  if (j.is_string() && (j.get<std::string>() == "oo" || j.get<std::string>() == "inf" || j.get<std::string>() == "infinity"))
    return P1Point::infinity();
  return P1Point::finite(rational_from_json(j, "/point"));
}

std::vector<SupportEntry> support_from_json(const json& j) {
  if (!j.is_array()) fail("/", "support must be an array of [point, order] pairs");
  std::vector<SupportEntry> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != 2) fail(w, "expected [point, order]");
    P1Point p;
    try {
      p = p1_point_from_json(j[i][0]);
    } catch (const InvalidInput& e) {
      fail(w + "/0", e.what());
    }
    out.push_back({p, as_int(j[i][1], w + "/1")});
  }
  return out;
}

json p1_to_json(const RationalDifferential& w) {
  json j;
  j["scale"] = to_string(w.scale());
  j["order_at_infinity"] = w.order_at_infinity();
  j["points"] = json::array();
  Rational total = 0;
  for (const auto& s : w.divisor()) {
    Rational r = residue_at(w, s.point);
    total += r;
    j["points"].push_back({{"point", to_string(s.point)}, {"order", s.order}, {"residue", to_string(r)}});
  }
  j["residue_sum"] = to_string(total);
  return j;
}

EPoint epoint_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "O") return EPoint::O();
  if (!j.is_array() || j.size() != 2) fail("/point", "expected [x, y] or \"O\"");
  return EPoint::affine(rational_from_json(j[0], "/point/0"), rational_from_json(j[1], "/point/1"));
}

json epoint_to_json(const EPoint& p) {
  if (p.infinity) return "O";
  return json::array({to_string(p.x), to_string(p.y)});
}

DivisorE divisor_from_json(const json& j) {
  if (!j.is_array()) fail("/", "divisor must be a list of [x, y, mult] or [\"O\", mult]");
  DivisorE d;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = "/" + std::to_string(i);
    const json& e = j[i];
    if (e.is_array() && e.size() == 2 && e[0].is_string() && e[0].get<std::string>() == "O") {
      d.entries.emplace_back(EPoint::O(), as_int(e[1], w + "/1"));
    } else if (e.is_array() && e.size() == 3) {
      d.entries.emplace_back(EPoint::affine(rational_from_json(e[0], w + "/0"), rational_from_json(e[1], w + "/1")),
                             as_int(e[2], w + "/2"));
    } else {
      fail(w, "expected [x, y, mult] or [\"O\", mult]");
    }
  }
  return d;
}

}  // namespace strata
