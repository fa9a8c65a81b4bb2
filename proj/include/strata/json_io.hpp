#pragma once
#include "strata/boundary.hpp"
#include "strata/curve_graph.hpp"
#include "strata/elliptic.hpp"
#include "strata/level_order.hpp"
#include "strata/p1_forms.hpp"
#include "strata/residues.hpp"
#include "strata/twisted_type.hpp"

#include <json.hpp>

namespace strata {

using json = nlohmann::json;

// Parsers throw InvalidInput naming the offending JSON location.
json graph_to_json(const DualGraph& g, const StratumDescriptor& s);
std::pair<DualGraph, StratumDescriptor> graph_from_json(const json& j);

json levels_to_json(const LevelGraph& lg);
LevelGraph levels_from_json(const json& j, const DualGraph& g);

json orders_to_json(const TwistedDiffType& t);
TwistedDiffType orders_from_json(const json& j, const DualGraph& g);

json system_to_json(const ResidueSystem& sys);
json feasibility_to_json(const Feasibility& f);
ResidueAssignment assignment_from_json(const json& j);
ComplexResidueAssignment complex_assignment_from_json(const json& j);

json record_to_json(const BoundaryStratumRecord& r, const StratumDescriptor& s);
json boundary_to_json(const BoundaryReport& rep);

json p1_to_json(const RationalDifferential& w);
std::vector<SupportEntry> support_from_json(const json& j);
P1Point p1_point_from_json(const json& j);

EPoint epoint_from_json(const json& j);
json epoint_to_json(const EPoint& p);
DivisorE divisor_from_json(const json& j);

Rational rational_from_json(const json& j, const std::string& where);

}  // namespace strata
