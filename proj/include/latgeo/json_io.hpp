#pragma once

#include "latgeo/bounds.hpp"
#include "latgeo/circuits.hpp"
#include "latgeo/greedy.hpp"
#include "latgeo/polytope.hpp"

#include <json.hpp>

#include <string>

namespace latgeo {

/// Polytope file format: {"ambient_dim": n, "vertices": [[int,...],...]}.
/// Coordinates must be JSON integers; vertex order in the file is irrelevant.
LatticePolytope polytope_from_json(const nlohmann::json& j);
nlohmann::json polytope_to_json(const LatticePolytope& p);

/// Parses either a single polytope object or an array of them.
std::vector<LatticePolytope> polytopes_from_text(const std::string& text);

nlohmann::json bound_report_to_json(const BoundReport& r);
nlohmann::json circuit_to_json(const Circuit& c);
nlohmann::json box_point_to_json(const BoxPoint& bp);
nlohmann::json greedy_trace_to_json(const GreedyTrace& t);

struct ReportOptions {
  bool with_trace = false;
  bool with_circuits = true;
};

/// Full analysis of one polytope. For simplices the two h* routes and the
/// two codegree routes are cross-checked; a mismatch throws internal_error.
nlohmann::json analysis_report(const LatticePolytope& p, const ReportOptions& opts);

/// Focused slices used by the CLI subcommands.
nlohmann::json hstar_report(const LatticePolytope& p);
nlohmann::json pyramid_report(const LatticePolytope& p);
nlohmann::json circuits_report(const LatticePolytope& p);
nlohmann::json bounds_report(const LatticePolytope& p);

}  // namespace latgeo
