#include "latgeo/json_io.hpp"

#include "latgeo/boxpoints.hpp"
#include "latgeo/ehrhart.hpp"
#include "latgeo/pyramids.hpp"

#include <algorithm>

namespace latgeo {

using nlohmann::json;

namespace {

json point_to_json(const LatticePoint& v) {
  json arr = json::array();
  for (const Int& x : v) arr.push_back(to_int64(x));
  return arr;
}

json points_to_json(const std::vector<LatticePoint>& pts) {
  json arr = json::array();
  for (const auto& v : pts) arr.push_back(point_to_json(v));
  return arr;
}

json int_vector_to_json(const std::vector<Int>& v) {
  json arr = json::array();
  for (const Int& x : v) arr.push_back(to_int64(x));
  return arr;
}

json index_set_to_json(const std::vector<std::size_t>& v) {
  json arr = json::array();
  for (std::size_t i : v) arr.push_back(i);
  return arr;
}

const char* conclusion_name(Conclusion c) {
  switch (c) {
    case Conclusion::holds: return "holds";
    case Conclusion::fails: return "fails";
    default: return "not_applicable";
  }
}

}  // namespace

LatticePolytope polytope_from_json(const json& j) {
  if (!j.is_object()) throw input_error("polytope entry must be a JSON object");
  if (!j.contains("ambient_dim") || !j["ambient_dim"].is_number_integer())
    throw input_error("missing or non-integer ambient_dim");
  if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
    throw input_error("vertices must be a nonempty array");
  const auto ambient = j["ambient_dim"].get<long long>();
  if (ambient < 1) throw input_error("ambient_dim must be at least 1");
  std::vector<LatticePoint> points;
  for (const auto& row : j["vertices"]) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(ambient))
      throw input_error("vertex length disagrees with ambient_dim");
    LatticePoint p;
    for (const auto& coord : row) {
      if (!coord.is_number_integer()) throw input_error("vertex coordinates must be integers");
      p.push_back(Int(coord.get<long long>()));
    }
    points.push_back(std::move(p));
  }
  return LatticePolytope::make(std::move(points));
}

json polytope_to_json(const LatticePolytope& p) {
  json j;
  j["ambient_dim"] = p.ambient_dim();
  j["vertices"] = points_to_json(p.vertices());
  return j;
}

std::vector<LatticePolytope> polytopes_from_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("malformed JSON: ") + e.what());
  }
  std::vector<LatticePolytope> out;
  if (j.is_array()) {
    if (j.empty()) throw input_error("empty polytope array");
    for (const auto& entry : j) out.push_back(polytope_from_json(entry));
  } else {
    out.push_back(polytope_from_json(j));
  }
  return out;
}

json bound_report_to_json(const BoundReport& r) {
  json j;
  j["name"] = r.name;
  json values;
  for (const auto& [key, value] : r.values) values[key] = to_int64(value);
  j["values"] = values;
  j["hypothesis_satisfied"] = r.hypothesis_satisfied;
  j["conclusion"] = conclusion_name(r.conclusion);
  j["witness"] = r.witness;
  return j;
}

json circuit_to_json(const Circuit& c) {
  json j;
  j["members"] = index_set_to_json(c.members);
  j["coefficients"] = int_vector_to_json(c.coefficients);
  j["positive"] = index_set_to_json(c.positive);
  j["negative"] = index_set_to_json(c.negative);
  return j;
}

json box_point_to_json(const BoxPoint& bp) {
  json j;
  j["embedded"] = int_vector_to_json(bp.embedded);
  j["ambient"] = point_to_json(bp.ambient);
  json lam = json::array();
  for (const Rat& q : bp.lambdas) lam.push_back(rat_to_string(q));
  j["lambdas"] = lam;
  j["height"] = bp.height;
  j["support"] = index_set_to_json(bp.support);
  return j;
}

json greedy_trace_to_json(const GreedyTrace& t) {
  json steps = json::array();
  for (const auto& step : t.steps) {
    json s;
    s["point"] = box_point_to_json(step.point);
    s["I"] = index_set_to_json(step.fresh);
    s["J"] = index_set_to_json(step.overlap);
    steps.push_back(std::move(s));
  }
  json j;
  j["steps"] = steps;
  j["covered"] = index_set_to_json(t.covered);
  return j;
}

json hstar_report(const LatticePolytope& p) {
  HStarPolynomial h = hstar_via_interpolation(p);
  if (p.is_simplex()) {
    HStarPolynomial via_box = hstar_from_box(EmbeddedSimplex::from(p));
    if (via_box != h) throw internal_error("h* routes disagree");
  }
  json j;
  j["hstar"] = int_vector_to_json(h.coeffs());
  j["degree"] = h.degree();
  j["codegree"] = static_cast<unsigned>(p.dim()) + 1 - h.degree();
  j["volume"] = to_int64(h.sum());
  return j;
}

json pyramid_report(const LatticePolytope& p) {
  PyramidDecomposition dec = decompose(p);
  json j;
  j["fold_count"] = dec.fold_count();
  j["apexes"] = points_to_json(dec.apexes);
  j["base_vertices"] = points_to_json(dec.base.vertices());
  return j;
}

json circuits_report(const LatticePolytope& p) {
  auto circuits = enumerate_circuits(p);
  CircuitBoundVerdict verdict = check_circuit_bound(p);
  json list = json::array();
  for (const auto& c : circuits) list.push_back(circuit_to_json(c));
  json j;
  j["count"] = circuits.size();
  j["max_size"] = verdict.max_size;
  j["bound"] = verdict.bound;
  j["bound_ok"] = verdict.pass;
  j["circuits"] = list;
  j["combinatorial_apexes"] = index_set_to_json(combinatorial_pyramid_apexes(p));
  return j;
}

json bounds_report(const LatticePolytope& p) {
  json arr = json::array();
  for (const auto& r : run_all_checks(p)) arr.push_back(bound_report_to_json(r));
  return arr;
}

json analysis_report(const LatticePolytope& p, const ReportOptions& opts) {
  json j;
  j["ambient_dim"] = p.ambient_dim();
  j["intrinsic_dim"] = p.dim();
  j["vertices"] = points_to_json(p.vertices());
  j["is_simplex"] = p.is_simplex();

  HStarPolynomial h = hstar_via_interpolation(p);
  unsigned codeg = static_cast<unsigned>(p.dim()) + 1 - h.degree();
  unsigned codeg_interior = codegree_by_interior(p);
  if (codeg != codeg_interior) throw internal_error("codegree routes disagree");
  j["hstar"] = int_vector_to_json(h.coeffs());
  j["degree"] = h.degree();
  j["codegree"] = codeg;
  j["codegree_by_interior"] = codeg_interior;
  j["volume"] = to_int64(h.sum());

  if (p.is_simplex()) {
    EmbeddedSimplex s = EmbeddedSimplex::from(p);
    HStarPolynomial via_box = hstar_from_box(s);
    if (via_box != h) throw internal_error("h* routes disagree");
    j["hstar_from_box"] = int_vector_to_json(via_box.coeffs());
    j["simplex_support"] = index_set_to_json(simplex_support(s));
    if (opts.with_trace) j["greedy_trace"] = greedy_trace_to_json(greedy_trace(s));
  }

  j["pyramid"] = pyramid_report(p);
  if (opts.with_circuits) j["circuits"] = circuits_report(p);
  j["bounds"] = bounds_report(p);
  return j;
}

}  // namespace latgeo
