#include "latgeo/bounds.hpp"

#include "latgeo/ehrhart.hpp"
#include "latgeo/pyramids.hpp"

#include <sstream>

namespace latgeo {

namespace {

std::string point_to_string(const LatticePoint& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

// Fold-count >= 1, i.e. some vertex passes the apex criterion.
bool apex_exists(const LatticePolytope& p, std::string& witness) {
  if (p.dim() < 1) return false;
  for (const auto& v : p.vertices()) {
    if (is_apex_general(p, v)) {
      witness = "apex " + point_to_string(v);
      return true;
    }
  }
  return false;
}

struct Basics {
  Int n, d, volume, vertex_count;
  HStarPolynomial hstar;
};

Basics basics(const LatticePolytope& p) {
  HStarPolynomial h = hstar_via_interpolation(p);
  return Basics{Int(p.dim()), Int(h.degree()), h.sum(), Int(p.vertex_count()), h};
}

BoundReport pyramid_theorem_report(const LatticePolytope& p, const std::string& name,
                                   const Basics& b, const Int& threshold) {
  BoundReport report;
  report.name = name;
  report.values["n"] = b.n;
  report.values["d"] = b.d;
  report.values["V"] = b.volume;
  report.values["threshold"] = threshold;
  if (b.n < 1) {
    report.hypothesis_satisfied = false;
    report.conclusion = Conclusion::not_applicable;
    report.witness = "n = 0: the statement presumes a positive dimension";
    return report;
  }
  report.hypothesis_satisfied = b.n >= threshold;
  if (!report.hypothesis_satisfied) {
    report.conclusion = Conclusion::not_applicable;
    return report;
  }
  report.conclusion =
      apex_exists(p, report.witness) ? Conclusion::holds : Conclusion::fails;
  return report;
}

}  // namespace

BoundReport check_main_theorem(const LatticePolytope& p) {
  Basics b = basics(p);
  Int c = b.vertex_count - b.n - 1;
  Int threshold = c * (2 * b.d + 1) + 4 * b.d - 1;
  BoundReport report = pyramid_theorem_report(p, "main_theorem", b, threshold);
  report.values["c"] = c;
  return report;
}

BoundReport check_vol_proposition(const LatticePolytope& p) {
  Basics b = basics(p);
  Int threshold = (b.volume - 1) * (2 * b.d + 1);
  return pyramid_theorem_report(p, "volume_proposition", b, threshold);
}

BoundReport check_batyrev_theorem(const LatticePolytope& p) {
  Basics b = basics(p);
  Int threshold = 4 * b.d * binomial(2 * b.d + b.volume - 1, 2 * b.d);
  return pyramid_theorem_report(p, "batyrev_theorem", b, threshold);
}

BoundReport check_stanley_inequality(const LatticePolytope& p) {
  Basics b = basics(p);
  BoundReport report;
  report.name = "stanley_inequality";
  report.values["n"] = b.n;
  report.values["d"] = b.d;
  report.values["h1"] = b.hstar.size() > 1 ? b.hstar[1] : Int(0);
  if (b.d < 1) {
    report.hypothesis_satisfied = false;
    report.conclusion = Conclusion::not_applicable;
    report.witness = "degree 0: h*_{d-1} undefined";
    return report;
  }
  report.hypothesis_satisfied = true;
  const auto d = static_cast<std::size_t>(to_int64(b.d));
  Int lhs = 1 + report.values["h1"];
  Int rhs = b.hstar[d - 1] + b.hstar[d];
  report.conclusion = lhs <= rhs ? Conclusion::holds : Conclusion::fails;
  if (report.conclusion == Conclusion::fails) {
    std::ostringstream os;
    os << "1+h1 = " << lhs << " > " << rhs;
    report.witness = os.str();
  }
  return report;
}

BoundReport check_basic_identities(const LatticePolytope& p) {
  Basics b = basics(p);
  BoundReport report;
  report.name = "basic_identities";
  report.hypothesis_satisfied = true;
  Int points = lattice_point_count(p, 1);
  Int volume_by_triangulation = normalized_volume_by_triangulation(p);
  report.values["n"] = b.n;
  report.values["points"] = points;
  report.values["V"] = b.volume;
  report.values["V_triangulation"] = volume_by_triangulation;

  bool ok = b.hstar[0] == 1;
  Int h1 = b.hstar.size() > 1 ? b.hstar[1] : Int(0);
  if (h1 != points - b.n - 1) ok = false;
  if (b.volume != volume_by_triangulation) ok = false;
  report.conclusion = ok ? Conclusion::holds : Conclusion::fails;
  if (!ok) report.witness = "an h* identity failed";
  return report;
}

BoundReport check_hibi_fulldim(const LatticePolytope& p) {
  Basics b = basics(p);
  BoundReport report;
  report.name = "hibi_fulldim";
  report.values["n"] = b.n;
  report.values["d"] = b.d;
  if (b.d != b.n) {
    report.hypothesis_satisfied = false;
    report.conclusion = Conclusion::not_applicable;
    report.witness = "deg < dim: inequality not asserted in general";
    return report;
  }
  report.hypothesis_satisfied = true;
  report.conclusion = Conclusion::holds;
  Int h1 = b.hstar.size() > 1 ? b.hstar[1] : Int(0);
  const auto d = static_cast<std::size_t>(to_int64(b.d));
  for (std::size_t i = 2; i + 1 <= d && i <= d - 1; ++i) {
    if (h1 > b.hstar[i]) {
      report.conclusion = Conclusion::fails;
      std::ostringstream os;
      os << "h1 = " << h1 << " > h" << i << " = " << b.hstar[i];
      report.witness = os.str();
      break;
    }
  }
  return report;
}

std::vector<BoundReport> run_all_checks(const LatticePolytope& p) {
  return {check_basic_identities(p), check_stanley_inequality(p), check_hibi_fulldim(p),
          check_batyrev_theorem(p),  check_vol_proposition(p),    check_main_theorem(p)};
}

}  // namespace latgeo
