#pragma once

#include "latgeo/numbers.hpp"
#include "latgeo/polytope.hpp"

#include <map>
#include <string>
#include <vector>

namespace latgeo {

enum class Conclusion { holds, fails, not_applicable };

/// Structured verdict for one theorem or identity evaluated on an instance.
/// A satisfied hypothesis with a failing conclusion is a hard red flag: it
/// would contradict the mathematics or expose an implementation bug.
struct BoundReport {
  std::string name;
  std::map<std::string, Int> values;
  bool hypothesis_satisfied = false;
  Conclusion conclusion = Conclusion::not_applicable;
  std::string witness;
};

/// n >= c(2d+1) + 4d - 1 with c = |V(P)| - n - 1 forces a pyramid apex.
BoundReport check_main_theorem(const LatticePolytope& p);

/// n >= (V-1)(2d+1) forces a pyramid apex.
BoundReport check_vol_proposition(const LatticePolytope& p);

/// n >= 4d * C(2d+V-1, 2d) forces a pyramid apex.
BoundReport check_batyrev_theorem(const LatticePolytope& p);

/// 1 + h*_1 <= h*_{d-1} + h*_d for degree d >= 1.
BoundReport check_stanley_inequality(const LatticePolytope& p);

/// h*_0 = 1, h*_1 = |P ∩ M| - n - 1, sum h* = Vol, the volume cross-checked
/// against the triangulation determinant sum.
BoundReport check_basic_identities(const LatticePolytope& p);

/// h*_1 <= h*_i for i = 2..d-1, applicable only when deg(P) = dim(P).
BoundReport check_hibi_fulldim(const LatticePolytope& p);

std::vector<BoundReport> run_all_checks(const LatticePolytope& p);

}  // namespace latgeo
