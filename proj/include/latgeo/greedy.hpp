#pragma once

#include "latgeo/boxpoints.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace latgeo {

/// One step of the greedy support-covering walk: the chosen box point, the
/// indices it newly covers (I_k), and its overlap with the previous step's
/// fresh indices (J_k, empty at k = 0).
struct GreedyStep {
  BoxPoint point;
  std::vector<std::size_t> fresh;    // I_k
  std::vector<std::size_t> overlap;  // J_k = I_{k-1} ∩ supp(m_k)
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;
  std::vector<std::size_t> covered;  // union of supports = support of the simplex
};

/// Among maximizers of |I_k| ties go to the smallest (height, embedded
/// point); `reversed` picks the largest instead. The covering claim must
/// hold for every maximal choice, which tests exercise through both orders.
enum class TieBreak { smallest, largest };

/// Greedily selects box points maximizing the newly covered support until no
/// box point adds anything. The covered set equals simplex_support(s).
GreedyTrace greedy_trace(const EmbeddedSimplex& s, TieBreak tie = TieBreak::smallest);

struct GreedyVerdict {
  bool pass = true;
  std::string detail;
};

/// Checks |I_k| * 2^k <= 2d plus the two step inequalities
/// |J_k| + |I_k| <= |I_{k-1}| and |I_k| <= |J_k|, and that folding
/// consecutive picks lands on a box point.
GreedyVerdict verify_greedy_claim(const GreedyTrace& t, unsigned d, const EmbeddedSimplex& s);

/// Box point with lambda_i = frac(a.lambda_i + b.lambda_i); the group
/// operation of the quotient lattice transported to the parallelepiped.
BoxPoint fold_box_points(const BoxPoint& a, const BoxPoint& b, const EmbeddedSimplex& s);

}  // namespace latgeo
