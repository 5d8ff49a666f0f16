#include "latgeo/greedy.hpp"

#include <algorithm>
#include <sstream>

namespace latgeo {

namespace {

std::vector<std::size_t> set_difference_sorted(const std::vector<std::size_t>& a,
                                               const std::vector<bool>& covered) {
  std::vector<std::size_t> out;
  for (std::size_t i : a)
    if (!covered[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> set_intersection_sorted(const std::vector<std::size_t>& a,
                                                 const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

GreedyTrace greedy_trace(const EmbeddedSimplex& s, TieBreak tie) {
  auto box = enumerate_box_points(s);  // already sorted by (height, embedded)
  GreedyTrace trace;
  std::vector<bool> covered(s.n() + 1, false);

  while (true) {
    std::size_t best = box.size();
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < box.size(); ++i) {
      std::size_t gain = 0;
      for (std::size_t idx : box[i].support)
        if (!covered[idx]) ++gain;
      bool better = gain > best_gain;
      if (gain == best_gain && gain > 0 && best < box.size() && tie == TieBreak::largest)
        better = true;  // later entries are larger in the canonical order
      if (better) {
        best = i;
        best_gain = gain;
      }
    }
    if (best == box.size() || best_gain == 0) break;

    GreedyStep step;
    step.point = box[best];
    step.fresh = set_difference_sorted(box[best].support, covered);
    if (!trace.steps.empty())
      step.overlap = set_intersection_sorted(trace.steps.back().fresh, box[best].support);
    for (std::size_t idx : box[best].support) covered[idx] = true;
    trace.steps.push_back(std::move(step));
  }

  for (std::size_t i = 0; i <= s.n(); ++i)
    if (covered[i]) trace.covered.push_back(i);
  return trace;
}

GreedyVerdict verify_greedy_claim(const GreedyTrace& t, unsigned d, const EmbeddedSimplex& s) {
  GreedyVerdict verdict;
  auto fail = [&verdict](const std::string& why) {
    if (verdict.pass) {
      verdict.pass = false;
      verdict.detail = why;
    }
  };

  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    const auto& step = t.steps[k];
    // |I_k| * 2^k <= 2d, as integers.
    Int lhs = Int(step.fresh.size()) << k;
    if (lhs > 2 * Int(d)) {
      std::ostringstream os;
      os << "step " << k << ": |I_k|*2^k = " << lhs << " > 2d = " << 2 * d;
      fail(os.str());
    }
    if (k == 0) continue;
    const auto& prev = t.steps[k - 1];
    std::size_t ik = step.fresh.size(), jk = step.overlap.size(), ik1 = prev.fresh.size();
    if (jk + ik > ik1) {
      std::ostringstream os;
      os << "step " << k << ": |J_k|+|I_k| = " << jk + ik << " > |I_{k-1}| = " << ik1;
      fail(os.str());
    }
    if (ik > jk) {
      std::ostringstream os;
      os << "step " << k << ": |I_k| = " << ik << " > |J_k| = " << jk;
      fail(os.str());
    }
    // The second inequality rests on the fold being a box point; check it.
    BoxPoint folded = fold_box_points(prev.point, step.point, s);
    Int h = folded.embedded.back();
    if (h < 0 || h > Int(s.n())) fail("folded point left the parallelepiped");
  }
  return verdict;
}

BoxPoint fold_box_points(const BoxPoint& a, const BoxPoint& b, const EmbeddedSimplex& s) {
  const std::size_t m = s.n() + 1;
  if (a.lambdas.size() != m || b.lambdas.size() != m)
    throw input_error("box points do not belong to this simplex");
  BoxPoint out;
  out.lambdas.assign(m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    out.lambdas[i] = frac_part(a.lambdas[i] + b.lambdas[i]);
    if (out.lambdas[i] != 0) out.support.push_back(i);
  }
  out.embedded.assign(m, Int(0));
  for (std::size_t row = 0; row < m; ++row) {
    Rat acc(0);
    for (std::size_t col = 0; col < m; ++col)
      if (out.lambdas[col] != 0) acc += Rat(s.vmat.at(row, col)) * out.lambdas[col];
    if (!is_integer(acc)) throw internal_error("fold left the lattice");
    out.embedded[row] = numerator(acc);
  }
  Int h = out.embedded.back();
  out.height = static_cast<unsigned>(to_int64(h));
  std::vector<Int> chart(out.embedded.begin(), out.embedded.end() - 1);
  out.ambient = s.poly.chart_to_ambient(chart, h);
  return out;
}

}  // namespace latgeo
