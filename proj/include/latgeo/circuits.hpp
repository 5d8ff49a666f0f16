#pragma once

#include "latgeo/numbers.hpp"
#include "latgeo/polytope.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace latgeo {

/// A minimal affinely dependent subset of the vertex set with its unique
/// primitive integer relation sum_{positive} z_i v_i = sum_{negative} z_j v_j.
/// `coefficients` are parallel to `members` and all positive; the side split
/// is canonical: the lowest member index sits in the positive part.
struct Circuit {
  std::vector<std::size_t> members;       // ascending vertex indices
  std::vector<Int> coefficients;          // z > 0, parallel to members
  std::vector<std::size_t> positive;      // indices into the vertex list
  std::vector<std::size_t> negative;
  std::size_t size() const { return members.size(); }
};

/// All circuits, by scanning vertex subsets of size 2 .. dim+2. Subset scan
/// is OpenMP-parallel; output is sorted by member set.
std::vector<Circuit> enumerate_circuits(const LatticePolytope& p);
std::vector<Circuit> enumerate_circuits_serial(const LatticePolytope& p);

/// Vertices contained in no circuit (combinatorial pyramid apexes).
std::vector<std::size_t> combinatorial_pyramid_apexes(const LatticePolytope& p);

struct CircuitBoundVerdict {
  bool pass = true;
  std::size_t max_size = 0;
  std::size_t bound = 0;      // 2 deg + 2
  std::string witness;        // violating member set, if any
};

/// Every circuit must have at most 2 deg(P) + 2 members; a failure would
/// contradict the mathematics and is reported with the violating circuit.
CircuitBoundVerdict check_circuit_bound(const LatticePolytope& p);

}  // namespace latgeo
