#pragma once

#include "latgeo/polytope.hpp"

#include <cstdint>
#include <vector>

namespace latgeo {

/// SplitMix64: state advances by 0x9E3779B97F4A7C15 and the output is the
/// finalizer mix. Fully specified here so corpora reproduce across
/// implementations; bounded draws use rejection sampling on the top band.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % n;
  }

  /// Uniform integer in [-bound, bound].
  long long coordinate(unsigned bound) {
    return static_cast<long long>(below(2ULL * bound + 1)) - bound;
  }
};

enum class CorpusShape { simplex, general };

/// Same spec, same corpus: the generator is pure in the seed.
struct CorpusSpec {
  std::uint64_t seed = 1;
  unsigned dim_min = 2;
  unsigned dim_max = 4;
  unsigned bound = 3;  // coordinates drawn from [-bound, bound]
  unsigned count = 10;
  CorpusShape shape = CorpusShape::general;
};

/// The simplex family with dim = 2d-1, volume 2, h* = 1 + t^d and no
/// pyramid apex: vertices e_0 - e_n, ..., e_{n-1} - e_n and
/// e_0 + ... + e_{n-1} + (3-2d) e_n in Z^{n+1}. Defined for d >= 2.
LatticePolytope paper_example(unsigned d);

/// conv(0, e_1, ..., e_n); the n = 0 case is the origin in Z^1.
LatticePolytope standard_simplex(unsigned n);

/// Deterministic corpus. Simplices are full-dimensional (resampled until
/// affinely independent); general polytopes take the hull of dim+2..dim+5
/// sampled points and keep degenerate results, which exercise the
/// lower-dimensional code paths.
std::vector<LatticePolytope> random_corpus(const CorpusSpec& spec);

}  // namespace latgeo
