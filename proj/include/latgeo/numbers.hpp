#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latgeo {

/// Arbitrary-precision integer. Intermediate values in exact elimination
/// exceed 64 bits even for small inputs, so every arithmetic path uses this.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, kept in lowest terms with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

/// Bad user-supplied data (files, CLI arguments, malformed polytopes).
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated internal invariant; indicates an arithmetic or logic bug.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

/// Floor division, exact for any signs of a; b must be positive.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int numerator(const Rat& q) { return Int(boost::multiprecision::numerator(q)); }
inline Int denominator(const Rat& q) { return Int(boost::multiprecision::denominator(q)); }

inline Int floor_rat(const Rat& q) { return floor_div(numerator(q), denominator(q)); }

/// Fractional part in [0, 1).
inline Rat frac_part(const Rat& q) { return q - Rat(floor_rat(q)); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

/// Exact binomial coefficient; 0 outside the Pascal triangle.
inline Int binomial(const Int& n, const Int& k) {
  if (k < 0 || k > n) return 0;
  Int kk = k;
  if (n - k < kk) kk = n - k;
  Int result = 1;
  for (Int i = 1; i <= kk; ++i) {
    result *= n - kk + i;
    result /= i;  // exact at every step
  }
  return result;
}

/// Narrowing conversion used at the JSON boundary only.
inline std::int64_t to_int64(const Int& v) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max()) {
    throw internal_error("integer exceeds 64-bit range at serialization boundary");
  }
  return static_cast<std::int64_t>(v);
}

/// "p/q" rendering; integers render without the denominator.
inline std::string rat_to_string(const Rat& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace latgeo
