#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace runpoly {

// Exact arithmetic everywhere: an arbitrary-precision integer and a
// rational kept in lowest terms with positive denominator (the GMP
// canonical form).
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

inline Int rat_num(const Rat& r) { return Int(numerator(r)); }
inline Int rat_den(const Rat& r) { return Int(denominator(r)); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

/// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
  Int q = rat_num(r) / rat_den(r);
  if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
  return q;
}

/// Smallest integer >= r.
inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline std::string rat_str(const Rat& r) { return r.str(); }

/// Thrown when an operation would exceed a configured enumeration or
/// dimension limit.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Thrown when a bounded polytope was required but the feasible set has
/// a recession direction.
class unbounded_error : public std::runtime_error {
 public:
  explicit unbounded_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace runpoly
