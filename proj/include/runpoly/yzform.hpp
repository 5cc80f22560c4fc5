#pragma once

#include <vector>

#include "runpoly/instance.hpp"
#include "runpoly/linear.hpp"

namespace runpoly {

/// The relaxation in schedule space over {y_t} + {z_t}: switch-on coupling,
/// the four window rows driven by the s-indices, and unit box bounds --
/// 5n inequality rows plus 4n bound rows.  Valid only under weakly monotone
/// bounds.
struct PFormulation {
  HPolytope poly;
  std::vector<int> s_alpha, s_beta, s_gamma, s_delta;

  int n() const { return static_cast<int>(s_alpha.size()); }
};

/// General weakly-monotone build (window rows via s-indices).
/// Throws std::invalid_argument naming the first offending period when some
/// bound vector is not weakly monotone.
PFormulation build_P(const Instance& inst);

/// Constant-bound rewrite with fixed-offset windows; the normalized row set
/// coincides with build_P's on every constant instance.
PFormulation build_P_const(const Instance& inst);

/// All 0/1 points of the formulation, by full 2^(2n) scan; equals Z.
std::vector<YZPoint> integral_points(const PFormulation& pf, int limit_n = 12);

}  // namespace runpoly
