#pragma once

#include <array>
#include <utility>
#include <vector>

#include "runpoly/instance.hpp"
#include "runpoly/linear.hpp"
#include "runpoly/polyops.hpp"

namespace runpoly {

/// Start-up count cuts for constant bounds:
/// sum z <= floor(n/(alpha+gamma)) and sum z >= ceil(n/(beta+delta)).
/// Returned as (upper, lower).  Throws std::invalid_argument when bounds are
/// not constant.
std::pair<LinIneq, LinIneq> z_count_cuts(const Instance& inst);

/// On-period count cuts for constant bounds, returned as (lower, upper):
/// with n = q1(alpha+delta) + r1 and n = q2(beta+gamma) - r2,
/// sum y >= q1 alpha + min(r1, alpha) and sum y <= q2 beta - min(r2, beta).
std::pair<LinIneq, LinIneq> y_count_cuts(const Instance& inst);

/// The three cut families specific to constant bounds (1,2,1,2), anchored at
/// period t.  Throws std::invalid_argument on any other bounds.
std::array<LinIneq, 3> family_1212_cuts(const Instance& inst, int t);

/// True iff every point of Z satisfies the cut exactly.
bool validate_cut(const Instance& inst, const LinIneq& cut, int limit_n = 20);

struct CutCertificate {
  LinIneq cut;
  bool valid = false;
  std::vector<YZPoint> tight_points;
  int dim_PI = -1;   // affine dimension of Z
  bool is_facet = false;  // valid and tight set of affine dimension dim_PI - 1
};

/// Enumeration-based facet certificate: validity against the oracle, the
/// tight subset of Z, and affine ranks.  Throws std::domain_error when Z is
/// empty (the dimension is undefined).
CutCertificate certify_facet(const Instance& inst, const LinIneq& cut,
                             int limit_n = 20);

/// True iff every point of Z satisfies the system and, within the affine
/// hull of conv(Z), the system has only integral oracle-feasible vertices:
/// the system is then a complete facet description of conv(Z).  Comparing
/// within the hull follows the usual convention for lower-dimensional
/// polytopes (when conv(Z) is full-dimensional nothing changes).
bool full_description_check(const Instance& inst,
                            const std::vector<LinIneq>& system,
                            const VertexEnumOptions& opt = {});

}  // namespace runpoly
