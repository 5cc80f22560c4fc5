#pragma once

#include <map>
#include <string>
#include <vector>

#include "runpoly/linear.hpp"

namespace runpoly {

/// Rank of a rational matrix (consumed) by Gaussian elimination.
int rational_rank(std::vector<std::vector<Rat>> M);

/// Dimension of the affine hull of the points (exact rank of difference
/// vectors).  Throws std::invalid_argument on an empty list.
int affine_dim(const std::vector<std::vector<Rat>>& points);

/// True iff the tight constraints at the point have rank equal to the number
/// of variables.  The point must lie in the polytope (std::invalid_argument
/// otherwise).
bool is_extreme(const HPolytope& poly, const std::map<std::string, Rat>& point);

struct VertexEnumOptions {
  int max_dim = 16;  // applies to the dimension left after equality elimination
};

/// Exact vertex list via the double description method: equalities are
/// eliminated first, the inequality cone is homogenized, and constraints are
/// inserted in the given order with a rank-based adjacency test.
/// Throws unbounded_error when the feasible set has a recession direction,
/// resource_limit_error when the reduced dimension exceeds the limit.
/// An empty polytope yields an empty list.
std::vector<std::map<std::string, Rat>> enumerate_vertices(
    const HPolytope& poly, const VertexEnumOptions& opt = {});

/// True iff p is a convex combination of the listed points (exact LP
/// feasibility).  Throws std::invalid_argument on dimension mismatch or an
/// empty list.
bool membership_in_conv(const std::vector<std::vector<Rat>>& points,
                        const std::vector<Rat>& p);

/// A basis of the affine relations a.x = c satisfied by every listed point;
/// empty when the points affinely span the whole space.
std::vector<std::pair<std::vector<Rat>, Rat>> affine_hull_relations(
    const std::vector<std::vector<Rat>>& points);

}  // namespace runpoly
