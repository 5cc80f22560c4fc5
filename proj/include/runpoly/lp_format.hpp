#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "runpoly/linear.hpp"

namespace runpoly {

/// Writes the polytope in LP file format (objective, subject-to, bounds and
/// generals sections).  Every row is scaled to integer coefficients by
/// clearing denominators, so the output is bit-exact and diff-able across
/// runs.  Variables appear under Bounds as free (bounds live in the rows);
/// names in integer_vars are listed under Generals.
void write_lp(std::ostream& os, const HPolytope& poly,
              const std::map<std::string, Rat>& objective, bool maximize,
              const std::vector<std::string>& integer_vars = {});

std::string to_lp_string(const HPolytope& poly,
                         const std::map<std::string, Rat>& objective,
                         bool maximize,
                         const std::vector<std::string>& integer_vars = {});

}  // namespace runpoly
