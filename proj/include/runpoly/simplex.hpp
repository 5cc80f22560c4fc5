#pragma once

#include <map>
#include <string>
#include <vector>

#include "runpoly/linear.hpp"

namespace runpoly {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;                         // objective value when Optimal
  std::map<std::string, Rat> point;  // a basic optimal solution when Optimal
};

/// Exact two-phase tableau simplex over the rationals, pivoting by Bland's
/// rule exclusively.  Free variables are split into sign parts; rows of the
/// form -x <= 0 are recognized as plain nonnegativity so the split (and the
/// row) is skipped for them.
///
/// The engine keeps its feasible basis between calls, so sweeping many
/// objectives over one polytope re-enters at phase 2.
class LpEngine {
 public:
  explicit LpEngine(const HPolytope& poly);

  /// Optimal basic solutions returned by this map to vertices of the
  /// polytope whenever it is pointed.
  LpResult optimize(const std::map<std::string, Rat>& objective, bool maximize);
  bool feasible();

 private:
  void build(const HPolytope& poly);
  void run_phase1();
  /// Bland iteration on the current tableau for reduced-cost row `red`;
  /// returns false when unbounded.  Columns >= col_limit never enter.
  bool iterate(std::vector<Rat>& red, Rat& value, int col_limit);
  void pivot(int row, int col, std::vector<Rat>& red, Rat& value);

  std::vector<std::string> vars_;
  std::vector<int> col_var_;   // structural column -> variable index
  std::vector<int> col_sign_;  // +1 for the positive part, -1 for the negative
  int struct_cols_ = 0;
  int cols_ = 0;  // structural + slack columns (b is stored at index cols_)
  std::vector<std::vector<Rat>> T_;
  std::vector<int> row_slack_;  // per row: its slack column, -1 for equalities
  std::vector<int> basis_;
  bool phase1_done_ = false;
  bool infeasible_ = false;
};

LpResult lp_optimize(const HPolytope& poly,
                     const std::map<std::string, Rat>& objective,
                     bool maximize);
bool lp_feasible(const HPolytope& poly);

}  // namespace runpoly
