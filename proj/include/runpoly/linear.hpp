#pragma once

#include <map>
#include <string>
#include <vector>

#include "runpoly/rational.hpp"

#include <json.hpp>

namespace runpoly {

enum class Sense { LE, EQ, GE };

/// One linear constraint sum(coeffs[v] * v) <sense> rhs over named variables.
/// The normalized form (sense <= or =, jointly coprime integer coefficients
/// and right-hand side, equalities sign-fixed by their lexicographically
/// first variable) defines syntactic equality of constraints.
struct LinIneq {
  std::string name;
  std::map<std::string, Rat> coeffs;
  Rat rhs;
  Sense sense = Sense::LE;

  LinIneq() = default;
  LinIneq(std::string name_, std::map<std::string, Rat> coeffs_, Sense sense_,
          Rat rhs_)
      : name(std::move(name_)),
        coeffs(std::move(coeffs_)),
        rhs(std::move(rhs_)),
        sense(sense_) {}

  Rat lhs_value(const std::map<std::string, Rat>& point) const;
  bool satisfied(const std::map<std::string, Rat>& point) const;

  LinIneq normalized() const;

  /// Identity of the normalized (coeffs, sense, rhs) triple; names ignored.
  bool same_constraint(const LinIneq& other) const;

  std::string to_string() const;
};

bool lex_less(const LinIneq& a, const LinIneq& b);  // on normalized triples

/// A polytope in H-representation over an ordered list of named variables.
/// Inequalities are stored with sense <= (>= rows are flipped on insert);
/// boundedness is not assumed.
struct HPolytope {
  std::string name;
  std::vector<std::string> variables;
  std::vector<LinIneq> equalities;
  std::vector<LinIneq> inequalities;

  void add_variable(const std::string& v);
  bool has_variable(const std::string& v) const;
  int var_index(const std::string& v) const;  // -1 when absent

  /// Inserts by sense; every referenced variable must be declared.
  void add_row(LinIneq row);

  /// Exact membership; the point must assign every declared variable
  /// (std::invalid_argument otherwise).
  bool contains(const std::map<std::string, Rat>& point) const;

  /// All rows normalized, deduplicated and sorted; the canonical view used
  /// for syntactic comparison of constraint systems.
  std::vector<LinIneq> normalized_rows() const;

  /// Fixes variables to values: rows lose the fixed terms (folded into the
  /// right-hand side) and fixed variables disappear.  Rows left with no
  /// variables are kept (they encode 0 <= c / 0 = c feasibility facts).
  HPolytope substitute(const std::map<std::string, Rat>& fixed) const;

  nlohmann::json to_json() const;

  std::map<std::string, Rat> as_point(const std::vector<Rat>& dense) const;
  std::vector<Rat> as_dense(const std::map<std::string, Rat>& point) const;
};

/// Dense integer view of a normalized row, for fast scans over 0/1 points.
struct IntRow {
  std::vector<std::pair<int, long long>> terms;  // (variable index, coeff)
  long long rhs = 0;
  bool eq = false;
};

std::vector<IntRow> compile_int_rows(const HPolytope& poly);
bool int_rows_satisfied(const std::vector<IntRow>& rows,
                        const std::vector<int>& dense01);

}  // namespace runpoly
