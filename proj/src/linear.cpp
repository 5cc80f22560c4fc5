#include "runpoly/linear.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace runpoly {

Rat LinIneq::lhs_value(const std::map<std::string, Rat>& point) const {
  Rat acc = 0;
  for (const auto& [v, c] : coeffs) {
    auto it = point.find(v);
    if (it == point.end())
      throw std::invalid_argument("constraint " + name +
                                  ": point does not assign variable " + v);
    acc += c * it->second;
  }
  return acc;
}

bool LinIneq::satisfied(const std::map<std::string, Rat>& point) const {
  Rat v = lhs_value(point);
  switch (sense) {
    case Sense::LE: return v <= rhs;
    case Sense::EQ: return v == rhs;
    case Sense::GE: return v >= rhs;
  }
  return false;
}

LinIneq LinIneq::normalized() const {
  LinIneq out;
  out.name = name;
  out.sense = (sense == Sense::EQ) ? Sense::EQ : Sense::LE;
  Rat flip = (sense == Sense::GE) ? Rat(-1) : Rat(1);
  for (const auto& [v, c] : coeffs)
    if (c != 0) out.coeffs.emplace(v, flip * c);
  out.rhs = flip * rhs;

  if (out.coeffs.empty()) {
    // 0 <= rhs / 0 = rhs: reduce rhs to its sign
    if (out.rhs != 0) out.rhs = (out.rhs > 0) ? 1 : -1;
    if (out.sense == Sense::EQ && out.rhs < 0) out.rhs = 1;
    return out;
  }
  // clear denominators, divide by the joint gcd of all numerators
  Int lcm_den = 1;
  for (const auto& [v, c] : out.coeffs)
    lcm_den = boost::multiprecision::lcm(lcm_den, rat_den(c));
  lcm_den = boost::multiprecision::lcm(lcm_den, rat_den(out.rhs));
  Int g = 0;
  auto scaled_num = [&](const Rat& c) { return rat_num(c) * (lcm_den / rat_den(c)); };
  for (const auto& [v, c] : out.coeffs)
    g = boost::multiprecision::gcd(g, scaled_num(c));
  g = boost::multiprecision::gcd(g, scaled_num(out.rhs));
  if (g == 0) g = 1;
  // equalities: sign fixed so the first variable's coefficient is positive
  Int sign = 1;
  if (out.sense == Sense::EQ && scaled_num(out.coeffs.begin()->second) < 0)
    sign = -1;
  for (auto& [v, c] : out.coeffs) c = Rat(sign * scaled_num(c) / g);
  out.rhs = Rat(sign * scaled_num(out.rhs) / g);
  return out;
}

bool LinIneq::same_constraint(const LinIneq& other) const {
  LinIneq a = normalized(), b = other.normalized();
  return a.sense == b.sense && a.rhs == b.rhs && a.coeffs == b.coeffs;
}

std::string LinIneq::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : coeffs) {
    if (c == 0) continue;
    if (c > 0 && !first) os << " + ";
    if (c < 0) os << (first ? "-" : " - ");
    Rat a = abs(c);
    if (a != 1) os << rat_str(a) << " ";
    os << v;
    first = false;
  }
  if (first) os << "0";
  switch (sense) {
    case Sense::LE: os << " <= "; break;
    case Sense::EQ: os << " = "; break;
    case Sense::GE: os << " >= "; break;
  }
  os << rat_str(rhs);
  return os.str();
}

bool lex_less(const LinIneq& a, const LinIneq& b) {
  LinIneq x = a.normalized(), y = b.normalized();
  if (x.sense != y.sense) return x.sense < y.sense;
  if (x.coeffs != y.coeffs)
    return std::lexicographical_compare(
        x.coeffs.begin(), x.coeffs.end(), y.coeffs.begin(), y.coeffs.end());
  return x.rhs < y.rhs;
}

void HPolytope::add_variable(const std::string& v) {
  if (has_variable(v))
    throw std::invalid_argument("polytope: duplicate variable " + v);
  variables.push_back(v);
}

bool HPolytope::has_variable(const std::string& v) const {
  return std::find(variables.begin(), variables.end(), v) != variables.end();
}

int HPolytope::var_index(const std::string& v) const {
  auto it = std::find(variables.begin(), variables.end(), v);
  return it == variables.end() ? -1 : static_cast<int>(it - variables.begin());
}

void HPolytope::add_row(LinIneq row) {
  for (const auto& [v, c] : row.coeffs)
    if (!has_variable(v))
      throw std::invalid_argument("polytope: row " + row.name +
                                  " references undeclared variable " + v);
  if (row.name.empty())
    row.name = "r" + std::to_string(equalities.size() + inequalities.size());
  if (row.sense == Sense::EQ) {
    equalities.push_back(std::move(row));
    return;
  }
  if (row.sense == Sense::GE) {  // store as <=
    for (auto& [v, c] : row.coeffs) c = -c;
    row.rhs = -row.rhs;
    row.sense = Sense::LE;
  }
  inequalities.push_back(std::move(row));
}

bool HPolytope::contains(const std::map<std::string, Rat>& point) const {
  for (const std::string& v : variables)
    if (!point.count(v))
      throw std::invalid_argument("polytope: point does not assign variable " + v);
  for (const auto& row : equalities)
    if (!row.satisfied(point)) return false;
  for (const auto& row : inequalities)
    if (!row.satisfied(point)) return false;
  return true;
}

std::vector<LinIneq> HPolytope::normalized_rows() const {
  std::vector<LinIneq> rows;
  rows.reserve(equalities.size() + inequalities.size());
  for (const auto& r : equalities) rows.push_back(r.normalized());
  for (const auto& r : inequalities) rows.push_back(r.normalized());
  std::sort(rows.begin(), rows.end(), lex_less);
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const LinIneq& a, const LinIneq& b) {
                           return a.same_constraint(b);
                         }),
             rows.end());
  return rows;
}

HPolytope HPolytope::substitute(const std::map<std::string, Rat>& fixed) const {
  HPolytope out;
  out.name = name;
  for (const std::string& v : variables)
    if (!fixed.count(v)) out.variables.push_back(v);
  auto reduce = [&](const LinIneq& row) {
    LinIneq r;
    r.name = row.name;
    r.sense = row.sense;
    r.rhs = row.rhs;
    for (const auto& [v, c] : row.coeffs) {
      auto it = fixed.find(v);
      if (it == fixed.end())
        r.coeffs.emplace(v, c);
      else
        r.rhs -= c * it->second;
    }
    return r;
  };
  for (const auto& row : equalities) out.equalities.push_back(reduce(row));
  for (const auto& row : inequalities) out.inequalities.push_back(reduce(row));
  return out;
}

nlohmann::json HPolytope::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["variables"] = variables;
  auto row_json = [](const LinIneq& r) {
    nlohmann::json c = nlohmann::json::object();
    for (const auto& [v, coeff] : r.coeffs) c[v] = rat_str(coeff);
    return nlohmann::json{{"coeffs", c},
                          {"sense", r.sense == Sense::EQ ? "=" : "<="},
                          {"rhs", rat_str(r.rhs)}};
  };
  j["rows"] = nlohmann::json::array();
  for (const auto& r : normalized_rows()) j["rows"].push_back(row_json(r));
  return j;
}

std::map<std::string, Rat> HPolytope::as_point(const std::vector<Rat>& dense) const {
  if (dense.size() != variables.size())
    throw std::invalid_argument("polytope: dense point has wrong dimension");
  std::map<std::string, Rat> p;
  for (size_t i = 0; i < variables.size(); ++i) p[variables[i]] = dense[i];
  return p;
}

std::vector<Rat> HPolytope::as_dense(const std::map<std::string, Rat>& point) const {
  std::vector<Rat> out;
  out.reserve(variables.size());
  for (const std::string& v : variables) {
    auto it = point.find(v);
    if (it == point.end())
      throw std::invalid_argument("polytope: point does not assign variable " + v);
    out.push_back(it->second);
  }
  return out;
}

std::vector<IntRow> compile_int_rows(const HPolytope& poly) {
  std::unordered_map<std::string, int> idx;
  for (size_t i = 0; i < poly.variables.size(); ++i)
    idx[poly.variables[i]] = static_cast<int>(i);
  std::vector<IntRow> out;
  auto push = [&](const LinIneq& raw) {
    LinIneq r = raw.normalized();
    IntRow row;
    row.eq = (r.sense == Sense::EQ);
    row.rhs = static_cast<long long>(rat_num(r.rhs));
    for (const auto& [v, c] : r.coeffs)
      row.terms.emplace_back(idx.at(v), static_cast<long long>(rat_num(c)));
    out.push_back(std::move(row));
  };
  for (const auto& r : poly.equalities) push(r);
  for (const auto& r : poly.inequalities) push(r);
  return out;
}

bool int_rows_satisfied(const std::vector<IntRow>& rows,
                        const std::vector<int>& dense01) {
  for (const IntRow& row : rows) {
    long long acc = 0;
    for (auto [i, c] : row.terms) acc += c * dense01[i];
    if (row.eq ? (acc != row.rhs) : (acc > row.rhs)) return false;
  }
  return true;
}

}  // namespace runpoly
