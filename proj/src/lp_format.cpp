#include "runpoly/lp_format.hpp"

#include <ostream>
#include <sstream>

namespace runpoly {

namespace {

void write_terms(std::ostream& os, const LinIneq& row) {
  bool first = true;
  for (const auto& [v, c] : row.coeffs) {
    if (c == 0) continue;
    Rat a = abs(c);
    if (c > 0)
      os << (first ? "" : " + ");
    else
      os << (first ? "- " : " - ");
    if (a != 1) os << rat_str(a) << " ";
    os << v;
    first = false;
  }
  if (first) os << "0 " << "__zero";  // no live terms; keep the row readable
}

}  // namespace

void write_lp(std::ostream& os, const HPolytope& poly,
              const std::map<std::string, Rat>& objective, bool maximize,
              const std::vector<std::string>& integer_vars) {
  os << "\\ " << (poly.name.empty() ? std::string("polytope") : poly.name)
     << "\n";
  os << (maximize ? "Maximize" : "Minimize") << "\n obj:";
  LinIneq obj;
  obj.coeffs = objective;
  obj.sense = Sense::LE;
  obj.rhs = 0;
  LinIneq scaled_obj = obj.normalized();
  if (scaled_obj.coeffs.empty()) {
    os << " 0 " << (poly.variables.empty() ? "__zero" : poly.variables[0]);
  } else {
    os << " ";
    write_terms(os, scaled_obj);
  }
  os << "\nSubject To\n";
  auto emit = [&os](const LinIneq& raw) {
    LinIneq r = raw.normalized();
    os << " " << raw.name << ": ";
    write_terms(os, r);
    os << (r.sense == Sense::EQ ? " = " : " <= ") << rat_str(r.rhs) << "\n";
  };
  for (const auto& r : poly.equalities) emit(r);
  for (const auto& r : poly.inequalities) emit(r);
  os << "Bounds\n";
  for (const auto& v : poly.variables) os << " " << v << " free\n";
  if (!integer_vars.empty()) {
    os << "Generals\n";
    for (const auto& v : integer_vars) os << " " << v << "\n";
  }
  os << "End\n";
}

std::string to_lp_string(const HPolytope& poly,
                         const std::map<std::string, Rat>& objective,
                         bool maximize,
                         const std::vector<std::string>& integer_vars) {
  std::ostringstream os;
  write_lp(os, poly, objective, maximize, integer_vars);
  return os.str();
}

}  // namespace runpoly
