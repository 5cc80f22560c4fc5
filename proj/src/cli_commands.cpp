#include "runpoly/cli_commands.hpp"

#include <iostream>
#include <map>
#include <regex>
#include <sstream>

#include "runpoly/disjunctive.hpp"
#include "runpoly/expanded.hpp"
#include "runpoly/lp_format.hpp"
#include "runpoly/netflow.hpp"
#include "runpoly/yzform.hpp"

namespace runpoly {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<int> parse_tuple(const std::string& body, size_t count,
                             const std::string& what) {
  std::vector<int> vals;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) vals.push_back(std::stoi(trim(item)));
  if (vals.size() != count)
    throw std::invalid_argument("grid: " + what + " needs " +
                                std::to_string(count) + " integers");
  return vals;
}

}  // namespace

std::vector<Instance> expand_grid(const std::string& spec) {
  int n_lo = -1, n_hi = -1;
  std::vector<int> constants;
  std::vector<int> allconst;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ';')) {
    part = trim(part);
    if (part.empty()) continue;
    std::smatch m;
    if (std::regex_match(part, m, std::regex(R"(n=(\d+)(\.\.(\d+))?)"))) {
      n_lo = std::stoi(m[1]);
      n_hi = m[3].matched ? std::stoi(m[3]) : n_lo;
    } else if (std::regex_match(part, m,
                                std::regex(R"(const=\(([^)]*)\))"))) {
      constants = parse_tuple(m[1], 4, "const");
    } else if (std::regex_match(part, m,
                                std::regex(R"(allconst=\(([^)]*)\))"))) {
      allconst = parse_tuple(m[1], 2, "allconst");
    } else {
      throw std::invalid_argument("grid: cannot parse \"" + part + "\"");
    }
  }
  if (n_lo < 0)
    throw std::invalid_argument("grid: missing n=<lo>[..<hi>]");
  if (constants.empty() == allconst.empty())
    throw std::invalid_argument(
        "grid: exactly one of const=(a,b,g,d) / allconst=(B,D) is required");
  std::vector<Instance> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    if (!constants.empty()) {
      out.push_back(Instance::constant(n, constants[0], constants[1],
                                       constants[2], constants[3]));
      continue;
    }
    int bmax = std::min(allconst[0], n - 1);
    int dmax = std::min(allconst[1], n - 1);
    for (int a = 1; a <= bmax; ++a)
      for (int b = a; b <= bmax; ++b)
        for (int g = 1; g <= dmax; ++g)
          for (int d = g; d <= dmax; ++d)
            out.push_back(Instance::constant(n, a, b, g, d));
  }
  return out;
}

int cmd_enumerate(const Instance& inst, std::ostream& os, int limit_n) {
  os << "instance: " << inst.describe() << "\n";
  auto Z = enumerate_Z(inst, limit_n);
  if (Z.empty()) {
    os << "Z is empty\n";
    return kExitOk;
  }
  std::map<int, int> histogram;
  for (const YZPoint& p : Z) {
    std::string bits = p.bitstring();
    os << bits.substr(0, inst.n) << " " << bits.substr(inst.n + 1) << "\n";
    int k = 0;
    for (const Rat& v : p.z) k += (v == 1);
    ++histogram[k];
  }
  os << "count: " << Z.size() << "\n";
  os << "startups:";
  for (auto [k, c] : histogram) os << " " << k << "x" << c;
  os << "\n";
  return kExitOk;
}

int cmd_formulate(const Instance& inst, const std::string& model,
                  const std::string& format, std::ostream& os) {
  if (format == "dot") {
    if (model == "Q") {
      os << network_to_dot(build_network(inst));
      return kExitOk;
    }
    if (model == "Qprime") {
      os << expanded_to_dot(build_expanded(inst, false));
      return kExitOk;
    }
    throw std::invalid_argument("dot output exists for models Q and Qprime");
  }
  HPolytope poly;
  if (model == "P")
    poly = build_P(inst).poly;
  else if (model == "Q")
    poly = build_Q(inst);
  else if (model == "Qprime")
    poly = build_Qprime(inst);
  else if (model == "Phat")
    poly = build_Phat(inst);
  else
    throw std::invalid_argument("unknown model \"" + model +
                                "\" (P, Q, Qprime, Phat)");
  if (format == "json") {
    os << poly.to_json().dump(2) << "\n";
    return kExitOk;
  }
  if (format != "lp")
    throw std::invalid_argument("unknown format \"" + format +
                                "\" (lp, json, dot)");
  std::vector<std::string> integer_vars;
  for (int t = 0; t < inst.n; ++t) integer_vars.push_back("y_" + std::to_string(t));
  for (int t = 0; t < inst.n; ++t) integer_vars.push_back("z_" + std::to_string(t));
  write_lp(os, poly, {}, true, integer_vars);
  return kExitOk;
}

int cmd_check(const std::vector<Instance>& instances, const std::string& suite,
              const CheckOptions& opt, std::ostream& os) {
  CheckReport report = run_suite(suite, instances, opt);
  for (const std::string& line : report.lines) os << line << "\n";
  for (const std::string& w : report.witnesses) os << "witness: " << w << "\n";
  os << "suite=" << report.suite << " passed=" << report.passed
     << " failed=" << report.failed << "\n";
  std::cerr << "suite " << report.suite << " took " << report.wall_seconds
            << "s\n";
  return report.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_conjecture(const Instance& inst, const CheckOptions& opt,
                   std::ostream& os) {
  ConjectureResult res = run_conjecture(inst, opt);
  os << "instance: " << inst.describe() << "\n";
  os << "verdict: " << to_string(res.verdict) << "\n";
  if (!res.witness.empty()) os << "witness: " << res.witness << "\n";
  return res.verdict == ConjectureVerdict::Inconclusive ? kExitResourceLimit
                                                        : kExitOk;
}

}  // namespace runpoly
