// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Everything is exact rational arithmetic; no tolerances anywhere.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "runpoly/checks.hpp"
#include "runpoly/cli_commands.hpp"
#include "runpoly/cuts.hpp"
#include "runpoly/disjunctive.hpp"
#include "runpoly/expanded.hpp"
#include "runpoly/netflow.hpp"
#include "runpoly/polyops.hpp"
#include "runpoly/simplex.hpp"
#include "runpoly/yzform.hpp"

using namespace runpoly;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::vector<Instance> constant_grid(int n_lo, int n_hi, int bound_cap) {
  std::vector<Instance> out;
  for (int n = n_lo; n <= n_hi; ++n)
    for (int a = 1; a <= bound_cap && a <= n - 1; ++a)
      for (int b = a; b <= bound_cap && b <= n - 1; ++b)
        for (int g = 1; g <= bound_cap && g <= n - 1; ++g)
          for (int d = g; d <= bound_cap && d <= n - 1; ++d)
            out.push_back(Instance::constant(n, a, b, g, d));
  return out;
}

YZPoint fractional_point_1313() {
  YZPoint p;
  for (int t = 0; t < 6; ++t) {
    p.y.push_back(t % 2 == 0 ? Rat(1) : Rat(1) / 2);
    p.z.push_back(t % 2 == 0 ? Rat(1) / 2 : Rat(0));
  }
  return p;
}

std::map<std::string, Rat> fix_yz(const YZPoint& p) {
  std::map<std::string, Rat> fixed;
  for (size_t t = 0; t < p.y.size(); ++t) {
    fixed["y_" + std::to_string(t)] = p.y[t];
    fixed["z_" + std::to_string(t)] = p.z[t];
  }
  return fixed;
}

bool criterion_1(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  CheckOptions opt;
  opt.limit_n = 9;
  CheckReport report = run_suite("prop1", constant_grid(3, 9, 3), opt);
  double secs = seconds_since(t0);
  std::ostringstream d;
  d << report.passed << " checks over the n=3..9 grid in " << secs << "s";
  detail = d.str();
  if (!report.ok()) {
    detail += "; first witness: " + report.witnesses.front();
    return false;
  }
  return secs < 30.0;
}

bool criterion_2(std::string& detail) {
  Instance inst = Instance::constant(6, 1, 2, 1, 2);
  CycleNetwork net = build_network(inst);
  std::vector<int> cycle{net.find_arc(0, 0, 2), net.find_arc(1, 2, 1),
                         net.find_arc(0, 3, 1), net.find_arc(1, 4, 2)};
  YZPoint p = cycle_to_point(net, cycle).yz;
  detail = "dashed cycle maps to " + p.bitstring();
  return p.bitstring() == "110100|100100";
}

bool criterion_3(std::string& detail) {
  Instance inst = Instance::constant(6, 1, 3, 1, 3);
  CycleNetwork net = build_network(inst);
  std::vector<int> cycle{net.find_arc(0, 0, 3), net.find_arc(1, 3, 1),
                         net.find_arc(0, 4, 3), net.find_arc(1, 1, 1),
                         net.find_arc(0, 2, 3), net.find_arc(1, 5, 1)};
  auto cert = fractional_vertex_certificate(inst, cycle, Rat(1) / 2);
  std::ostringstream d;
  d << "extreme=" << cert.extreme << " in_hull=" << cert.in_hull
    << " projection=y(1,1/2,...)";
  detail = d.str();
  YZPoint expect = fractional_point_1313();
  return cert.extreme && !cert.in_hull && cert.projection == expect;
}

bool criterion_4(std::string& detail) {
  CheckOptions opt;
  opt.limit_n = 7;
  CheckReport report = run_suite("prop2", constant_grid(3, 7, 3), opt);
  detail = std::to_string(report.passed) + " instances, full 2^(2n) scans";
  if (!report.ok()) detail += "; witness: " + report.witnesses.front();
  return report.ok();
}

bool criterion_5(std::string& detail) {
  auto [T0, T1] = switch_sets(Instance::constant(6, 1, 2, 1, 2));
  if (T0 != std::vector<int>{4, 5} || T1 != std::vector<int>{4, 5}) {
    detail = "wrap candidate sets differ from {4,5}";
    return false;
  }
  CheckOptions opt;  // 200 seeded objectives per instance
  CheckReport report =
      run_suite("qprime-hull",
                {Instance::constant(6, 1, 2, 1, 2),
                 Instance::constant(6, 1, 3, 1, 3)},
                opt);
  detail = std::to_string(report.passed) +
           " objective sweeps integral, feasible and hull-tight; T0=T1={4,5}";
  if (!report.ok()) detail += "; witness: " + report.witnesses.front();
  return report.ok();
}

bool criterion_6(std::string& detail) {
  int instances = 0;
  for (const Instance& inst : constant_grid(4, 7, 3)) {
    ExpandedNetwork net = build_expanded(inst, true);
    auto paths = enumerate_od_paths(net);
    auto Z = enumerate_Z(inst);
    if (paths.size() != Z.size()) {
      detail = inst.describe() + ": path count " +
               std::to_string(paths.size()) + " != |Z| " +
               std::to_string(Z.size());
      return false;
    }
    std::set<YZPoint> zs(Z.begin(), Z.end());
    std::set<YZPoint> seen;
    for (const auto& path : paths) {
      YZPoint p = path_to_point(net, path);
      if (!zs.count(p)) {
        detail = inst.describe() + ": path maps outside Z: " + p.bitstring();
        return false;
      }
      seen.insert(p);
    }
    if (seen.size() != Z.size()) {
      detail = inst.describe() + ": path map is not onto Z";
      return false;
    }
    ++instances;
  }
  detail = std::to_string(instances) + " instances, both directions";
  return true;
}

bool criterion_7(std::string& detail) {
  CheckOptions opt;
  opt.limit_n = 8;
  std::vector<Instance> instances = constant_grid(4, 8, 3);
  for (const Instance& inst : seeded_monotone_instances(7, 10, kDefaultSeed))
    instances.push_back(inst);
  CheckReport report = run_suite("prop6", instances, opt);
  detail = std::to_string(report.passed) +
           " instances (grid + 10 seeded time-varying), full 2^(2n) scans";
  if (!report.ok()) detail += "; witness: " + report.witnesses.front();
  return report.ok();
}

bool criterion_8(std::string& detail) {
  Instance i7 = Instance::constant(7, 1, 2, 1, 2);
  auto [ub7, lb7] = z_count_cuts(i7);
  auto [lby7, uby7] = y_count_cuts(i7);
  for (const LinIneq& cut : {ub7, lb7, lby7, uby7}) {
    CutCertificate cert = certify_facet(i7, cut);
    if (!(cert.valid && cert.dim_PI == 14 && cert.is_facet)) {
      detail = "n=7 cut " + cut.to_string() + " not certified as a facet";
      return false;
    }
  }
  Instance i6 = Instance::constant(6, 1, 2, 1, 2);
  auto [ub6, lb6] = z_count_cuts(i6);
  CutCertificate c6 = certify_facet(i6, ub6);
  if (!(c6.valid && !c6.is_facet)) {
    detail = "n=6 upper start-up cut should be valid but not a facet";
    return false;
  }
  detail = "n=7: dim 14, all four count cuts facets; n=6: upper cut valid, "
           "not a facet";
  return true;
}

bool criterion_9(std::string& detail) {
  std::ostringstream d;
  for (int n : {4, 5, 6}) {
    Instance inst = Instance::constant(n, 1, 2, 1, 2);
    std::vector<LinIneq> system;
    for (const LinIneq& row : build_P(inst).poly.inequalities)
      system.push_back(row);
    auto [ub, lb] = z_count_cuts(inst);
    if (n <= 5) {
      system.push_back(ub);
      system.push_back(lb);
    } else {
      system.push_back(lb);
      for (int t = 0; t < n; ++t)
        for (const LinIneq& cut : family_1212_cuts(inst, t))
          system.push_back(cut);
    }
    auto t0 = std::chrono::steady_clock::now();
    bool ok = full_description_check(inst, system);
    double secs = seconds_since(t0);
    d << "n=" << n << ": " << (ok ? "complete" : "INCOMPLETE") << " in "
      << secs << "s; ";
    if (!ok || secs >= 300.0) {
      detail = d.str();
      return false;
    }
  }
  detail = d.str();
  return true;
}

bool criterion_10(std::string& detail) {
  Instance i6 = Instance::constant(6, 1, 2, 1, 2);
  CheckOptions opt;
  CheckReport blocks = run_suite("lemma-blocks", {i6}, opt);
  if (!blocks.ok()) {
    detail = "block check: " + blocks.witnesses.front();
    return false;
  }
  CheckReport hull = run_suite("phat-hull", {i6}, opt);
  if (!hull.ok()) {
    detail = "hull sweep: " + hull.witnesses.front();
    return false;
  }
  HPolytope phat13 = build_Phat(Instance::constant(6, 1, 3, 1, 3));
  if (lp_feasible(phat13.substitute(fix_yz(fractional_point_1313())))) {
    detail = "fractional point not excluded";
    return false;
  }
  detail = "partition + " + std::to_string(blocks.passed) + " block checks, " +
           std::to_string(hull.passed) +
           " hull sweeps, fractional point excluded";
  return true;
}

bool criterion_11(std::string& detail) {
  // constant windows: variable count 18n - 14, exactly linear
  long long prev = 0, diff = 0;
  for (int n = 4; n <= 12; ++n) {
    SizeReport r = size_report(Instance::constant(n, 1, 2, 1, 2));
    long long vars = r.arcs + 2 * n;
    if (n > 4 && diff != 0 && vars - prev != diff) {
      detail = "variable count is not linear at n=" + std::to_string(n);
      return false;
    }
    if (n > 4) diff = vars - prev;
    prev = vars;
  }
  // widest windows: cubic, arcs <= c n^3 with c the fitted maximum
  Rat c = 0;
  for (int n = 4; n <= 10; ++n) {
    SizeReport r = size_report(Instance::constant(n, 1, n - 1, 1, n - 1));
    Rat ratio = Rat(r.arcs) / Rat(n * n * n);
    if (ratio > c) c = ratio;
  }
  if (c > 2) {
    detail = "cubic fit constant " + rat_str(c) + " exceeds 2";
    return false;
  }
  std::ostringstream d;
  d << "constant windows: variables = 18n-14 (linear); widest windows: arcs"
    << " <= c n^3 with fitted c = " << rat_str(c);
  detail = d.str();
  return true;
}

bool criterion_12(std::string& detail) {
  ConjectureResult base = run_conjecture(Instance::constant(5, 1, 2, 1, 2));
  if (base.verdict != ConjectureVerdict::Equal) {
    detail = "n=5 (1,2,1,2) verdict " + to_string(base.verdict);
    return false;
  }
  int equal = 0, strict = 0;
  for (const Instance& inst : constant_grid(2, 6, 3)) {
    ConjectureResult res = run_conjecture(inst);
    if (res.verdict == ConjectureVerdict::Inconclusive) {
      detail = inst.describe() + ": inconclusive (" + res.witness + ")";
      return false;
    }
    (res.verdict == ConjectureVerdict::Equal ? equal : strict) += 1;
  }
  std::ostringstream d;
  d << "definite verdicts on the full grid: " << equal << " equal, " << strict
    << " strict";
  detail = d.str();
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "startup count range and witnesses over the constant grid",
       criterion_1},
      {2, "dashed cycle reproduces the reference schedule", criterion_2},
      {3, "half-weight cycle: extreme point of Q outside conv(Z)", criterion_3},
      {4, "0/1 pairs feasible for the flow formulation are exactly Z",
       criterion_4},
      {5, "expanded formulation: integral optima matching the hull",
       criterion_5},
      {6, "O-D paths in bijection with Z", criterion_6},
      {7, "0/1 points of the schedule-space relaxation are exactly Z",
       criterion_7},
      {8, "count cut facet certificates (n=7 and n=6)", criterion_8},
      {9, "complete hull descriptions for n=4,5,6", criterion_9},
      {10, "last-switch blocks and the combined formulation", criterion_10},
      {11, "expanded network size audit (linear / cubic)", criterion_11},
      {12, "flow shadow vs direct relaxation: definite verdicts",
       criterion_12},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": "
              << c.label;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n" << std::flush;
    if (!ok) ++failures;
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 12 criteria passed\n";
  return 0;
}
