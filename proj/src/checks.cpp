#include "runpoly/checks.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <random>
#include <sstream>

#include "runpoly/cuts.hpp"
#include "runpoly/disjunctive.hpp"
#include "runpoly/expanded.hpp"
#include "runpoly/polyops.hpp"
#include "runpoly/simplex.hpp"
#include "runpoly/yzform.hpp"

namespace runpoly {

namespace {

std::string yv(int t) { return "y_" + std::to_string(t); }
std::string zv(int t) { return "z_" + std::to_string(t); }

std::vector<std::string> yz_vars(int n) {
  std::vector<std::string> vars;
  for (int t = 0; t < n; ++t) vars.push_back(yv(t));
  for (int t = 0; t < n; ++t) vars.push_back(zv(t));
  return vars;
}

Rat eval_obj(const std::map<std::string, Rat>& obj, const YZPoint& p) {
  Rat v = 0;
  const int n = static_cast<int>(p.y.size());
  for (int t = 0; t < n; ++t) {
    auto iy = obj.find(yv(t));
    if (iy != obj.end() && p.y[t] != 0) v += iy->second * p.y[t];
    auto iz = obj.find(zv(t));
    if (iz != obj.end() && p.z[t] != 0) v += iz->second * p.z[t];
  }
  return v;
}

Rat max_over(const std::vector<YZPoint>& pts,
             const std::map<std::string, Rat>& obj) {
  Rat best;
  bool first = true;
  for (const YZPoint& p : pts) {
    Rat v = eval_obj(obj, p);
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

std::map<std::string, Rat> fix_yz(const YZPoint& p) {
  std::map<std::string, Rat> fixed;
  for (size_t t = 0; t < p.y.size(); ++t) {
    fixed[yv(static_cast<int>(t))] = p.y[t];
    fixed[zv(static_cast<int>(t))] = p.z[t];
  }
  return fixed;
}

YZPoint solution_yz(const std::map<std::string, Rat>& point, int n) {
  YZPoint p;
  for (int t = 0; t < n; ++t) {
    p.y.push_back(point.at(yv(t)));
    p.z.push_back(point.at(zv(t)));
  }
  return p;
}

bool oracle_member(const Instance& inst, const YZPoint& p) {
  if (!p.integral()) return false;
  std::uint32_t ybits = 0, zbits = 0;
  for (int t = 0; t < inst.n; ++t) {
    if (p.y[t] == 1) ybits |= 1u << t;
    if (p.z[t] == 1) zbits |= 1u << t;
  }
  return is_feasible_bits(inst, ybits) &&
         zbits == derive_startups_bits(ybits, inst.n);
}

struct PartialReport {
  int passed = 0;
  int failed = 0;
  std::vector<std::string> lines;
  std::vector<std::string> witnesses;

  void check(bool ok, const std::string& witness) {
    if (ok) {
      ++passed;
    } else {
      ++failed;
      witnesses.push_back(witness);
    }
  }
};

using SuiteFn = PartialReport (*)(const Instance&, const CheckOptions&);

PartialReport suite_prop1(const Instance& inst, const CheckOptions& opt) {
  if (!inst.constant_bounds())
    throw std::invalid_argument("suite prop1 needs constant bounds: " +
                                inst.describe());
  PartialReport r;
  std::set<int> seen;
  for (auto [y, z] : enumerate_Z_bits(inst, opt.limit_n))
    seen.insert(__builtin_popcount(z));
  auto range = startup_count_range(inst);
  {
    std::ostringstream w;
    w << inst.describe() << ": achievable startup counts {";
    for (int k : seen) w << k << ",";
    w << "} vs predicted {";
    for (int k : range) w << k << ",";
    w << "}";
    r.check(seen == range, w.str());
  }
  for (int k : range) {
    YZPoint wit = construct_witness(inst, k);
    int count = 0;
    for (const Rat& v : wit.z) count += (v == 1);
    r.check(oracle_member(inst, wit) && count == k,
            inst.describe() + ": witness for k=" + std::to_string(k) +
                " is " + wit.bitstring());
  }
  return r;
}

PartialReport suite_prop2(const Instance& inst, const CheckOptions& opt) {
  if (inst.n > opt.limit_n)
    throw resource_limit_error("suite prop2: n exceeds limit; lower n or raise --limit-n");
  PartialReport r;
  CycleNetwork net = build_network(inst);
  const int n = inst.n;
  int mismatches = 0;
  for (std::uint32_t y = 0; y < (1u << n); ++y) {
    bool y_ok = is_feasible_bits(inst, y);
    std::uint32_t zy = derive_startups_bits(y, n);
    for (std::uint32_t z = 0; z < (1u << n); ++z) {
      bool expect = y_ok && z == zy;
      bool got = q_projects_binary_pair(net, y, z);
      if (expect != got && mismatches < 5) {
        ++mismatches;
        std::ostringstream w;
        w << inst.describe() << ": pair " << yz_from_bits(y, z, n).bitstring()
          << " oracle=" << expect << " flow=" << got;
        r.witnesses.push_back(w.str());
      } else if (expect != got) {
        ++mismatches;
      }
    }
  }
  if (mismatches) {
    r.failed += 1;
  } else {
    r.passed += 1;
  }
  return r;
}

PartialReport suite_prop6(const Instance& inst, const CheckOptions& opt) {
  PartialReport r;
  r.check(integral_points(build_P(inst), opt.limit_n) ==
              enumerate_Z(inst, opt.limit_n),
          inst.describe() + ": 0/1 points of the relaxation differ from Z");
  return r;
}

PartialReport suite_qprime_hull(const Instance& inst, const CheckOptions& opt) {
  PartialReport r;
  HPolytope qp = build_Qprime(inst);
  auto Z = enumerate_Z(inst, opt.limit_n);
  LpEngine engine(qp);
  auto objectives = seeded_objectives(yz_vars(inst.n), opt.sweep_objectives,
                                      opt.seed);
  for (size_t k = 0; k < objectives.size(); ++k) {
    auto res = engine.optimize(objectives[k], true);
    std::string tag = inst.describe() + ": objective #" + std::to_string(k);
    if (Z.empty()) {
      r.check(res.status == LpStatus::Infeasible, tag + " should be infeasible");
      continue;
    }
    if (res.status != LpStatus::Optimal) {
      r.check(false, tag + " not optimal");
      continue;
    }
    YZPoint sol = solution_yz(res.point, inst.n);
    r.check(res.value == max_over(Z, objectives[k]) && oracle_member(inst, sol),
            tag + " -> " + rat_str(res.value) + " at a non-schedule vertex");
  }
  return r;
}

PartialReport suite_lemma_blocks(const Instance& inst, const CheckOptions& opt) {
  PartialReport r;
  auto cells = partition_Z(inst, opt.limit_n);
  {  // the cells partition Z
    size_t total = 0;
    std::set<YZPoint> dedup;
    for (auto& [key, pts] : cells) {
      total += pts.size();
      dedup.insert(pts.begin(), pts.end());
    }
    auto Z = enumerate_Z(inst, opt.limit_n);
    r.check(dedup.size() == total &&
                dedup == std::set<YZPoint>(Z.begin(), Z.end()),
            inst.describe() + ": cells do not partition Z");
  }
  for (auto& [key, cell] : cells) {
    std::string tag = inst.describe() + " block(" + std::to_string(key.i) +
                      "," + std::to_string(key.tau) + ")";
    ExtendedBounds eb = extended_bounds(inst, key.i, key.tau);
    bool monotone = true;
    for (const auto* v : {&eb.alpha, &eb.beta, &eb.gamma, &eb.delta})
      if (!check_weak_monotonicity_extended(*v)) monotone = false;
    r.check(monotone, tag + ": extended bounds not weakly monotone");

    BlockPolytope block = build_block(inst, key.i, key.tau);
    r.check(block_lambda1_integral_points(block) == cell,
            tag + ": 0/1 points of the unit slice differ from the cell");

    HPolytope slice = block.poly;
    slice.add_row({"slice1", {{"lambda", 1}}, Sense::EQ, 1});
    LpEngine engine(slice);
    auto objectives =
        seeded_objectives(yz_vars(inst.n), opt.hull_objectives, opt.seed);
    bool all = true;
    for (const auto& obj : objectives) {
      auto res = engine.optimize(obj, true);
      if (cell.empty()) {
        if (res.status != LpStatus::Infeasible) all = false;
      } else if (res.status != LpStatus::Optimal ||
                 res.value != max_over(cell, obj)) {
        all = false;
      }
    }
    r.check(all, tag + ": slice optima differ from the cell maxima");
  }
  return r;
}

PartialReport suite_phat_hull(const Instance& inst, const CheckOptions& opt) {
  PartialReport r;
  HPolytope phat = build_Phat(inst);
  auto Z = enumerate_Z(inst, opt.limit_n);
  LpEngine engine(phat);
  auto objectives = seeded_objectives(yz_vars(inst.n), opt.sweep_objectives,
                                      opt.seed);
  for (size_t k = 0; k < objectives.size(); ++k) {
    auto res = engine.optimize(objectives[k], true);
    std::string tag = inst.describe() + ": objective #" + std::to_string(k);
    if (Z.empty()) {
      r.check(res.status == LpStatus::Infeasible, tag + " should be infeasible");
      continue;
    }
    r.check(res.status == LpStatus::Optimal &&
                res.value == max_over(Z, objectives[k]),
            tag + ": optimum differs from the schedule maximum");
  }
  for (const YZPoint& p : Z)
    r.check(lp_feasible(phat.substitute(fix_yz(p))),
            inst.describe() + ": schedule " + p.bitstring() + " infeasible");
  return r;
}

PartialReport suite_cuts(const Instance& inst, const CheckOptions& opt) {
  PartialReport r;
  std::vector<LinIneq> cuts;
  auto [ub, lb] = z_count_cuts(inst);
  auto [lby, uby] = y_count_cuts(inst);
  cuts.insert(cuts.end(), {ub, lb, lby, uby});
  if (inst.constant_bounds() && inst.alpha[0] == 1 && inst.beta[0] == 2 &&
      inst.gamma[0] == 1 && inst.delta[0] == 2)
    for (int t = 0; t < inst.n; ++t)
      for (const LinIneq& cut : family_1212_cuts(inst, t)) cuts.push_back(cut);
  for (const LinIneq& cut : cuts) {
    CutCertificate cert = certify_facet(inst, cut, opt.limit_n);
    nlohmann::json line{{"cut", cut.normalized().to_string()},
                        {"valid", cert.valid},
                        {"tight", cert.tight_points.size()},
                        {"dim_PI", cert.dim_PI},
                        {"is_facet", cert.is_facet}};
    r.lines.push_back(line.dump());
    r.check(cert.valid, inst.describe() + ": cut " + cut.to_string() +
                            " violated by a schedule");
  }
  return r;
}

PartialReport suite_full_desc(const Instance& inst, const CheckOptions& opt) {
  if (!inst.constant_bounds() || inst.alpha[0] != 1 || inst.beta[0] != 2 ||
      inst.gamma[0] != 1 || inst.delta[0] != 2 || inst.n < 4 || inst.n > 6)
    throw std::invalid_argument(
        "suite full-desc covers const (1,2,1,2) with n in {4,5,6}; got " +
        inst.describe());
  PartialReport r;
  std::vector<LinIneq> system;
  for (const LinIneq& row : build_P(inst).poly.inequalities)
    system.push_back(row);
  auto [ub, lb] = z_count_cuts(inst);
  if (inst.n <= 5) {
    system.push_back(ub);
    system.push_back(lb);
  } else {
    system.push_back(lb);
    for (int t = 0; t < inst.n; ++t)
      for (const LinIneq& cut : family_1212_cuts(inst, t)) system.push_back(cut);
  }
  r.check(full_description_check(inst, system, {.max_dim = opt.dd_max_dim}),
          inst.describe() + ": system is not a complete description");
  return r;
}

}  // namespace

std::vector<std::map<std::string, Rat>> seeded_objectives(
    const std::vector<std::string>& vars, int count, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::map<std::string, Rat>> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    std::map<std::string, Rat> obj;
    for (const std::string& v : vars)
      obj[v] = Rat(static_cast<int>(rng() % 19) - 9);
    out.push_back(std::move(obj));
  }
  return out;
}

std::vector<Instance> seeded_monotone_instances(int n, int count,
                                                unsigned long long seed) {
  std::mt19937_64 rng(seed);
  auto gen_pair = [&](std::vector<int>& lo, std::vector<int>& hi) {
    const int cap = std::min(3, n - 1);
    for (;;) {
      lo.clear();
      hi.clear();
      for (int t = 0; t < n; ++t) {
        int l = 1 + static_cast<int>(rng() % cap);
        int h = l + static_cast<int>(rng() % (cap - l + 1));
        lo.push_back(l);
        hi.push_back(h);
      }
      if (check_weak_monotonicity(lo) && check_weak_monotonicity(hi)) return;
    }
  };
  std::vector<Instance> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<int> a, b, g, d;
    gen_pair(a, b);
    gen_pair(g, d);
    out.emplace_back(n, a, b, g, d);
  }
  return out;
}

nlohmann::json CheckReport::to_json() const {
  return {{"suite", suite},         {"instance", instance_desc},
          {"passed", passed},       {"failed", failed},
          {"lines", lines},         {"witnesses", witnesses}};
}

CheckReport run_suite(const std::string& suite,
                      const std::vector<Instance>& instances,
                      const CheckOptions& opt) {
  static const std::map<std::string, SuiteFn> kSuites{
      {"prop1", &suite_prop1},
      {"prop2", &suite_prop2},
      {"prop6", &suite_prop6},
      {"qprime-hull", &suite_qprime_hull},
      {"lemma-blocks", &suite_lemma_blocks},
      {"phat-hull", &suite_phat_hull},
      {"cuts", &suite_cuts},
      {"full-desc", &suite_full_desc}};
  auto it = kSuites.find(suite);
  if (it == kSuites.end()) {
    std::string known;
    for (const auto& [name, fn] : kSuites) known += name + " ";
    throw std::invalid_argument("unknown suite \"" + suite + "\"; known: " +
                                known);
  }
  auto t0 = std::chrono::steady_clock::now();
  CheckReport report;
  report.suite = suite;
  for (size_t i = 0; i < instances.size(); ++i)
    report.instance_desc += (i ? "; " : "") + instances[i].describe();

  // instances are independent; fan out and aggregate in input order
  std::vector<std::future<PartialReport>> futs;
  futs.reserve(instances.size());
  for (const Instance& inst : instances)
    futs.push_back(std::async(std::launch::async, it->second, inst, opt));
  for (auto& f : futs) {
    PartialReport part = f.get();
    report.passed += part.passed;
    report.failed += part.failed;
    report.lines.insert(report.lines.end(), part.lines.begin(),
                        part.lines.end());
    report.witnesses.insert(report.witnesses.end(), part.witnesses.begin(),
                            part.witnesses.end());
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

bool q_projects_binary_pair(const CycleNetwork& net, std::uint32_t ybits,
                            std::uint32_t zbits) {
  const int n = net.inst.n;
  const std::uint32_t full = (1u << n) - 1;
  ybits &= full;
  zbits &= full;

  std::vector<int> allowed;
  std::vector<std::uint32_t> span(net.arcs.size(), 0);
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    const NetArc& a = net.arcs[i];
    std::uint32_t mask = 0;
    for (int t : a.span(n).members()) mask |= 1u << t;
    span[i] = mask;
    if (a.state == 0) {
      if (((zbits >> a.t) & 1u) == 0) continue;  // no start-up at a.t
      if ((mask & ~ybits) != 0) continue;        // run leaves the on-set
    } else {
      if ((mask & ybits) != 0) continue;  // off-run touching an on-period
    }
    allowed.push_back(static_cast<int>(i));
  }

  // rows that lost all support must have zero right-hand side
  std::uint32_t on_cover = 0;
  std::uint32_t zsupport = 0;
  bool covers0 = false;
  for (int id : allowed) {
    const NetArc& a = net.arcs[id];
    if ((span[id] >> 0) & 1u) covers0 = true;
    if (a.state == 0) {
      on_cover |= span[id];
      zsupport |= 1u << a.t;
    }
  }
  if ((ybits & ~on_cover) != 0) return false;
  if ((zbits & ~zsupport) != 0) return false;
  if (!covers0) return false;

  HPolytope lp;
  for (int id : allowed) lp.add_variable(net.arcs[id].var_name());
  for (int id : allowed) {
    LinIneq nn;
    nn.name = "nn_" + net.arcs[id].var_name();
    nn.coeffs[net.arcs[id].var_name()] = -1;
    nn.rhs = 0;
    lp.add_row(nn);
  }
  LinIneq inj;
  inj.name = "inj";
  inj.sense = Sense::EQ;
  inj.rhs = 1;
  for (int id : allowed)
    if ((span[id] >> 0) & 1u) inj.coeffs[net.arcs[id].var_name()] = 1;
  lp.add_row(inj);
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < n; ++t) {
      LinIneq cons;
      cons.name = "flow_" + std::to_string(s) + "_" + std::to_string(t);
      cons.sense = Sense::EQ;
      cons.rhs = 0;
      for (int id : allowed) {
        const NetArc& a = net.arcs[id];
        if (a.state == s && a.t == t) cons.coeffs[a.var_name()] -= 1;
        if (a.to_state() == s && a.to_t(n) == t) cons.coeffs[a.var_name()] += 1;
      }
      if (!cons.coeffs.empty()) lp.add_row(cons);
    }
  for (int t = 0; t < n; ++t) {
    LinIneq ydef;
    ydef.name = "ydef_" + std::to_string(t);
    ydef.sense = Sense::EQ;
    ydef.rhs = Rat((ybits >> t) & 1u);
    for (int id : allowed)
      if (net.arcs[id].state == 0 && ((span[id] >> t) & 1u))
        ydef.coeffs[net.arcs[id].var_name()] = 1;
    if (!ydef.coeffs.empty() || ydef.rhs != 0) lp.add_row(ydef);
  }
  for (int t = 0; t < n; ++t) {
    LinIneq zdef;
    zdef.name = "zdef_" + std::to_string(t);
    zdef.sense = Sense::EQ;
    zdef.rhs = Rat((zbits >> t) & 1u);
    for (int id : allowed)
      if (net.arcs[id].state == 0 && net.arcs[id].t == t)
        zdef.coeffs[net.arcs[id].var_name()] = 1;
    if (!zdef.coeffs.empty() || zdef.rhs != 0) lp.add_row(zdef);
  }
  return lp_feasible(lp);
}

std::string to_string(ConjectureVerdict v) {
  switch (v) {
    case ConjectureVerdict::Equal: return "equal";
    case ConjectureVerdict::PStrictlyLarger: return "P-strictly-larger";
    case ConjectureVerdict::ProjStrictlyLarger: return "proj-strictly-larger";
    case ConjectureVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

ConjectureResult run_conjecture(const Instance& inst, const CheckOptions& opt) {
  ConjectureResult out;
  PFormulation pf = build_P(inst);
  HPolytope Q = build_Q(inst);
  const int n = inst.n;

  bool proj_in_P = true;
  std::string proj_witness;
  {
    LpEngine engine(Q);
    if (engine.feasible()) {
      for (const LinIneq& row : pf.poly.inequalities) {
        auto res = engine.optimize(row.coeffs, true);
        if (res.status == LpStatus::Optimal && res.value > row.rhs) {
          proj_in_P = false;
          proj_witness = "flow shadow violates row " + row.name + " at " +
                         solution_yz(res.point, n).bitstring();
          break;
        }
      }
    }
  }

  bool P_in_proj = true;
  std::string vertex_witness;
  std::vector<std::map<std::string, Rat>> vertices;
  try {
    vertices = enumerate_vertices(pf.poly, {.max_dim = opt.dd_max_dim});
  } catch (const resource_limit_error& e) {
    out.verdict = ConjectureVerdict::Inconclusive;
    out.witness = e.what();
    return out;
  }
  for (const auto& vertex : vertices) {
    YZPoint p = solution_yz(vertex, n);
    if (oracle_member(inst, p)) continue;  // schedules lift by construction
    if (!lp_feasible(Q.substitute(fix_yz(p)))) {
      P_in_proj = false;
      std::ostringstream w;
      w << "relaxation vertex y=(";
      for (int t = 0; t < n; ++t) w << (t ? "," : "") << rat_str(p.y[t]);
      w << ") z=(";
      for (int t = 0; t < n; ++t) w << (t ? "," : "") << rat_str(p.z[t]);
      w << ") is not a flow shadow";
      vertex_witness = w.str();
      break;
    }
  }

  if (proj_in_P && P_in_proj) {
    out.verdict = ConjectureVerdict::Equal;
  } else if (proj_in_P) {
    out.verdict = ConjectureVerdict::PStrictlyLarger;
    out.witness = vertex_witness;
  } else if (P_in_proj) {
    out.verdict = ConjectureVerdict::ProjStrictlyLarger;
    out.witness = proj_witness;
  } else {
    out.verdict = ConjectureVerdict::Inconclusive;
    out.witness = proj_witness + " / " + vertex_witness;
  }
  return out;
}

}  // namespace runpoly
