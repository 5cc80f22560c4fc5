#include "runpoly/disjunctive.hpp"

#include <algorithm>

#include "runpoly/expanded.hpp"

namespace runpoly {

namespace {

std::string tname(int t) { return t < 0 ? "m1" : std::to_string(t); }

bool in_set(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

std::map<BlockKey, std::vector<YZPoint>> partition_Z(const Instance& inst,
                                                     int limit_n) {
  auto [T0, T1] = switch_sets(inst);
  std::map<BlockKey, std::vector<YZPoint>> cells;
  for (int tau : T0) cells[{0, tau}];
  for (int tau : T1) cells[{1, tau}];
  const int n = inst.n;
  for (const YZPoint& p : enumerate_Z(inst, limit_n)) {
    // locate the start of the run containing period n-1
    int i = (p.y[n - 1] == 1) ? 0 : 1;
    int tau = n - 1;
    while (tau > 0 && p.y[tau - 1] == p.y[n - 1]) --tau;
    // all-equal y is infeasible, so tau >= 1 and y_{tau-1} differs
    cells.at({i, tau}).push_back(p);
  }
  return cells;
}

BoundaryParams boundary_params(const Instance& inst, int i, int tau) {
  auto [T0, T1] = switch_sets(inst);
  if (i != 0 && i != 1)
    throw std::invalid_argument("boundary_params: branch must be 0 or 1");
  if (!in_set(i == 0 ? T0 : T1, tau))
    throw std::invalid_argument("boundary_params: tau=" + std::to_string(tau) +
                                " is not a wrap candidate of branch " +
                                std::to_string(i));
  const int n = inst.n;
  BoundaryParams bp;
  bp.i = i;
  bp.tau = tau;
  if (i == 0) {
    bp.alpha_m1 = std::max(1, tau + inst.alpha[tau] - (n - 1));
    bp.beta_m1 = tau + inst.beta[tau] - (n - 1);
    bp.gamma_m1 = inst.gamma[n - 1];
    bp.delta_m1 = inst.delta[n - 1];
  } else {
    bp.alpha_m1 = inst.alpha[n - 1];
    bp.beta_m1 = inst.beta[n - 1];
    bp.gamma_m1 = std::max(1, tau + inst.gamma[tau] - (n - 1));
    bp.delta_m1 = tau + inst.delta[tau] - (n - 1);
  }
  return bp;
}

ExtendedBounds extended_bounds(const Instance& inst, int i, int tau) {
  BoundaryParams bp = boundary_params(inst, i, tau);
  ExtendedBounds eb;
  auto extend = [&](const std::vector<int>& base, int m1) {
    std::vector<int> v;
    v.push_back(m1);
    v.insert(v.end(), base.begin(), base.end());
    return v;
  };
  eb.alpha = extend(inst.alpha, bp.alpha_m1);
  eb.beta = extend(inst.beta, bp.beta_m1);
  eb.gamma = extend(inst.gamma, bp.gamma_m1);
  eb.delta = extend(inst.delta, bp.delta_m1);
  return eb;
}

bool check_weak_monotonicity_extended(const std::vector<int>& eps_ext) {
  for (size_t k = 0; k + 1 < eps_ext.size(); ++k)
    if (eps_ext[k + 1] < eps_ext[k] - 1) return false;
  return true;
}

int s_prime(const std::vector<int>& eps_ext, int t) {
  if (!check_weak_monotonicity_extended(eps_ext))
    throw std::invalid_argument("s_prime: vector is not weakly monotone");
  if (t < 0 || t + 1 >= static_cast<int>(eps_ext.size()))
    throw std::invalid_argument("s_prime: period out of range");
  // k + eps_k is nondecreasing, so the covering set is a suffix of [-1, t]
  int s = t;
  for (int k = t - 1; k >= -1; --k) {
    if (k + eps_ext[k + 1] >= t + 1)
      s = k;
    else
      break;
  }
  return s;
}

BlockPolytope build_block(const Instance& inst, int i, int tau,
                          const std::string& suffix) {
  inst.validate();
  ExtendedBounds eb = extended_bounds(inst, i, tau);
  for (const auto* v : {&eb.alpha, &eb.beta, &eb.gamma, &eb.delta})
    if (!check_weak_monotonicity_extended(*v))
      throw std::invalid_argument(
          "build_block: extended bounds are not weakly monotone");
  const int n = inst.n;
  BlockPolytope block;
  block.i = i;
  block.tau = tau;
  HPolytope& poly = block.poly;
  poly.name = "block(" + std::to_string(i) + "," + std::to_string(tau) + ") " +
              inst.describe();
  auto yv = [&](int t) { return "y_" + tname(t) + suffix; };
  auto zv = [&](int t) { return "z_" + tname(t) + suffix; };
  const std::string lam = "lambda" + suffix;
  for (int t = -1; t < n; ++t) poly.add_variable(yv(t));
  for (int t = -1; t < n; ++t) poly.add_variable(zv(t));
  poly.add_variable(lam);

  {
    LinIneq r;
    r.name = "zy_m1";
    r.sense = Sense::EQ;
    r.rhs = 0;
    r.coeffs[zv(-1)] = 1;
    r.coeffs[yv(-1)] = -1;
    poly.add_row(r);
  }
  for (int t = 0; t < n; ++t) {
    LinIneq r;
    r.name = "swon_" + std::to_string(t);
    r.coeffs[yv(t)] += 1;
    r.coeffs[yv(t - 1)] -= 1;
    r.coeffs[zv(t)] -= 1;
    r.rhs = 0;
    poly.add_row(r);
  }
  for (int t = 0; t < n; ++t) {
    LinIneq r;
    r.name = "onlb_" + std::to_string(t);
    for (int k = s_prime(eb.alpha, t); k <= t; ++k) r.coeffs[zv(k)] += 1;
    r.coeffs[yv(t)] -= 1;
    r.rhs = 0;
    poly.add_row(r);
  }
  for (int t = 0; t < n; ++t) {
    LinIneq r;
    r.name = "onub_" + std::to_string(t);
    r.coeffs[yv(t)] += 1;
    for (int k = s_prime(eb.beta, t); k <= t; ++k) r.coeffs[zv(k)] -= 1;
    r.rhs = 0;
    poly.add_row(r);
  }
  for (int t = 0; t < n; ++t) {
    int s = s_prime(eb.gamma, t);
    if (s < 0) continue;
    LinIneq r;
    r.name = "offlb_" + std::to_string(t);
    for (int k = s; k <= t; ++k) r.coeffs[zv(k)] += 1;
    r.coeffs[lam] -= 1;
    r.coeffs[yv(s - 1)] += 1;
    r.rhs = 0;
    poly.add_row(r);
  }
  for (int t = 0; t < n; ++t) {
    int s = s_prime(eb.delta, t);
    if (s < 0) continue;
    LinIneq r;
    r.name = "offub_" + std::to_string(t);
    r.coeffs[lam] += 1;
    r.coeffs[yv(s - 1)] -= 1;
    for (int k = s; k <= t; ++k) r.coeffs[zv(k)] -= 1;
    r.rhs = 0;
    poly.add_row(r);
  }
  for (int t = 0; t < n; ++t) {
    poly.add_row({"ylb_" + std::to_string(t), {{yv(t), -1}}, Sense::LE, 0});
    poly.add_row({"yub_" + std::to_string(t), {{yv(t), 1}, {lam, -1}},
                  Sense::LE, 0});
    poly.add_row({"zlb_" + std::to_string(t), {{zv(t), -1}}, Sense::LE, 0});
    poly.add_row({"zub_" + std::to_string(t), {{zv(t), 1}, {lam, -1}},
                  Sense::LE, 0});
  }
  poly.add_row({"lub", {{lam, 1}}, Sense::LE, 1});

  // branch fixings: the wrap run pins the tail of the horizon and period -1
  auto fix = [&](const std::string& name, const std::string& var, bool to_lam) {
    LinIneq r;
    r.name = name;
    r.sense = Sense::EQ;
    r.rhs = 0;
    r.coeffs[var] = 1;
    if (to_lam) r.coeffs[lam] = -1;
    poly.add_row(r);
  };
  if (i == 0) {
    fix("fx_prev", yv(tau - 1), false);
    for (int t = tau; t < n; ++t) fix("fx_" + std::to_string(t), yv(t), true);
    fix("fx_m1", yv(-1), true);
  } else {
    fix("fx_prev", yv(tau - 1), true);
    for (int t = tau; t < n; ++t) fix("fx_" + std::to_string(t), yv(t), false);
    fix("fx_m1", yv(-1), false);
  }
  return block;
}

std::vector<YZPoint> block_lambda1_integral_points(const BlockPolytope& block) {
  const int n = (static_cast<int>(block.poly.variables.size()) - 1) / 2 - 1;
  HPolytope slice = block.poly;
  std::string lam;
  for (const auto& v : slice.variables)
    if (v.rfind("lambda", 0) == 0) lam = v;
  slice.add_row({"slice", {{lam, 1}}, Sense::EQ, 1});
  auto rows = compile_int_rows(slice);
  // dense order matches variable order: y_m1, y_0..y_{n-1}, z_m1, z_0.., lam
  std::vector<int> dense(2 * (n + 1) + 1);
  dense[2 * (n + 1)] = 1;
  std::vector<YZPoint> out;
  for (std::uint32_t y = 0; y < (1u << (n + 1)); ++y) {
    for (int k = 0; k < n + 1; ++k) dense[k] = (y >> k) & 1;
    for (std::uint32_t z = 0; z < (1u << (n + 1)); ++z) {
      for (int k = 0; k < n + 1; ++k) dense[n + 1 + k] = (z >> k) & 1;
      if (!int_rows_satisfied(rows, dense)) continue;
      YZPoint p;
      for (int t = 0; t < n; ++t) {
        p.y.emplace_back(dense[1 + t]);
        p.z.emplace_back(dense[n + 2 + t]);
      }
      out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

HPolytope build_Phat(const Instance& inst) {
  inst.validate();
  auto [T0, T1] = switch_sets(inst);
  const int n = inst.n;
  HPolytope poly;
  poly.name = "Phat " + inst.describe();
  for (int t = 0; t < n; ++t) poly.add_variable("y_" + std::to_string(t));
  for (int t = 0; t < n; ++t) poly.add_variable("z_" + std::to_string(t));

  std::vector<BlockKey> keys;
  for (int tau : T0) keys.push_back({0, tau});
  for (int tau : T1) keys.push_back({1, tau});

  LinIneq lamsum;
  lamsum.name = "lamsum";
  lamsum.sense = Sense::EQ;
  lamsum.rhs = 1;

  std::vector<LinIneq> ylink(n), zlink(n);
  for (int t = 0; t < n; ++t) {
    ylink[t].name = "ylink_" + std::to_string(t);
    ylink[t].sense = Sense::EQ;
    ylink[t].rhs = 0;
    ylink[t].coeffs["y_" + std::to_string(t)] = -1;
    zlink[t].name = "zlink_" + std::to_string(t);
    zlink[t].sense = Sense::EQ;
    zlink[t].rhs = 0;
    zlink[t].coeffs["z_" + std::to_string(t)] = -1;
  }

  std::vector<LinIneq> block_rows;
  for (const BlockKey& key : keys) {
    std::string suffix =
        "__" + std::to_string(key.i) + "_" + std::to_string(key.tau);
    BlockPolytope block = build_block(inst, key.i, key.tau, suffix);
    for (const std::string& v : block.poly.variables) poly.add_variable(v);
    for (LinIneq r : block.poly.equalities) {
      r.name += suffix;
      block_rows.push_back(std::move(r));
    }
    for (LinIneq r : block.poly.inequalities) {
      r.name += suffix;
      block_rows.push_back(std::move(r));
    }
    lamsum.coeffs["lambda" + suffix] = 1;
    for (int t = 0; t < n; ++t) {
      ylink[t].coeffs["y_" + std::to_string(t) + suffix] = 1;
      zlink[t].coeffs["z_" + std::to_string(t) + suffix] = 1;
    }
  }
  poly.add_row(lamsum);
  for (int t = 0; t < n; ++t) poly.add_row(ylink[t]);
  for (int t = 0; t < n; ++t) poly.add_row(zlink[t]);
  for (LinIneq& r : block_rows) poly.add_row(std::move(r));
  return poly;
}

}  // namespace runpoly
