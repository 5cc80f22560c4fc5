#include "runpoly/yzform.hpp"

#include <algorithm>

namespace runpoly {

namespace {

std::string yv(int t) { return "y_" + std::to_string(t); }
std::string zv(int t) { return "z_" + std::to_string(t); }

void require_monotone(const Instance& inst) {
  const char* names[4] = {"alpha", "beta", "gamma", "delta"};
  const std::vector<int>* vecs[4] = {&inst.alpha, &inst.beta, &inst.gamma,
                                     &inst.delta};
  for (int i = 0; i < 4; ++i)
    for (int t = 0; t < inst.n; ++t)
      if ((*vecs[i])[mod_index(t + 1, inst.n)] < (*vecs[i])[t] - 1)
        throw std::invalid_argument(
            std::string("build_P: ") + names[i] +
            " violates weak monotonicity at t=" + std::to_string(t));
}

PFormulation shell(const Instance& inst, const char* label) {
  PFormulation pf;
  pf.poly.name = std::string(label) + " " + inst.describe();
  for (int t = 0; t < inst.n; ++t) pf.poly.add_variable(yv(t));
  for (int t = 0; t < inst.n; ++t) pf.poly.add_variable(zv(t));
  return pf;
}

void add_switch_and_bounds(PFormulation& pf, const Instance& inst) {
  const int n = inst.n;
  for (int t = 0; t < n; ++t) {
    LinIneq sw;
    sw.name = "swon_" + std::to_string(t);
    sw.coeffs[yv(t)] += 1;
    sw.coeffs[yv(mod_index(t - 1, n))] -= 1;
    sw.coeffs[zv(t)] -= 1;
    sw.rhs = 0;
    pf.poly.add_row(sw);
  }
  for (int t = 0; t < n; ++t) {
    pf.poly.add_row({"ylb_" + std::to_string(t), {{yv(t), -1}}, Sense::LE, 0});
    pf.poly.add_row({"yub_" + std::to_string(t), {{yv(t), 1}}, Sense::LE, 1});
    pf.poly.add_row({"zlb_" + std::to_string(t), {{zv(t), -1}}, Sense::LE, 0});
    pf.poly.add_row({"zub_" + std::to_string(t), {{zv(t), 1}}, Sense::LE, 1});
  }
}

}  // namespace

PFormulation build_P(const Instance& inst) {
  inst.validate();
  require_monotone(inst);
  const int n = inst.n;
  PFormulation pf = shell(inst, "P");
  for (int t = 0; t < n; ++t) {
    pf.s_alpha.push_back(s_index(inst.alpha, t));
    pf.s_beta.push_back(s_index(inst.beta, t));
    pf.s_gamma.push_back(s_index(inst.gamma, t));
    pf.s_delta.push_back(s_index(inst.delta, t));
  }
  add_switch_and_bounds(pf, inst);
  for (int t = 0; t < n; ++t) {
    LinIneq on_lb;
    on_lb.name = "onlb_" + std::to_string(t);
    for (int k : cyclic_interval_members(pf.s_alpha[t], t, n))
      on_lb.coeffs[zv(k)] += 1;
    on_lb.coeffs[yv(t)] -= 1;
    on_lb.rhs = 0;
    pf.poly.add_row(on_lb);

    LinIneq on_ub;
    on_ub.name = "onub_" + std::to_string(t);
    on_ub.coeffs[yv(t)] += 1;
    for (int k : cyclic_interval_members(pf.s_beta[t], t, n))
      on_ub.coeffs[zv(k)] -= 1;
    on_ub.rhs = 0;
    pf.poly.add_row(on_ub);

    LinIneq off_lb;
    off_lb.name = "offlb_" + std::to_string(t);
    for (int k : cyclic_interval_members(pf.s_gamma[t], t, n))
      off_lb.coeffs[zv(k)] += 1;
    off_lb.coeffs[yv(mod_index(pf.s_gamma[t] - 1, n))] += 1;
    off_lb.rhs = 1;
    pf.poly.add_row(off_lb);

    LinIneq off_ub;
    off_ub.name = "offub_" + std::to_string(t);
    for (int k : cyclic_interval_members(pf.s_delta[t], t, n))
      off_ub.coeffs[zv(k)] -= 1;
    off_ub.coeffs[yv(mod_index(pf.s_delta[t] - 1, n))] -= 1;
    off_ub.rhs = -1;
    pf.poly.add_row(off_ub);
  }
  return pf;
}

PFormulation build_P_const(const Instance& inst) {
  inst.validate();
  if (!inst.constant_bounds())
    throw std::invalid_argument("build_P_const: bounds must be constant");
  const int n = inst.n;
  const int a = inst.alpha[0], b = inst.beta[0];
  const int g = inst.gamma[0], d = inst.delta[0];
  PFormulation pf = shell(inst, "P");
  for (int t = 0; t < n; ++t) {
    pf.s_alpha.push_back(mod_index(t - a + 1, n));
    pf.s_beta.push_back(mod_index(t - b + 1, n));
    pf.s_gamma.push_back(mod_index(t - g + 1, n));
    pf.s_delta.push_back(mod_index(t - d + 1, n));
  }
  add_switch_and_bounds(pf, inst);
  for (int t = 0; t < n; ++t) {
    LinIneq on_lb;
    on_lb.name = "onlb_a_" + std::to_string(t);
    on_lb.coeffs[yv(t)] -= 1;
    for (int i = 0; i <= a - 1; ++i) on_lb.coeffs[zv(mod_index(t - i, n))] += 1;
    on_lb.rhs = 0;
    pf.poly.add_row(on_lb);

    LinIneq on_ub;
    on_ub.name = "onub_a_" + std::to_string(t);
    on_ub.coeffs[yv(t)] += 1;
    for (int i = 0; i <= b - 1; ++i) on_ub.coeffs[zv(mod_index(t - i, n))] -= 1;
    on_ub.rhs = 0;
    pf.poly.add_row(on_ub);

    LinIneq off_lb;
    off_lb.name = "offlb_a_" + std::to_string(t);
    off_lb.coeffs[yv(t)] += 1;
    for (int i = 1; i <= g; ++i) off_lb.coeffs[zv(mod_index(t + i, n))] += 1;
    off_lb.rhs = 1;
    pf.poly.add_row(off_lb);

    LinIneq off_ub;
    off_ub.name = "offub_a_" + std::to_string(t);
    off_ub.coeffs[yv(t)] -= 1;
    for (int i = 1; i <= d; ++i) off_ub.coeffs[zv(mod_index(t + i, n))] -= 1;
    off_ub.rhs = -1;
    pf.poly.add_row(off_ub);
  }
  return pf;
}

std::vector<YZPoint> integral_points(const PFormulation& pf, int limit_n) {
  const int n = pf.n();
  if (n > limit_n)
    throw resource_limit_error("integral_points: n=" + std::to_string(n) +
                               " exceeds limit " + std::to_string(limit_n));
  auto rows = compile_int_rows(pf.poly);
  std::vector<YZPoint> out;
  std::vector<int> dense(2 * n);
  for (std::uint32_t y = 0; y < (1u << n); ++y) {
    for (int t = 0; t < n; ++t) dense[t] = (y >> t) & 1;
    for (std::uint32_t z = 0; z < (1u << n); ++z) {
      for (int t = 0; t < n; ++t) dense[n + t] = (z >> t) & 1;
      if (int_rows_satisfied(rows, dense)) out.push_back(yz_from_bits(y, z, n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace runpoly
