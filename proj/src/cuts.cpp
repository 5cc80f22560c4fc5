#include "runpoly/cuts.hpp"

#include <algorithm>

namespace runpoly {

namespace {

std::string yv(int t) { return "y_" + std::to_string(t); }
std::string zv(int t) { return "z_" + std::to_string(t); }

void require_constant(const Instance& inst, const char* who) {
  if (!inst.constant_bounds())
    throw std::invalid_argument(std::string(who) + ": bounds must be constant");
}

std::map<std::string, Rat> as_point(const YZPoint& p) {
  std::map<std::string, Rat> pt;
  for (size_t t = 0; t < p.y.size(); ++t) {
    pt[yv(static_cast<int>(t))] = p.y[t];
    pt[zv(static_cast<int>(t))] = p.z[t];
  }
  return pt;
}

}  // namespace

std::pair<LinIneq, LinIneq> z_count_cuts(const Instance& inst) {
  require_constant(inst, "z_count_cuts");
  const int n = inst.n;
  LinIneq ub, lb;
  ub.name = "ub_z";
  ub.sense = Sense::LE;
  ub.rhs = Rat(n / (inst.alpha[0] + inst.gamma[0]));
  lb.name = "lb_z";
  lb.sense = Sense::GE;
  int bd = inst.beta[0] + inst.delta[0];
  lb.rhs = Rat((n + bd - 1) / bd);
  for (int t = 0; t < n; ++t) {
    ub.coeffs[zv(t)] = 1;
    lb.coeffs[zv(t)] = 1;
  }
  return {ub, lb};
}

std::pair<LinIneq, LinIneq> y_count_cuts(const Instance& inst) {
  require_constant(inst, "y_count_cuts");
  const int n = inst.n;
  const int a = inst.alpha[0], b = inst.beta[0];
  const int g = inst.gamma[0], d = inst.delta[0];
  int q1 = n / (a + d);
  int r1 = n - q1 * (a + d);
  int q2 = (n + b + g - 1) / (b + g);
  int r2 = q2 * (b + g) - n;
  LinIneq lb, ub;
  lb.name = "lb_y";
  lb.sense = Sense::GE;
  lb.rhs = Rat(q1 * a + std::min(r1, a));
  ub.name = "ub_y";
  ub.sense = Sense::LE;
  ub.rhs = Rat(q2 * b - std::min(r2, b));
  for (int t = 0; t < n; ++t) {
    lb.coeffs[yv(t)] = 1;
    ub.coeffs[yv(t)] = 1;
  }
  return {lb, ub};
}

std::array<LinIneq, 3> family_1212_cuts(const Instance& inst, int t) {
  require_constant(inst, "family_1212_cuts");
  if (inst.alpha[0] != 1 || inst.beta[0] != 2 || inst.gamma[0] != 1 ||
      inst.delta[0] != 2)
    throw std::invalid_argument("family_1212_cuts: bounds must be (1,2,1,2)");
  const int n = inst.n;
  auto rhs_floor = [](int num) { return Rat(rat_floor(Rat(num) / 2)); };

  LinIneq c1;
  c1.name = "vi1_" + std::to_string(t);
  c1.coeffs[yv(t)] += 1;
  c1.coeffs[yv(mod_index(t + 1, n))] += 1;
  c1.coeffs[zv(t)] -= 1;
  for (int i = 2; i <= n - 2; ++i) c1.coeffs[zv(mod_index(t + i, n))] += 1;
  c1.rhs = rhs_floor(n - 1);

  LinIneq c2;
  c2.name = "vi2_" + std::to_string(t);
  c2.coeffs[yv(t)] += 1;
  c2.coeffs[yv(mod_index(t - 2, n))] -= 1;
  c2.coeffs[zv(t)] -= 1;
  c2.coeffs[zv(mod_index(t - 1, n))] -= 1;
  for (int i = 1; i <= n - 2; ++i) c2.coeffs[zv(mod_index(t + i, n))] += 1;
  c2.rhs = rhs_floor(n - 3);

  LinIneq c3;
  c3.name = "vi3_" + std::to_string(t);
  c3.coeffs[yv(t)] -= 1;
  c3.coeffs[yv(mod_index(t + 1, n))] -= 1;
  c3.coeffs[zv(mod_index(t + 2, n))] -= 1;
  for (int i = 0; i <= n - 4; ++i) c3.coeffs[zv(mod_index(t - i, n))] += 1;
  c3.rhs = rhs_floor(n - 5);

  return {c1, c2, c3};
}

bool validate_cut(const Instance& inst, const LinIneq& cut, int limit_n) {
  for (const YZPoint& p : enumerate_Z(inst, limit_n))
    if (!cut.satisfied(as_point(p))) return false;
  return true;
}

CutCertificate certify_facet(const Instance& inst, const LinIneq& cut,
                             int limit_n) {
  auto Z = enumerate_Z(inst, limit_n);
  if (Z.empty())
    throw std::domain_error("certify_facet: Z is empty, dimension undefined");
  CutCertificate cert;
  cert.cut = cut;
  cert.valid = true;
  std::vector<std::vector<Rat>> all;
  for (const YZPoint& p : Z) {
    auto pt = as_point(p);
    if (!cut.satisfied(pt)) cert.valid = false;
    if (cut.lhs_value(pt) == cut.rhs) cert.tight_points.push_back(p);
    all.push_back(p.as_vector());
  }
  cert.dim_PI = affine_dim(all);
  if (cert.valid && !cert.tight_points.empty()) {
    std::vector<std::vector<Rat>> tight;
    for (const YZPoint& p : cert.tight_points) tight.push_back(p.as_vector());
    cert.is_facet = (affine_dim(tight) == cert.dim_PI - 1);
  }
  return cert;
}

bool full_description_check(const Instance& inst,
                            const std::vector<LinIneq>& system,
                            const VertexEnumOptions& opt) {
  const int n = inst.n;
  HPolytope poly;
  poly.name = "system " + inst.describe();
  for (int t = 0; t < n; ++t) poly.add_variable(yv(t));
  for (int t = 0; t < n; ++t) poly.add_variable(zv(t));
  for (const LinIneq& row : system) poly.add_row(row);

  auto Z = enumerate_Z(inst);
  if (Z.empty()) return false;
  for (const YZPoint& p : Z)
    if (!poly.contains(as_point(p))) return false;

  // compare within the affine hull of conv(Z): descriptions of
  // lower-dimensional hulls list facets relative to their hull equalities
  std::vector<std::vector<Rat>> pts;
  for (const YZPoint& p : Z) pts.push_back(p.as_vector());
  int hull_idx = 0;
  for (auto& [normal, c] : affine_hull_relations(pts)) {
    LinIneq eqrow;
    eqrow.name = "hull_" + std::to_string(hull_idx++);
    eqrow.sense = Sense::EQ;
    eqrow.rhs = c;
    for (int j = 0; j < 2 * n; ++j)
      if (normal[j] != 0)
        eqrow.coeffs[j < n ? yv(j) : zv(j - n)] = normal[j];
    poly.add_row(eqrow);
  }

  for (const auto& vertex : enumerate_vertices(poly, opt)) {
    std::vector<int> yvec;
    std::uint32_t ybits = 0, zbits = 0;
    for (int t = 0; t < n; ++t) {
      const Rat& yc = vertex.at(yv(t));
      const Rat& zc = vertex.at(zv(t));
      if (!(yc == 0 || yc == 1) || !(zc == 0 || zc == 1)) return false;
      if (yc == 1) ybits |= 1u << t;
      if (zc == 1) zbits |= 1u << t;
    }
    if (!is_feasible_bits(inst, ybits)) return false;
    if (zbits != derive_startups_bits(ybits, n)) return false;
  }
  return true;
}

}  // namespace runpoly
