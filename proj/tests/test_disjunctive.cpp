#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "runpoly/disjunctive.hpp"
#include "runpoly/expanded.hpp"
#include "runpoly/polyops.hpp"
#include "runpoly/simplex.hpp"

using namespace runpoly;

namespace {

std::map<std::string, Rat> fix_yz(const YZPoint& p) {
  std::map<std::string, Rat> fixed;
  for (size_t t = 0; t < p.y.size(); ++t) {
    fixed["y_" + std::to_string(t)] = p.y[t];
    fixed["z_" + std::to_string(t)] = p.z[t];
  }
  return fixed;
}

Rat max_over(const std::vector<YZPoint>& pts,
             const std::map<std::string, Rat>& obj) {
  Rat best;
  bool first = true;
  for (const YZPoint& p : pts) {
    Rat v = 0;
    for (size_t t = 0; t < p.y.size(); ++t) {
      auto iy = obj.find("y_" + std::to_string(t));
      if (iy != obj.end()) v += iy->second * p.y[t];
      auto iz = obj.find("z_" + std::to_string(t));
      if (iz != obj.end()) v += iz->second * p.z[t];
    }
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

std::vector<std::map<std::string, Rat>> small_objectives(int n, int count) {
  std::vector<std::map<std::string, Rat>> out;
  for (int k = 0; k < count; ++k) {
    std::map<std::string, Rat> o;
    for (int t = 0; t < n; ++t) {
      o["y_" + std::to_string(t)] = ((7 * k + 3 * t) % 7) - 3;
      o["z_" + std::to_string(t)] = ((5 * k + 2 * t) % 9) - 4;
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace

TEST_CASE("partition by the wrap run") {
  Instance inst = Instance::constant(6, 1, 2, 1, 2);
  auto cells = partition_Z(inst);
  CHECK(cells.size() == 4);  // (0,4), (0,5), (1,4), (1,5)

  YZPoint fig;
  for (int v : {1, 1, 0, 1, 0, 0}) fig.y.emplace_back(v);
  for (int v : {1, 0, 0, 1, 0, 0}) fig.z.emplace_back(v);
  auto& cell = cells.at({1, 4});
  CHECK(std::find(cell.begin(), cell.end(), fig) != cell.end());

  // the cells are disjoint and cover Z
  for (auto inst2 : {Instance::constant(6, 1, 2, 1, 2),
                     Instance::constant(6, 1, 3, 1, 3),
                     Instance::constant(7, 2, 3, 1, 2),
                     Instance::constant(8, 1, 2, 1, 3)}) {
    auto parts = partition_Z(inst2);
    std::vector<YZPoint> all;
    for (auto& [key, pts] : parts)
      all.insert(all.end(), pts.begin(), pts.end());
    std::set<YZPoint> dedup(all.begin(), all.end());
    CHECK(dedup.size() == all.size());
    auto Z = enumerate_Z(inst2);
    CHECK(dedup == std::set<YZPoint>(Z.begin(), Z.end()));
  }
}

TEST_CASE("boundary parameters") {
  // wide on-window: a wrap run of 12 periods consumes 9 before the horizon
  // end, so period -1 carries between 3 and 6 of it
  Instance wide = Instance::constant(10, 5, 8, 2, 3);
  BoundaryParams bp = boundary_params(wide, 0, 7);
  CHECK(bp.alpha_m1 == 3);
  CHECK(bp.beta_m1 == 6);
  CHECK(bp.gamma_m1 == wide.gamma[9]);
  CHECK(bp.delta_m1 == wide.delta[9]);

  Instance i6 = Instance::constant(6, 1, 2, 1, 2);
  BoundaryParams b4 = boundary_params(i6, 0, 4);
  CHECK(b4.alpha_m1 == 1);  // max{1, 4+1-5}
  CHECK(b4.beta_m1 == 1);
  BoundaryParams b5 = boundary_params(i6, 0, 5);
  CHECK(b5.alpha_m1 == 1);
  CHECK(b5.beta_m1 == 2);

  CHECK_THROWS_AS(boundary_params(i6, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(boundary_params(i6, 2, 4), std::invalid_argument);
}

TEST_CASE("extended bounds stay weakly monotone") {
  for (auto inst : {Instance::constant(6, 1, 2, 1, 2),
                    Instance::constant(6, 1, 3, 1, 3),
                    Instance::constant(8, 2, 3, 2, 3),
                    Instance(6, {1, 2, 1, 2, 1, 2}, {2, 2, 2, 2, 2, 2},
                             {1, 1, 1, 1, 1, 1}, {2, 3, 2, 3, 2, 3})}) {
    auto [T0, T1] = switch_sets(inst);
    for (int tau : T0) {
      ExtendedBounds eb = extended_bounds(inst, 0, tau);
      for (const auto* v : {&eb.alpha, &eb.beta, &eb.gamma, &eb.delta})
        CHECK(check_weak_monotonicity_extended(*v));
    }
    for (int tau : T1) {
      ExtendedBounds eb = extended_bounds(inst, 1, tau);
      for (const auto* v : {&eb.alpha, &eb.beta, &eb.gamma, &eb.delta})
        CHECK(check_weak_monotonicity_extended(*v));
    }
  }
}

TEST_CASE("s_prime") {
  // eps_{-1} = 1, eps constant 2 afterwards
  std::vector<int> ext{1, 2, 2, 2, 2, 2, 2};
  CHECK(s_prime(ext, 0) == 0);
  // a large eps_{-1} covers everything up to t
  std::vector<int> big{6, 5, 4, 3, 2, 2, 2};
  CHECK(s_prime(big, 3) == -1);
  // constant vector: the non-wrapping window start
  std::vector<int> c3{3, 3, 3, 3, 3, 3, 3};
  for (int t = 2; t < 6; ++t) CHECK(s_prime(c3, t) == t - 2);
  CHECK_THROWS_AS(s_prime({5, 1, 1, 1}, 1), std::invalid_argument);
}

TEST_CASE("block slices") {
  Instance inst = Instance::constant(6, 1, 2, 1, 2);
  auto cells = partition_Z(inst);
  for (auto& [key, cell] : cells) {
    BlockPolytope block = build_block(inst, key.i, key.tau);
    CHECK(block_lambda1_integral_points(block) == cell);

    // lambda = 0 collapses the block to the origin
    HPolytope zero_slice = block.poly;
    zero_slice.add_row({"slice0", {{"lambda", 1}}, Sense::EQ, 0});
    auto verts = enumerate_vertices(zero_slice, {.max_dim = 15});
    REQUIRE(verts.size() == 1);
    for (const auto& [v, val] : verts.front()) CHECK(val == 0);

    // hull property of the lambda = 1 slice, checked by objective sweeps
    HPolytope slice = block.poly;
    slice.add_row({"slice1", {{"lambda", 1}}, Sense::EQ, 1});
    LpEngine engine(slice);
    for (const auto& obj : small_objectives(6, 10)) {
      auto r = engine.optimize(obj, true);
      if (cell.empty()) {
        CHECK(r.status == LpStatus::Infeasible);
        continue;
      }
      REQUIRE(r.status == LpStatus::Optimal);
      CHECK(r.value == max_over(cell, obj));
    }
  }
}

TEST_CASE("combined formulation: sizes and naming") {
  Instance inst = Instance::constant(6, 1, 2, 1, 2);
  HPolytope phat = build_Phat(inst);
  // 2n linking vars + 4 blocks of (2(n+1) + 1) vars
  CHECK(phat.variables.size() == 12 + 4 * 15);
  CHECK(phat.has_variable("y_3__0_4"));
  CHECK(phat.has_variable("z_m1__1_5"));
  CHECK(phat.has_variable("lambda__0_4"));
}

TEST_CASE("combined formulation captures exactly the hull") {
  for (auto inst : {Instance::constant(6, 1, 2, 1, 2),
                    Instance::constant(5, 1, 2, 1, 2)}) {
    HPolytope phat = build_Phat(inst);
    auto Z = enumerate_Z(inst);
    LpEngine engine(phat);
    for (const auto& obj : small_objectives(inst.n, 12)) {
      auto r = engine.optimize(obj, true);
      REQUIRE(r.status == LpStatus::Optimal);
      CHECK(r.value == max_over(Z, obj));
    }
    for (const YZPoint& p : Z)
      CHECK(lp_feasible(phat.substitute(fix_yz(p))));
  }

  // the counterexample projection stays outside
  Instance i13 = Instance::constant(6, 1, 3, 1, 3);
  HPolytope phat13 = build_Phat(i13);
  YZPoint frac;
  for (int t = 0; t < 6; ++t) {
    frac.y.push_back(t % 2 == 0 ? Rat(1) : Rat(1) / 2);
    frac.z.push_back(t % 2 == 0 ? Rat(1) / 2 : Rat(0));
  }
  CHECK(!lp_feasible(phat13.substitute(fix_yz(frac))));
}
