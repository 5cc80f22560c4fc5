#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "runpoly/netflow.hpp"
#include "runpoly/polyops.hpp"
#include "runpoly/simplex.hpp"

using namespace runpoly;

namespace {

// Fig-style dashed cycle: on 2 at period 0, off 1 at 2, on 1 at 3, off 2 at 4
std::vector<int> dashed_cycle(const CycleNetwork& net) {
  return {net.find_arc(0, 0, 2), net.find_arc(1, 2, 1), net.find_arc(0, 3, 1),
          net.find_arc(1, 4, 2)};
}

// the half-weight counterexample cycle for (1,3,1,3): run lengths sum to 2n
std::vector<int> long_cycle(const CycleNetwork& net) {
  return {net.find_arc(0, 0, 3), net.find_arc(1, 3, 1), net.find_arc(0, 4, 3),
          net.find_arc(1, 1, 1), net.find_arc(0, 2, 3), net.find_arc(1, 5, 1)};
}

std::map<std::string, Rat> lift_cycle(const CycleNetwork& net,
                                      const std::vector<int>& cyc) {
  CyclePoint cp = cycle_to_point(net, cyc);
  std::map<std::string, Rat> pt;
  for (size_t i = 0; i < net.arcs.size(); ++i)
    pt[net.arcs[i].var_name()] = cp.x[i];
  for (int t = 0; t < net.inst.n; ++t) {
    pt["y_" + std::to_string(t)] = cp.yz.y[t];
    pt["z_" + std::to_string(t)] = cp.yz.z[t];
  }
  return pt;
}

}  // namespace

TEST_CASE("network construction counts") {
  CycleNetwork net = build_network(Instance::constant(6, 1, 2, 1, 2));
  CHECK(net.arcs.size() == 24);
  CHECK(build_network(Instance::constant(6, 1, 3, 1, 3)).arcs.size() == 36);
  CycleNetwork tiny = build_network(Instance::constant(4, 1, 1, 1, 1));
  CHECK(tiny.arcs.size() == 8);
  for (int v = 0; v < 8; ++v) CHECK(tiny.out_of[v].size() == 1);

  // every arc lies in the window of each period it spans
  for (int t = 0; t < 6; ++t) {
    for (int id : net.on_window[t]) CHECK(net.arcs[id].span(6).contains(t));
    for (int id : net.off_window[t]) CHECK(net.arcs[id].span(6).contains(t));
  }
}

TEST_CASE("cycle_to_point on the dashed cycle") {
  CycleNetwork net = build_network(Instance::constant(6, 1, 2, 1, 2));
  CyclePoint cp = cycle_to_point(net, dashed_cycle(net));
  CHECK(cp.yz.bitstring() == "110100|100100");
  Rat total = 0;
  for (const Rat& v : cp.x) total += v;
  CHECK(total == 4);
}

TEST_CASE("cycle_to_point rejects bad walks") {
  CycleNetwork net = build_network(Instance::constant(6, 1, 3, 1, 3));
  CHECK_THROWS_AS(cycle_to_point(net, long_cycle(net)), cycle_length_error);
  CHECK_THROWS_AS(cycle_to_point(net, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(cycle_to_point(net, {}), std::invalid_argument);

  CycleNetwork tiny = build_network(Instance::constant(4, 1, 1, 1, 1));
  auto cycles = enumerate_cycles(tiny);
  REQUIRE(cycles.size() == 2);
  auto yz = cycle_to_point(tiny, cycles[0]).yz;
  CHECK((yz.bitstring() == "1010|1010" || yz.bitstring() == "0101|0101"));
}

TEST_CASE("flow formulation size") {
  HPolytope Q = build_Q(Instance::constant(6, 1, 2, 1, 2));
  CHECK(Q.variables.size() == 36);
  CHECK(Q.equalities.size() == 25);  // 1 + 2n + n + n
  CHECK(Q.inequalities.size() == 24);
}

TEST_CASE("lifted schedules lie in Q and satisfy the window identities") {
  Instance inst = Instance::constant(6, 1, 2, 1, 2);
  CycleNetwork net = build_network(inst);
  HPolytope Q = build_Q(inst);
  auto pt = lift_cycle(net, dashed_cycle(net));
  CHECK(Q.contains(pt));

  for (auto& cyc : enumerate_cycles(net)) {
    auto p = lift_cycle(net, cyc);
    CHECK(Q.contains(p));
    // unit flow through every period's window, not only period 0
    for (int t = 0; t < inst.n; ++t) {
      Rat tot = 0;
      for (int id : net.on_window[t]) tot += p[net.arcs[id].var_name()];
      for (int id : net.off_window[t]) tot += p[net.arcs[id].var_name()];
      CHECK(tot == 1);
    }
    // out-flow of (0,t) is the on-switch indicator, of (1,t) the off-switch
    CyclePoint cp = cycle_to_point(net, cyc);
    for (int t = 0; t < inst.n; ++t) {
      Rat on = 0, off = 0;
      for (int id : net.out_of[net.node_id(0, t)])
        on += p[net.arcs[id].var_name()];
      for (int id : net.out_of[net.node_id(1, t)])
        off += p[net.arcs[id].var_name()];
      int prev = (cp.yz.y[mod_index(t - 1, inst.n)] == 1);
      int cur = (cp.yz.y[t] == 1);
      CHECK(on == ((prev == 0 && cur == 1) ? 1 : 0));
      CHECK(off == ((prev == 1 && cur == 0) ? 1 : 0));
    }
  }
}

TEST_CASE("length-n cycles are in bijection with Z") {
  for (auto inst : {Instance::constant(4, 1, 2, 1, 2),
                    Instance::constant(6, 1, 2, 1, 2),
                    Instance::constant(6, 1, 3, 1, 3),
                    Instance::constant(7, 2, 3, 1, 2),
                    Instance::constant(8, 1, 2, 1, 2)}) {
    CycleNetwork net = build_network(inst);
    auto cycles = enumerate_cycles(net);
    auto Z = enumerate_Z(inst);
    REQUIRE(cycles.size() == Z.size());
    std::set<YZPoint> zs(Z.begin(), Z.end());
    std::set<YZPoint> seen;
    for (auto& cyc : cycles) {
      YZPoint p = cycle_to_point(net, cyc).yz;
      CHECK(zs.count(p));
      seen.insert(p);
    }
    CHECK(seen.size() == Z.size());
  }
}

TEST_CASE("half-weight cycle is an extreme point of Q outside conv(Z)") {
  Instance inst = Instance::constant(6, 1, 3, 1, 3);
  CycleNetwork net = build_network(inst);
  auto cert = fractional_vertex_certificate(inst, long_cycle(net), Rat(1) / 2);
  CHECK(cert.extreme);
  CHECK(!cert.in_hull);
  YZPoint expect;
  for (int t = 0; t < 6; ++t) {
    expect.y.push_back(t % 2 == 0 ? Rat(1) : Rat(1) / 2);
    expect.z.push_back(t % 2 == 0 ? Rat(1) / 2 : Rat(0));
  }
  CHECK(cert.projection == expect);
}

TEST_CASE("integral cycles certify as hull members, midpoints as non-extreme") {
  Instance inst = Instance::constant(6, 1, 2, 1, 2);
  CycleNetwork net = build_network(inst);
  auto cycles = enumerate_cycles(net);
  REQUIRE(cycles.size() >= 2);
  auto c1 = fractional_vertex_certificate(inst, cycles[0], 1);
  CHECK(c1.extreme);
  CHECK(c1.in_hull);

  // average of two distinct cycles: in the hull but no longer a vertex
  std::vector<int> joined = cycles[0];
  joined.insert(joined.end(), cycles[1].begin(), cycles[1].end());
  auto c2 = fractional_vertex_certificate(inst, joined, Rat(1) / 2);
  CHECK(!c2.extreme);
  CHECK(c2.in_hull);

  CHECK_THROWS_AS(
      fractional_vertex_certificate(inst, cycles[0], Rat(1) / 2),
      std::invalid_argument);  // half a single cycle misses the injection row
}

TEST_CASE("vertex enumeration of Q finds the half-weight cycle point") {
  Instance inst = Instance::constant(6, 1, 3, 1, 3);
  CycleNetwork net = build_network(inst);
  HPolytope Q = build_Q(inst);
  auto verts = enumerate_vertices(Q, {.max_dim = 30});
  CHECK(verts.size() == 872);

  std::map<std::string, Rat> half;
  for (const NetArc& a : net.arcs) half[a.var_name()] = 0;
  for (int id : long_cycle(net)) half[net.arcs[id].var_name()] = Rat(1) / 2;
  for (int t = 0; t < 6; ++t) {
    Rat y = 0, z = 0;
    for (int id : net.on_window[t]) y += half[net.arcs[id].var_name()];
    for (int id : net.out_of[net.node_id(0, t)])
      z += half[net.arcs[id].var_name()];
    half["y_" + std::to_string(t)] = y;
    half["z_" + std::to_string(t)] = z;
  }
  CHECK(std::find(verts.begin(), verts.end(), half) != verts.end());

  int integral = 0;
  for (const auto& v : verts) {
    bool ok = true;
    for (const auto& [name, val] : v)
      if (!is_integer(val)) ok = false;
    integral += ok;
  }
  CHECK(integral == static_cast<int>(enumerate_Z(inst).size()));
}

TEST_CASE("fixing (y,z) in Q is feasible exactly on Z (spot checks)") {
  Instance inst = Instance::constant(6, 1, 2, 1, 2);
  HPolytope Q = build_Q(inst);
  auto fix = [&](const std::string& bits) {
    std::map<std::string, Rat> fixed;
    for (int t = 0; t < 6; ++t) {
      fixed["y_" + std::to_string(t)] = bits[t] - '0';
      fixed["z_" + std::to_string(t)] = bits[7 + t] - '0';
    }
    return lp_feasible(Q.substitute(fixed));
  };
  CHECK(fix("110100|100100"));
  CHECK(!fix("110100|000100"));  // z inconsistent with the switch pattern
  CHECK(!fix("111000|100000"));  // on-run too long
  CHECK(!fix("000000|000000"));
  CHECK(!fix("111111|000000"));
}

TEST_CASE("dot export") {
  CycleNetwork net = build_network(Instance::constant(6, 1, 2, 1, 2));
  auto cyc = dashed_cycle(net);
  std::string dot = network_to_dot(net, &cyc);
  CHECK(dot == network_to_dot(net, &cyc));
  CHECK(dot.find("n0_0 -> n1_2") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("label=\"(2)\"") != std::string::npos);
}
