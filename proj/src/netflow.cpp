#include "runpoly/netflow.hpp"

#include <algorithm>
#include <sstream>

#include "runpoly/polyops.hpp"

namespace runpoly {

int CycleNetwork::find_arc(int state, int t, int run) const {
  for (size_t i = 0; i < arcs.size(); ++i)
    if (arcs[i].state == state && arcs[i].t == t && arcs[i].run == run)
      return static_cast<int>(i);
  return -1;
}

CycleNetwork build_network(const Instance& inst) {
  inst.validate();
  CycleNetwork net;
  net.inst = inst;
  const int n = inst.n;
  for (int t = 0; t < n; ++t)
    for (int p = inst.alpha[t]; p <= inst.beta[t]; ++p)
      net.arcs.push_back({0, t, p});
  for (int t = 0; t < n; ++t)
    for (int q = inst.gamma[t]; q <= inst.delta[t]; ++q)
      net.arcs.push_back({1, t, q});

  net.on_window.assign(n, {});
  net.off_window.assign(n, {});
  net.out_of.assign(2 * n, {});
  net.into.assign(2 * n, {});
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    const NetArc& a = net.arcs[i];
    auto span = a.span(n);
    for (int t : span.members())
      (a.state == 0 ? net.on_window : net.off_window)[t].push_back(
          static_cast<int>(i));
    net.out_of[net.node_id(a.state, a.t)].push_back(static_cast<int>(i));
    net.into[net.node_id(a.to_state(), a.to_t(n))].push_back(
        static_cast<int>(i));
  }
  return net;
}

CyclePoint cycle_to_point(const CycleNetwork& net, const std::vector<int>& cycle) {
  const int n = net.inst.n;
  if (cycle.empty()) throw std::invalid_argument("cycle_to_point: empty walk");
  int total = 0;
  for (size_t i = 0; i < cycle.size(); ++i) {
    if (cycle[i] < 0 || cycle[i] >= static_cast<int>(net.arcs.size()))
      throw std::invalid_argument("cycle_to_point: bad arc index");
    const NetArc& a = net.arcs[cycle[i]];
    const NetArc& b = net.arcs[cycle[(i + 1) % cycle.size()]];
    if (a.to_state() != b.state || a.to_t(n) != b.t)
      throw std::invalid_argument("cycle_to_point: arcs do not chain");
    total += a.run;
  }
  if (total != n)
    throw cycle_length_error("cycle_to_point: run lengths sum to " +
                             std::to_string(total) + ", not n=" +
                             std::to_string(n));
  CyclePoint out;
  out.x.assign(net.arcs.size(), Rat(0));
  for (int id : cycle) out.x[id] = 1;
  out.yz.y.assign(n, Rat(0));
  out.yz.z.assign(n, Rat(0));
  for (int id : cycle) {
    const NetArc& a = net.arcs[id];
    if (a.state == 0) {
      for (int t : a.span(n).members()) out.yz.y[t] = 1;
      out.yz.z[a.t] = 1;
    }
  }
  return out;
}

HPolytope build_Q(const Instance& inst) {
  CycleNetwork net = build_network(inst);
  const int n = inst.n;
  HPolytope poly;
  poly.name = "Q " + inst.describe();
  for (const NetArc& a : net.arcs) poly.add_variable(a.var_name());
  for (int t = 0; t < n; ++t) poly.add_variable("y_" + std::to_string(t));
  for (int t = 0; t < n; ++t) poly.add_variable("z_" + std::to_string(t));

  LinIneq inj;
  inj.name = "inj";
  inj.sense = Sense::EQ;
  inj.rhs = 1;
  for (int id : net.off_window[0]) inj.coeffs[net.arcs[id].var_name()] = 1;
  for (int id : net.on_window[0]) inj.coeffs[net.arcs[id].var_name()] = 1;
  poly.add_row(inj);

  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < n; ++t) {
      LinIneq cons;
      cons.name = "flow_" + std::to_string(s) + "_" + std::to_string(t);
      cons.sense = Sense::EQ;
      cons.rhs = 0;
      for (int id : net.into[net.node_id(s, t)])
        cons.coeffs[net.arcs[id].var_name()] += 1;
      for (int id : net.out_of[net.node_id(s, t)])
        cons.coeffs[net.arcs[id].var_name()] -= 1;
      poly.add_row(cons);
    }

  for (int t = 0; t < n; ++t) {
    LinIneq ydef;
    ydef.name = "ydef_" + std::to_string(t);
    ydef.sense = Sense::EQ;
    ydef.rhs = 0;
    ydef.coeffs["y_" + std::to_string(t)] = 1;
    for (int id : net.on_window[t]) ydef.coeffs[net.arcs[id].var_name()] -= 1;
    poly.add_row(ydef);
  }
  for (int t = 0; t < n; ++t) {
    LinIneq zdef;
    zdef.name = "zdef_" + std::to_string(t);
    zdef.sense = Sense::EQ;
    zdef.rhs = 0;
    zdef.coeffs["z_" + std::to_string(t)] = 1;
    for (int id : net.out_of[net.node_id(0, t)])
      zdef.coeffs[net.arcs[id].var_name()] -= 1;
    poly.add_row(zdef);
  }
  for (const NetArc& a : net.arcs) {
    LinIneq nn;
    nn.name = "xnn_" + a.var_name();
    nn.coeffs[a.var_name()] = -1;
    nn.rhs = 0;
    poly.add_row(nn);
  }
  return poly;
}

FractionalCertificate fractional_vertex_certificate(const Instance& inst,
                                                    const std::vector<int>& cycle,
                                                    const Rat& weight) {
  CycleNetwork net = build_network(inst);
  HPolytope Q = build_Q(inst);
  const int n = inst.n;
  std::map<std::string, Rat> point;
  for (const NetArc& a : net.arcs) point[a.var_name()] = 0;
  for (int id : cycle) {
    if (id < 0 || id >= static_cast<int>(net.arcs.size()))
      throw std::invalid_argument("fractional_vertex_certificate: bad arc index");
    point[net.arcs[id].var_name()] += weight;
  }
  FractionalCertificate cert;
  cert.projection.y.assign(n, Rat(0));
  cert.projection.z.assign(n, Rat(0));
  for (int t = 0; t < n; ++t) {
    for (int id : net.on_window[t])
      cert.projection.y[t] += point[net.arcs[id].var_name()];
    for (int id : net.out_of[net.node_id(0, t)])
      cert.projection.z[t] += point[net.arcs[id].var_name()];
    point["y_" + std::to_string(t)] = cert.projection.y[t];
    point["z_" + std::to_string(t)] = cert.projection.z[t];
  }
  if (!Q.contains(point))
    throw std::invalid_argument(
        "fractional_vertex_certificate: weighted point is not in Q");
  cert.extreme = is_extreme(Q, point);
  std::vector<std::vector<Rat>> hull_pts;
  for (const YZPoint& p : enumerate_Z(inst)) hull_pts.push_back(p.as_vector());
  cert.in_hull = membership_in_conv(hull_pts, cert.projection.as_vector());
  return cert;
}

std::vector<std::vector<int>> enumerate_cycles(const CycleNetwork& net) {
  const int n = net.inst.n;
  std::vector<std::vector<int>> cycles;
  std::vector<int> anchor_arcs;
  for (int id : net.on_window[0]) anchor_arcs.push_back(id);
  for (int id : net.off_window[0]) anchor_arcs.push_back(id);
  std::sort(anchor_arcs.begin(), anchor_arcs.end());
  std::vector<int> path;
  // depth-first over run-length remaining; every length-n cycle carries
  // exactly one arc through the period-0 window, its anchor
  auto dfs = [&](auto&& self, int anchor, int node, int used) -> void {
    if (used == n) {
      const NetArc& a0 = net.arcs[anchor];
      if (node == net.node_id(a0.state, a0.t)) cycles.push_back(path);
      return;
    }
    for (int id : net.out_of[node]) {
      const NetArc& a = net.arcs[id];
      if (used + a.run > n) continue;
      path.push_back(id);
      self(self, anchor, net.node_id(a.to_state(), a.to_t(n)), used + a.run);
      path.pop_back();
    }
  };
  for (int anchor : anchor_arcs) {
    const NetArc& a = net.arcs[anchor];
    path.assign(1, anchor);
    dfs(dfs, anchor, net.node_id(a.to_state(), a.to_t(n)), a.run);
  }
  return cycles;
}

std::string network_to_dot(const CycleNetwork& net,
                           const std::vector<int>* highlight) {
  std::vector<char> mark(net.arcs.size(), 0);
  if (highlight)
    for (int id : *highlight) mark.at(id) = 1;
  std::ostringstream os;
  os << "digraph switching_network {\n  rankdir=LR;\n";
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < net.inst.n; ++t)
      os << "  n" << s << "_" << t << " [label=\"(" << s << "," << t
         << ")\"];\n";
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    const NetArc& a = net.arcs[i];
    os << "  n" << a.state << "_" << a.t << " -> n" << a.to_state() << "_"
       << a.to_t(net.inst.n) << " [label=\"(" << a.run << ")\"";
    if (mark[i]) os << ", style=dashed, penwidth=2";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace runpoly
