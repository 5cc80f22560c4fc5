#include "runpoly/expanded.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace runpoly {

int ExpandedNetwork::copy_index(int j, int tau) const {
  for (size_t i = 0; i < copies.size(); ++i)
    if (copies[i].first == j && copies[i].second == tau)
      return static_cast<int>(i);
  return -1;
}

std::string ExpandedNetwork::node_label(int id) const {
  if (id == kOrigin) return "O";
  if (id == kDestination) return "D";
  int rel = id - 2;
  int t = rel % inst.n;
  int cs = rel / inst.n;
  int state = cs % 2;
  auto [j, tau] = copies[cs / 2];
  return "(" + std::to_string(state) + "," + std::to_string(t) + "," +
         std::to_string(j) + "," + std::to_string(tau) + ")";
}

std::pair<std::vector<int>, std::vector<int>> switch_sets(const Instance& inst) {
  std::vector<int> T0, T1;
  for (int tau = 0; tau < inst.n; ++tau) {
    if (tau + inst.beta[tau] >= inst.n) T0.push_back(tau);
    if (tau + inst.delta[tau] >= inst.n) T1.push_back(tau);
  }
  return {T0, T1};
}

ExpandedNetwork build_expanded(const Instance& inst, bool prune) {
  inst.validate();
  ExpandedNetwork net;
  net.inst = inst;
  net.pruned = prune;
  std::tie(net.T0, net.T1) = switch_sets(inst);
  for (int tau : net.T0) net.copies.emplace_back(0, tau);
  for (int tau : net.T1) net.copies.emplace_back(1, tau);
  const int n = inst.n;
  net.num_nodes = 2 + 2 * n * static_cast<int>(net.copies.size());

  auto add_arc = [&](ExpArc a) {
    std::ostringstream name;
    switch (a.family) {
      case 1:
      case 2:
        name << "xO_" << a.head_state << "_" << a.head_t << "__" << a.j << "_"
             << a.tau;
        break;
      case 3:
        name << "xD__" << a.j << "_" << a.tau;
        break;
      default:
        name << "x_" << a.tail_state << "_" << a.tail_t << "_" << a.head_t
             << "__" << a.j << "_" << a.tau;
    }
    a.name = name.str();
    net.arcs.push_back(std::move(a));
  };

  for (int tau : net.T0) {  // wrap on-runs
    int ci = net.copy_index(0, tau);
    for (int p = inst.alpha[tau]; p <= inst.beta[tau]; ++p) {
      int t = tau + p - n;
      if (t < 0) continue;  // the run must actually cross the horizon end
      ExpArc a;
      a.family = 1;
      a.j = 0;
      a.tau = tau;
      a.head_state = 1;
      a.head_t = t;
      a.from = ExpandedNetwork::kOrigin;
      a.to = net.node_id(ci, 1, t);
      add_arc(a);
    }
  }
  for (int tau : net.T1) {  // wrap off-runs
    int ci = net.copy_index(1, tau);
    for (int q = inst.gamma[tau]; q <= inst.delta[tau]; ++q) {
      int t = tau + q - n;
      if (t < 0) continue;
      ExpArc a;
      a.family = 2;
      a.j = 1;
      a.tau = tau;
      a.head_state = 0;
      a.head_t = t;
      a.from = ExpandedNetwork::kOrigin;
      a.to = net.node_id(ci, 0, t);
      add_arc(a);
    }
  }
  for (auto [j, tau] : net.copies) {
    ExpArc a;
    a.family = 3;
    a.j = j;
    a.tau = tau;
    a.tail_state = j;
    a.tail_t = tau;
    a.from = net.node_id(net.copy_index(j, tau), j, tau);
    a.to = ExpandedNetwork::kDestination;
    add_arc(a);
  }
  for (auto [j, tau] : net.copies) {  // in-copy arcs: no wrap inside a copy
    int ci = net.copy_index(j, tau);
    for (int t = 0; t < n; ++t) {
      for (int p = inst.alpha[t]; p <= inst.beta[t]; ++p) {
        int l = t + p;
        if (l >= n) break;
        ExpArc a;
        a.family = (j == 0) ? 4 : 5;
        a.j = j;
        a.tau = tau;
        a.tail_state = 0;
        a.tail_t = t;
        a.head_state = 1;
        a.head_t = l;
        a.from = net.node_id(ci, 0, t);
        a.to = net.node_id(ci, 1, l);
        add_arc(a);
      }
      for (int q = inst.gamma[t]; q <= inst.delta[t]; ++q) {
        int l = t + q;
        if (l >= n) break;
        ExpArc a;
        a.family = (j == 0) ? 4 : 5;
        a.j = j;
        a.tau = tau;
        a.tail_state = 1;
        a.tail_t = t;
        a.head_state = 0;
        a.head_t = l;
        a.from = net.node_id(ci, 1, t);
        a.to = net.node_id(ci, 0, l);
        add_arc(a);
      }
    }
  }

  // forward/backward reachability marks the elements on some O-D path
  std::vector<std::vector<int>> raw_out(net.num_nodes), raw_in(net.num_nodes);
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    raw_out[net.arcs[i].from].push_back(static_cast<int>(i));
    raw_in[net.arcs[i].to].push_back(static_cast<int>(i));
  }
  auto reach = [&](int start, const std::vector<std::vector<int>>& adj,
                   bool forward) {
    std::vector<char> seen(net.num_nodes, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int id : adj[v]) {
        int w = forward ? net.arcs[id].to : net.arcs[id].from;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return seen;
  };
  auto fwd = reach(ExpandedNetwork::kOrigin, raw_out, true);
  auto bwd = reach(ExpandedNetwork::kDestination, raw_in, false);
  net.node_alive.assign(net.num_nodes, 0);
  for (int v = 0; v < net.num_nodes; ++v) net.node_alive[v] = fwd[v] && bwd[v];
  net.arc_alive.assign(net.arcs.size(), 0);
  for (size_t i = 0; i < net.arcs.size(); ++i)
    net.arc_alive[i] = fwd[net.arcs[i].from] && bwd[net.arcs[i].to];

  net.out_of.assign(net.num_nodes, {});
  net.into.assign(net.num_nodes, {});
  net.on_window.assign(n, {});
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    if (!net.arc_kept(static_cast<int>(i))) continue;
    const ExpArc& a = net.arcs[i];
    net.out_of[a.from].push_back(static_cast<int>(i));
    net.into[a.to].push_back(static_cast<int>(i));
    for (int t = 0; t < n; ++t) {
      bool on = false;
      if (a.family == 1) on = (a.head_t > t);
      if (a.family == 3 && a.j == 0) on = (a.tau <= t);
      if ((a.family == 4 || a.family == 5) && a.tail_state == 0)
        on = (a.tail_t <= t && t < a.head_t);
      if (on) net.on_window[t].push_back(static_cast<int>(i));
    }
  }
  return net;
}

HPolytope build_Qprime(const Instance& inst) {
  ExpandedNetwork net = build_expanded(inst, true);
  const int n = inst.n;
  HPolytope poly;
  poly.name = "Qprime " + inst.describe();
  std::vector<int> kept;
  for (size_t i = 0; i < net.arcs.size(); ++i)
    if (net.arc_kept(static_cast<int>(i))) kept.push_back(static_cast<int>(i));
  for (int id : kept) poly.add_variable(net.arcs[id].name);
  for (int t = 0; t < n; ++t) poly.add_variable("y_" + std::to_string(t));
  for (int t = 0; t < n; ++t) poly.add_variable("z_" + std::to_string(t));

  LinIneq inj;
  inj.name = "inj";
  inj.sense = Sense::EQ;
  inj.rhs = 1;
  for (int id : net.out_of[ExpandedNetwork::kOrigin])
    inj.coeffs[net.arcs[id].name] = 1;
  poly.add_row(inj);

  for (int v = 2; v < net.num_nodes; ++v) {
    if (net.into[v].empty() && net.out_of[v].empty()) continue;
    LinIneq cons;
    cons.name = "flow_" + std::to_string(v);
    cons.sense = Sense::EQ;
    cons.rhs = 0;
    for (int id : net.into[v]) cons.coeffs[net.arcs[id].name] += 1;
    for (int id : net.out_of[v]) cons.coeffs[net.arcs[id].name] -= 1;
    poly.add_row(cons);
  }

  for (int t = 0; t < n; ++t) {
    LinIneq ydef;
    ydef.name = "ydef_" + std::to_string(t);
    ydef.sense = Sense::EQ;
    ydef.rhs = 0;
    ydef.coeffs["y_" + std::to_string(t)] = 1;
    for (int id : net.on_window[t]) ydef.coeffs[net.arcs[id].name] -= 1;
    poly.add_row(ydef);
  }
  // z_t counts all flow leaving an on-switch node with period t, terminal
  // arcs included
  for (int t = 0; t < n; ++t) {
    LinIneq zdef;
    zdef.name = "zdef_" + std::to_string(t);
    zdef.sense = Sense::EQ;
    zdef.rhs = 0;
    zdef.coeffs["z_" + std::to_string(t)] = 1;
    for (size_t ci = 0; ci < net.copies.size(); ++ci)
      for (int id : net.out_of[net.node_id(static_cast<int>(ci), 0, t)])
        zdef.coeffs[net.arcs[id].name] -= 1;
    poly.add_row(zdef);
  }
  for (int id : kept) {
    LinIneq nn;
    nn.name = "xnn_" + net.arcs[id].name;
    nn.coeffs[net.arcs[id].name] = -1;
    nn.rhs = 0;
    poly.add_row(nn);
  }
  return poly;
}

YZPoint path_to_point(const ExpandedNetwork& net, const std::vector<int>& path) {
  const int n = net.inst.n;
  if (path.empty()) throw std::invalid_argument("path_to_point: empty path");
  int at = ExpandedNetwork::kOrigin;
  for (int id : path) {
    if (id < 0 || id >= static_cast<int>(net.arcs.size()) || !net.arc_kept(id))
      throw std::invalid_argument("path_to_point: bad arc index");
    if (net.arcs[id].from != at)
      throw std::invalid_argument("path_to_point: arcs do not chain from O");
    at = net.arcs[id].to;
  }
  if (at != ExpandedNetwork::kDestination)
    throw std::invalid_argument("path_to_point: path does not end at D");

  std::set<int> ids(path.begin(), path.end());
  YZPoint p;
  p.y.assign(n, Rat(0));
  p.z.assign(n, Rat(0));
  for (int t = 0; t < n; ++t)
    for (int id : net.on_window[t])
      if (ids.count(id)) p.y[t] = 1;
  for (int id : path) {
    const ExpArc& a = net.arcs[id];
    if (a.tail_state == 0) p.z[a.tail_t] += 1;
  }
  return p;
}

SizeReport size_report(const Instance& inst) {
  ExpandedNetwork net = build_expanded(inst, false);
  SizeReport r;
  r.nodes = net.num_nodes;
  r.arcs = static_cast<long long>(net.arcs.size());
  r.equalities = 1 + (net.num_nodes - 2) + 2 * inst.n;
  return r;
}

std::vector<std::vector<int>> enumerate_od_paths(const ExpandedNetwork& net) {
  std::vector<std::vector<int>> paths;
  std::vector<int> cur;
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == ExpandedNetwork::kDestination) {
      paths.push_back(cur);
      return;
    }
    for (int id : net.out_of[v]) {
      cur.push_back(id);
      self(self, net.arcs[id].to);
      cur.pop_back();
    }
  };
  dfs(dfs, ExpandedNetwork::kOrigin);
  return paths;
}

std::string expanded_to_dot(const ExpandedNetwork& net,
                            const std::vector<int>* highlight) {
  std::vector<char> mark(net.arcs.size(), 0);
  if (highlight)
    for (int id : *highlight) mark.at(id) = 1;
  std::ostringstream os;
  os << "digraph expanded_network {\n  rankdir=LR;\n  O; D;\n";
  for (size_t ci = 0; ci < net.copies.size(); ++ci) {
    auto [j, tau] = net.copies[ci];
    os << "  subgraph cluster_" << j << "_" << tau << " {\n    label=\"copy ("
       << j << "," << tau << ")\";\n";
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < net.inst.n; ++t) {
        int v = net.node_id(static_cast<int>(ci), s, t);
        os << "    n" << v << " [label=\"" << net.node_label(v) << "\"";
        if (!net.node_alive[v]) os << ", color=gray, fontcolor=gray";
        os << "];\n";
      }
    os << "  }\n";
  }
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    const ExpArc& a = net.arcs[i];
    auto endpoint = [&](int v) {
      if (v == ExpandedNetwork::kOrigin) return std::string("O");
      if (v == ExpandedNetwork::kDestination) return std::string("D");
      return "n" + std::to_string(v);
    };
    os << "  " << endpoint(a.from) << " -> " << endpoint(a.to);
    std::vector<std::string> attrs;
    if (!net.arc_alive[i]) attrs.push_back("color=gray");
    if (mark[i]) attrs.push_back("style=dashed, penwidth=2");
    if (!attrs.empty()) {
      os << " [" << attrs[0];
      for (size_t k = 1; k < attrs.size(); ++k) os << ", " << attrs[k];
      os << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace runpoly
