#pragma once

#include <string>
#include <vector>

#include "runpoly/instance.hpp"
#include "runpoly/linear.hpp"

namespace runpoly {

/// Thrown by cycle_to_point when a closed walk's run lengths do not sum to
/// the horizon length (longer cycles exist in the network; they correspond
/// to no schedule).
class cycle_length_error : public std::invalid_argument {
 public:
  explicit cycle_length_error(const std::string& what)
      : std::invalid_argument(what) {}
};

/// One arc of the switching network: from node (state, t) to node
/// (1-state, t+run mod n).  state 0 means "switch on in period t" (an on-run
/// of `run` periods follows), state 1 the mirrored off-run.
struct NetArc {
  int state;
  int t;
  int run;

  int to_t(int n) const { return mod_index(t + run, n); }
  int to_state() const { return 1 - state; }
  std::string var_name() const {
    return "x_" + std::to_string(state) + "_" + std::to_string(t) + "_" +
           std::to_string(run);
  }
  /// Periods covered by the run, i.e. the windows this arc belongs to.
  CyclicInterval span(int n) const { return {t, mod_index(t + run - 1, n), n}; }
};

/// The cyclic switching network: 2n nodes (state, period), one arc per
/// admissible run.  Windows and adjacency are indexed once at build time;
/// the structure is immutable afterwards.
struct CycleNetwork {
  Instance inst;
  std::vector<NetArc> arcs;                    // on-arcs first, then off-arcs
  std::vector<std::vector<int>> on_window;     // per period: covering on-arcs
  std::vector<std::vector<int>> off_window;    // per period: covering off-arcs
  std::vector<std::vector<int>> out_of;        // per node id state*n+t
  std::vector<std::vector<int>> into;

  int node_id(int state, int t) const { return state * inst.n + t; }
  int find_arc(int state, int t, int run) const;  // -1 when absent
};

CycleNetwork build_network(const Instance& inst);

struct CyclePoint {
  std::vector<Rat> x;  // arc indicator, aligned with network.arcs
  YZPoint yz;
};

/// Converts a closed directed walk (arc indices) into its arc indicator and
/// schedule.  Throws std::invalid_argument when the arcs do not chain into a
/// closed walk, cycle_length_error when the run lengths do not sum to n.
CyclePoint cycle_to_point(const CycleNetwork& net, const std::vector<int>& cycle);

/// The flow formulation over {x_a} + {y_t} + {z_t}: unit flow through the
/// period-0 window, conservation at every node, y tied to the on-windows,
/// z tied to the on-switch out-flows, x >= 0.
HPolytope build_Q(const Instance& inst);

struct FractionalCertificate {
  bool extreme;       // the weighted cycle indicator is a vertex of Q
  bool in_hull;       // its (y,z) projection is a convex combination of Z
  YZPoint projection;
};

/// Evidence for (non-)integrality of Q: scales the cycle indicator by
/// `weight`, requires the result to lie in Q (std::invalid_argument
/// otherwise), and reports extremality plus hull membership of the
/// projection.
FractionalCertificate fractional_vertex_certificate(const Instance& inst,
                                                    const std::vector<int>& cycle,
                                                    const Rat& weight);

/// All directed cycles of total run length exactly n, each reported once,
/// anchored at its unique arc covering period 0.
std::vector<std::vector<int>> enumerate_cycles(const CycleNetwork& net);

/// DOT rendering; arcs in `highlight` are drawn dashed and bold.
std::string network_to_dot(const CycleNetwork& net,
                           const std::vector<int>* highlight = nullptr);

}  // namespace runpoly
