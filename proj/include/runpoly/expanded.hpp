#pragma once

#include <string>
#include <utility>
#include <vector>

#include "runpoly/instance.hpp"
#include "runpoly/linear.hpp"

namespace runpoly {

/// Arc of the expanded origin-destination network.  Families:
///   1: O -> (1,t,0,tau)        wrap on-run from tau, switch-off at t
///   2: O -> (0,t,1,tau)        wrap off-run from tau, switch-on at t
///   3: (i,tau,i,tau) -> D      closes the copy at its wrap period
///   4: in-copy arc, copies with j=0
///   5: in-copy arc, copies with j=1
struct ExpArc {
  int family;
  int j, tau;          // which copy
  int tail_state = -1; // -1 when the tail is O
  int tail_t = -1;
  int head_state = -1; // -1 when the head is D
  int head_t = -1;
  int from, to;        // node ids
  std::string name;
};

/// The expanded network: one copy of the horizon per wrap candidate
/// (0,tau) with tau + beta_tau >= n and (1,tau) with tau + delta_tau >= n,
/// plus origin and destination.  Copies contain only non-wrapping arcs, so
/// the graph is acyclic.  Elements on no O-D path can be pruned; the alive
/// flags are computed either way (the DOT export grays the dead parts).
struct ExpandedNetwork {
  Instance inst;
  std::vector<int> T0, T1;
  std::vector<std::pair<int, int>> copies;  // (j, tau), j=0 block first
  bool pruned = false;

  std::vector<ExpArc> arcs;
  std::vector<char> arc_alive;
  std::vector<char> node_alive;
  int num_nodes = 0;  // 2 + 2n * |copies|

  std::vector<std::vector<int>> out_of, into;  // adjacency over kept arcs
  std::vector<std::vector<int>> on_window;     // per period: kept on-arcs

  static constexpr int kOrigin = 0;
  static constexpr int kDestination = 1;

  int copy_index(int j, int tau) const;
  int node_id(int copy_idx, int state, int t) const {
    return 2 + (copy_idx * 2 + state) * inst.n + t;
  }
  std::string node_label(int id) const;
  bool arc_kept(int id) const { return !pruned || arc_alive[id]; }
};

/// (T0, T1): periods whose on-run (resp. off-run) upper bound reaches across
/// the horizon end.
std::pair<std::vector<int>, std::vector<int>> switch_sets(const Instance& inst);

ExpandedNetwork build_expanded(const Instance& inst, bool prune);

/// The flow formulation over {x'_a} + {y_t} + {z_t} on the pruned network:
/// unit out-flow at O, conservation at internal nodes, y tied to the on-arc
/// windows, z tied to the out-flow of on-switch nodes across all copies.
HPolytope build_Qprime(const Instance& inst);

/// Schedule of a directed O-D path (arc indices).  Throws
/// std::invalid_argument when the arcs do not chain from O to D.
YZPoint path_to_point(const ExpandedNetwork& net, const std::vector<int>& path);

struct SizeReport {
  long long nodes = 0;
  long long arcs = 0;
  long long equalities = 0;  // 1 + internal nodes + 2n, unpruned construction
};

/// Exact construction counts (always unpruned).
SizeReport size_report(const Instance& inst);

/// All directed O-D paths over kept arcs, in DFS order.
std::vector<std::vector<int>> enumerate_od_paths(const ExpandedNetwork& net);

/// DOT rendering with one cluster per copy; dead elements gray, arcs in
/// `highlight` dashed and bold.
std::string expanded_to_dot(const ExpandedNetwork& net,
                            const std::vector<int>* highlight = nullptr);

}  // namespace runpoly
