#pragma once

#include <map>
#include <string>
#include <vector>

#include "runpoly/instance.hpp"
#include "runpoly/linear.hpp"

namespace runpoly {

/// A branch of the last-switch disjunction: i = 0 means the run crossing the
/// horizon end is an on-run starting at tau (tau in T0), i = 1 the mirrored
/// off-run (tau in T1).
struct BlockKey {
  int i;
  int tau;
  friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
};

/// Splits Z by its wrap run: branch (0,tau) holds the schedules with
/// y_{tau-1}=0 and y_tau=...=y_{n-1}=1, branch (1,tau) the mirrored ones.
/// Every key of T0/T1 is present, possibly with an empty cell; the cells
/// partition Z.
std::map<BlockKey, std::vector<YZPoint>> partition_Z(const Instance& inst,
                                                     int limit_n = 20);

/// Run-length bounds for the artificial period -1 that absorbs a branch's
/// wrap run (period -1 plays the role of a copy of period n-1).
struct BoundaryParams {
  int i = 0, tau = 0;
  int alpha_m1 = 0, beta_m1 = 0, gamma_m1 = 0, delta_m1 = 0;
};

/// Throws std::invalid_argument when tau is not in T_i.
BoundaryParams boundary_params(const Instance& inst, int i, int tau);

/// Bound vector extended to periods [-1, n-1]; index k+1 holds eps_k.
struct ExtendedBounds {
  std::vector<int> alpha, beta, gamma, delta;  // each of length n+1
};
ExtendedBounds extended_bounds(const Instance& inst, int i, int tau);

/// eps[t+1] >= eps[t] - 1 for t in [-1, n-2], no wrap (array indexing as in
/// ExtendedBounds).
bool check_weak_monotonicity_extended(const std::vector<int>& eps_ext);

/// min{k in [-1, t] : k + eps_k >= t + 1} for the extended vector; the
/// covering set is a suffix of [-1, t] by weak monotonicity (enforced,
/// std::invalid_argument otherwise).
int s_prime(const std::vector<int>& eps_ext, int t);

/// The non-cyclic branch polytope over y_{-1..n-1}, z_{-1..n-1}, lambda:
/// window rows via s', gamma/delta rows scaled by lambda and emitted only
/// when s' >= 0, bounds 0 <= y,z <= lambda <= 1, plus the branch fixings.
struct BlockPolytope {
  HPolytope poly;
  int i = 0, tau = 0;
};

/// Variable names carry `suffix` (used as "__i_tau" inside the combined
/// formulation); period -1 prints as "m1".
BlockPolytope build_block(const Instance& inst, int i, int tau,
                          const std::string& suffix = "");

/// Integral points of the block's lambda=1 slice, projected to (y, z) over
/// [0, n-1]; equals the partition cell lifted by y_{-1}=y_{n-1}.
std::vector<YZPoint> block_lambda1_integral_points(const BlockPolytope& block);

/// The combined disjunctive formulation: per-branch variable copies, branch
/// scaling variables summing to one, and linking rows tying the copies to
/// the shared {y_t, z_t}.
HPolytope build_Phat(const Instance& inst);

}  // namespace runpoly
