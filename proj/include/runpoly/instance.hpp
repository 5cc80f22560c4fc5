#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "runpoly/rational.hpp"

#include <json.hpp>

namespace runpoly {

/// All period arithmetic is modulo n.  Every module indexes through this
/// helper; nothing else reduces indices by hand.
inline int mod_index(int t, int n) {
  int r = t % n;
  return r < 0 ? r + n : r;
}

/// Wrap-around interval of periods: [a,b] = {a,...,b} when a <= b and
/// {a,...,n-1,0,...,b} when b < a.
struct CyclicInterval {
  int a;
  int b;
  int n;

  bool contains(int t) const {
    t = mod_index(t, n);
    return mod_index(t - a, n) <= mod_index(b - a, n);
  }
  int length() const { return mod_index(b - a, n) + 1; }
  std::vector<int> members() const;
};

/// Contents of the wrap-around interval [a,b] in traversal order starting
/// at a.  Throws std::invalid_argument when n < 1 or a, b are out of range.
std::vector<int> cyclic_interval_members(int a, int b, int n);

/// A cyclic horizon of n periods with per-period run-length bounds:
/// an on-run starting in period t must have length in [alpha[t], beta[t]],
/// an off-run starting in period t must have length in [gamma[t], delta[t]].
struct Instance {
  int n = 0;
  std::vector<int> alpha, beta, gamma, delta;

  Instance() = default;
  Instance(int n_, std::vector<int> a, std::vector<int> b, std::vector<int> g,
           std::vector<int> d);

  /// Constant bounds (a,b,g,d) over the whole horizon.
  static Instance constant(int n, int a, int b, int g, int d);

  int cyc(int t) const { return mod_index(t, n); }
  bool constant_bounds() const;

  /// Enforces n >= 2 and 1 <= alpha <= beta <= n-1, 1 <= gamma <= delta <= n-1
  /// per period.  Throws std::invalid_argument on violation.
  void validate() const;

  /// JSON schema: {"n": int, "alpha": [...], "beta": [...], "gamma": [...],
  /// "delta": [...]} or the shorthand {"n": int, "const": [a,b,g,d]}.
  static Instance from_json(const nlohmann::json& j);
  static Instance load(const std::string& path);
  nlohmann::json to_json() const;

  std::string describe() const;
};

/// A (state, start-up) vector pair over the horizon; entries are rational
/// and integral exactly when produced by the oracle or enumerator.
struct YZPoint {
  std::vector<Rat> y, z;

  bool integral() const;
  /// Concatenated (y, z) coordinates, the ambient space of the state
  /// formulations.
  std::vector<Rat> as_vector() const;
  std::string bitstring() const;  // "110100|100100" (requires 0/1 entries)

  friend bool operator==(const YZPoint& a, const YZPoint& b) {
    return a.y == b.y && a.z == b.z;
  }
  friend auto operator<=>(const YZPoint& a, const YZPoint& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.z <=> b.z;
  }
};

// --- bitmask layer (bit t of the mask is period t; requires n <= 25) ---

/// z = startups(y): bit t set iff y_{t-1} = 0 and y_t = 1, cyclically.
std::uint32_t derive_startups_bits(std::uint32_t y, int n);

/// Ground-truth feasibility oracle: the four run-length implications hold
/// cyclically and y has at least one on- and one off-period.
bool is_feasible_bits(const Instance& inst, std::uint32_t y);

/// All feasible (y, z) pairs as bitmasks, ordered by increasing y mask.
/// Throws resource_limit_error when n exceeds limit_n.
std::vector<std::pair<std::uint32_t, std::uint32_t>> enumerate_Z_bits(
    const Instance& inst, int limit_n = 20);

YZPoint yz_from_bits(std::uint32_t y, std::uint32_t z, int n);

// --- vector layer ---

std::vector<int> derive_startups(const std::vector<int>& y);
bool is_feasible(const Instance& inst, const std::vector<int>& y);

/// The feasible set Z as lexicographically sorted YZPoints (exhaustive 2^n
/// scan of y; z is derived, never enumerated).
std::vector<YZPoint> enumerate_Z(const Instance& inst, int limit_n = 20);

/// For constant bounds: the set of achievable start-up counts,
/// {k integer : n/(beta+delta) <= k <= n/(alpha+gamma)}.
/// Throws std::invalid_argument when bounds are not constant.
std::set<int> startup_count_range(const Instance& inst);

/// For constant bounds and k in startup_count_range: a feasible point with
/// exactly k start-ups, built greedily block by block.
YZPoint construct_witness(const Instance& inst, int k);

/// eps[t+1] >= eps[t] - 1 for every t, including the wrap pair (n-1, 0).
bool check_weak_monotonicity(const std::vector<int>& eps);

/// The earliest period s such that the cyclic interval [s, t] equals
/// {k : t in [k, k+eps_k-1]}.  Requires weak monotonicity (else
/// std::invalid_argument); scans at most n-1 predecessors of t.
int s_index(const std::vector<int>& eps, int t);

}  // namespace runpoly
