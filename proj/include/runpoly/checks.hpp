#pragma once

#include <map>
#include <string>
#include <vector>

#include "runpoly/instance.hpp"
#include "runpoly/netflow.hpp"

#include <json.hpp>

namespace runpoly {

/// Seed used by every randomized sweep unless overridden (--seed or the
/// CYCLIC_RUNPOLY_SEED environment variable).
inline constexpr unsigned long long kDefaultSeed = 1729;

/// Deterministic integer objectives with coefficients in [-9, 9].
std::vector<std::map<std::string, Rat>> seeded_objectives(
    const std::vector<std::string>& vars, int count, unsigned long long seed);

/// Deterministic weakly monotone time-varying instances (rejection sampled).
std::vector<Instance> seeded_monotone_instances(int n, int count,
                                                unsigned long long seed);

struct CheckOptions {
  unsigned long long seed = kDefaultSeed;
  int limit_n = 8;
  int hull_objectives = 50;    // objective count per hull check
  int sweep_objectives = 200;  // objective count per integrality sweep
  int dd_max_dim = 16;
};

struct CheckReport {
  std::string suite;
  std::string instance_desc;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> lines;      // informational rows (cut reports)
  std::vector<std::string> witnesses;  // reproducible failure evidence
  double wall_seconds = 0;

  bool ok() const { return failed == 0; }
  nlohmann::json to_json() const;
};

/// Runs one named suite over the instances, fanning out per instance and
/// aggregating in input order.  Suites: prop1, prop2, prop6, qprime-hull,
/// lemma-blocks, phat-hull, cuts, full-desc.
CheckReport run_suite(const std::string& suite,
                      const std::vector<Instance>& instances,
                      const CheckOptions& opt = {});

enum class ConjectureVerdict {
  Equal,
  PStrictlyLarger,
  ProjStrictlyLarger,
  Inconclusive
};
std::string to_string(ConjectureVerdict v);

struct ConjectureResult {
  ConjectureVerdict verdict = ConjectureVerdict::Inconclusive;
  std::string witness;
};

/// Compares the flow formulation's schedule-space shadow with the direct
/// relaxation: containment one way by row maximization, the other by vertex
/// lifting.  Definite strict verdicts carry a witness.
ConjectureResult run_conjecture(const Instance& inst,
                                const CheckOptions& opt = {});

/// Exact LP feasibility of the flow system with the schedule fixed to a 0/1
/// pair; arcs inconsistent with the fixing are eliminated up front.
bool q_projects_binary_pair(const CycleNetwork& net, std::uint32_t ybits,
                            std::uint32_t zbits);

}  // namespace runpoly
