#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "runpoly/checks.hpp"

namespace runpoly {

// exit codes shared by the CLI:
//   0 all checks pass, 1 a mathematical check failed (witness printed),
//   2 usage or parse error, 3 resource limit hit
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResourceLimit = 3;

/// "n=4..8; const=(1,2,1,2)" or "n=6; allconst=(3,3)" (all constant bound
/// combinations with beta <= B, delta <= D, capped at n-1).
std::vector<Instance> expand_grid(const std::string& spec);

int cmd_enumerate(const Instance& inst, std::ostream& os, int limit_n = 20);

int cmd_formulate(const Instance& inst, const std::string& model,
                  const std::string& format, std::ostream& os);

int cmd_check(const std::vector<Instance>& instances, const std::string& suite,
              const CheckOptions& opt, std::ostream& os);

int cmd_conjecture(const Instance& inst, const CheckOptions& opt,
                   std::ostream& os);

}  // namespace runpoly
