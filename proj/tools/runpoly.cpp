// runpoly: exact polyhedral toolkit for cyclic on/off schedules with
// run-length bounds.  Subcommands: enumerate, formulate, check, conjecture.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "runpoly/cli_commands.hpp"

using namespace runpoly;

namespace {

std::vector<Instance> gather_instances(const std::string& instance_path,
                                       const std::string& grid) {
  if (!grid.empty() && !instance_path.empty())
    throw std::invalid_argument("pass either an instance file or --grid");
  if (!grid.empty()) return expand_grid(grid);
  if (instance_path.empty())
    throw std::invalid_argument("an instance file or --grid is required");
  return {Instance::load(instance_path)};
}

int with_output(const std::string& out, const std::function<int(std::ostream&)>& fn) {
  if (out.empty()) return fn(std::cout);
  std::ofstream os(out);
  if (!os) throw std::invalid_argument("cannot open output file: " + out);
  return fn(os);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact polyhedral toolkit for cyclic run-length-bounded "
               "on/off schedules"};
  app.require_subcommand(1);

  std::string instance_path, grid, model = "P", format = "lp", suite, out;
  unsigned long long seed = kDefaultSeed;
  int limit_n = -1;  // per-subcommand default: 20 for enumerate, 8 for check

  auto* enumerate = app.add_subcommand("enumerate", "list every schedule");
  enumerate->add_option("instance", instance_path, "instance JSON file")
      ->required();
  enumerate->add_option("--out", out, "output file (default stdout)");
  enumerate->add_option("--limit-n", limit_n, "enumeration limit");

  auto* formulate =
      app.add_subcommand("formulate", "export a formulation (lp, json, dot)");
  formulate->add_option("instance", instance_path)->required();
  formulate->add_option("--model", model, "P | Q | Qprime | Phat");
  formulate->add_option("--format", format, "lp | json | dot");
  formulate->add_option("--out", out, "output file (default stdout)");

  auto* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("instance", instance_path, "instance JSON file");
  check->add_option("--grid", grid,
                    "e.g. \"n=4..8; const=(1,2,1,2)\" or "
                    "\"n=4..6; allconst=(3,3)\"");
  check->add_option("--suite", suite,
                    "prop1 | prop2 | prop6 | qprime-hull | lemma-blocks | "
                    "phat-hull | cuts | full-desc")
      ->required();
  check->add_option("--seed", seed, "sweep seed");
  check->add_option("--limit-n", limit_n, "enumeration limit");
  check->add_option("--out", out, "output file (default stdout)");

  auto* conjecture = app.add_subcommand(
      "conjecture", "compare the flow shadow with the direct relaxation");
  conjecture->add_option("instance", instance_path)->required();
  conjecture->add_option("--seed", seed, "sweep seed");
  conjecture->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (const char* env = std::getenv("CYCLIC_RUNPOLY_SEED"))
    seed = std::strtoull(env, nullptr, 10);

  CheckOptions opt;
  opt.seed = seed;
  opt.limit_n = limit_n < 0 ? 8 : limit_n;

  try {
    if (enumerate->parsed()) {
      Instance inst = Instance::load(instance_path);
      int limit = limit_n < 0 ? 20 : limit_n;
      return with_output(out, [&](std::ostream& os) {
        return cmd_enumerate(inst, os, limit);
      });
    }
    if (formulate->parsed()) {
      Instance inst = Instance::load(instance_path);
      return with_output(out, [&](std::ostream& os) {
        return cmd_formulate(inst, model, format, os);
      });
    }
    if (check->parsed()) {
      auto instances = gather_instances(instance_path, grid);
      return with_output(out, [&](std::ostream& os) {
        return cmd_check(instances, suite, opt, os);
      });
    }
    if (conjecture->parsed()) {
      Instance inst = Instance::load(instance_path);
      return with_output(
          out, [&](std::ostream& os) { return cmd_conjecture(inst, opt, os); });
    }
  } catch (const resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what()
              << " (lower n or raise --limit-n)\n";
    return kExitResourceLimit;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
