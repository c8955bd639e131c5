// cranesite: locate a tower crane and its material supply points.
//
//   cranesite validate --instance site.json
//   cranesite oracle   --instance site.json --scenario sized
//   cranesite solve    --instance site.json --scenario homogeneous \
//                      --algorithm ecbo --runs 30 --out-dir results/ --certify

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cranesite/batch.hpp"
#include "cranesite/instance_io.hpp"
#include "cranesite/oracle.hpp"

namespace {

using namespace cranesite;

struct SolveOptions {
  std::string instance;
  std::string scenario = "homogeneous";
  std::string algorithm = "cbo";
  std::string out_dir;
  int runs = 30;
  std::uint64_t seed = 1;
  bool certify = false;
  bool strict_collision = false;
  int cm_size = -1;
  int threads = 1;
  double penalty = kDefaultDuplicatePenalty;
  OptimizerConfig config;
};

int do_validate(const std::string& path) {
  const SiteInstance inst = load_instance(path);
  fmt::print("ok: {} demand points, {} supply points, {} crane positions, {} materials\n",
             inst.demand_count(), inst.supply_count(), inst.crane_count(),
             inst.material_count());
  return 0;
}

int do_oracle(const std::string& path, const std::string& scenario) {
  const SiteInstance inst = load_instance(path);
  const ScenarioKind kind = parse_scenario(scenario);
  const OracleResult result = run_oracle(kind, build_time_matrix(inst), inst);
  std::cout << oracle_json(kind, result);
  return 0;
}

int do_solve(SolveOptions opt) {
  BatchSpec spec;
  spec.scenario = parse_scenario(opt.scenario);
  spec.algorithm = parse_algorithm(opt.algorithm);
  spec.runs = opt.runs;
  spec.instance_path = opt.instance;
  spec.base_seed = opt.seed;
  spec.duplicate_penalty = opt.penalty;
  spec.threads = opt.threads;
  spec.config = opt.config;
  if (opt.cm_size >= 0) spec.config.cm_size = opt.cm_size;
  if (opt.strict_collision) spec.config.collision = CollisionRule::kAsPrinted;

  const SiteInstance inst = load_instance(spec.instance_path);
  const BatchSummary summary = run_batch(spec, inst);
  std::cout << summary_csv(summary);

  if (!opt.out_dir.empty()) {
    for (const auto& p : emit_results(summary, opt.out_dir))
      std::cerr << "wrote " << p.string() << "\n";
  }
  if (opt.certify) {
    const OracleResult oracle =
        run_oracle(spec.scenario, build_time_matrix(inst), inst);
    certify(summary, oracle);
    fmt::print(stderr, "certified: best {:.4f} >= optimum {:.4f}\n",
               summary.best_cost, oracle.best_cost);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tower crane and supply point location with CBO, ECBO and VPS"};
  app.require_subcommand(1);

  std::string instance;
  std::string scenario = "homogeneous";

  auto* validate_cmd = app.add_subcommand("validate", "Check an instance file");
  validate_cmd->add_option("--instance", instance, "Instance JSON file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive optimum of a scenario");
  oracle_cmd->add_option("--instance", instance, "Instance JSON file")->required();
  oracle_cmd->add_option("--scenario", scenario, "homogeneous | unbounded | sized");

  SolveOptions opt;
  auto* solve_cmd = app.add_subcommand("solve", "Run a multi-seed optimization batch");
  solve_cmd->add_option("--instance", opt.instance, "Instance JSON file")->required();
  solve_cmd->add_option("--scenario", opt.scenario, "homogeneous | unbounded | sized");
  solve_cmd->add_option("--algorithm", opt.algorithm, "cbo | ecbo | vps");
  solve_cmd->add_option("--runs", opt.runs, "Independent runs")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--iters", opt.config.iterations, "Iterations per run")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--pop", opt.config.population, "Population size (even, >= 4)");
  solve_cmd->add_option("--seed", opt.seed, "Base seed; run r uses seed + r");
  solve_cmd->add_option("--out-dir", opt.out_dir, "Directory for CSV outputs");
  solve_cmd->add_flag("--certify", opt.certify,
                      "Fail unless every run is no better than the exhaustive optimum");
  solve_cmd->add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--penalty", opt.penalty, "Penalty per duplicated supply pair");
  solve_cmd->add_flag("--strict-collision", opt.strict_collision,
                      "Use (m - eps*m) for the stationary post-collision velocity");
  solve_cmd->add_option("--pro", opt.config.pro, "ECBO escape probability");
  solve_cmd->add_option("--cm-size", opt.cm_size, "ECBO colliding-memory size");
  solve_cmd->add_option("--w1", opt.config.w1, "VPS weight of the best position");
  solve_cmd->add_option("--w2", opt.config.w2, "VPS weight of the good particle");
  solve_cmd->add_option("--w3", opt.config.w3, "VPS weight of the bad particle");
  solve_cmd->add_option("--p-bad", opt.config.p_bad, "VPS bad-particle probability p");
  solve_cmd->add_option("--d-exponent", opt.config.d_exponent, "VPS damping exponent");
  solve_cmd->add_option("--hmcr", opt.config.hmcr, "VPS memory considering rate");
  solve_cmd->add_option("--par", opt.config.par, "VPS pitch adjusting rate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*validate_cmd) return do_validate(instance);
    if (*oracle_cmd) return do_oracle(instance, scenario);
    if (*solve_cmd) return do_solve(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
