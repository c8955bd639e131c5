#ifndef CRANESITE_BATCH_HPP_
#define CRANESITE_BATCH_HPP_

// Multi-seed optimization batches and their summary statistics.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cranesite/metaheuristics.hpp"
#include "cranesite/oracle.hpp"
#include "cranesite/site_model.hpp"

namespace cranesite {

struct BatchSpec {
  ScenarioKind scenario = ScenarioKind::Homogeneous;
  Algorithm algorithm = Algorithm::kCbo;
  int runs = 30;
  // config.seed is ignored; run r uses base_seed + r.
  OptimizerConfig config;
  std::filesystem::path instance_path;
  std::uint64_t base_seed = 1;
  double duplicate_penalty = kDefaultDuplicatePenalty;
  // Worker threads; results never depend on this.
  int threads = 1;
};

struct RunDigest {
  int run = 0;
  std::uint64_t seed = 0;
  double best_cost = 0.0;
  Solution best_solution;
  std::size_t evaluations = 0;
  std::vector<double> history;
};

struct BatchSummary {
  Algorithm algorithm = Algorithm::kCbo;
  ScenarioKind scenario = ScenarioKind::Homogeneous;
  double best_cost = 0.0;
  double mean_cost = 0.0;
  // Sample standard deviation (n - 1); 0 for a single run.
  double std_dev = 0.0;
  double worst_cost = 0.0;
  Solution best_solution;
  std::vector<RunDigest> per_run;
  // Mean over runs of the best-so-far cost at each iteration.
  std::vector<double> mean_history;
};

// Runs the batch against an already-loaded instance.
BatchSummary run_batch(const BatchSpec& spec, const SiteInstance& instance);
// Loads spec.instance_path first.
BatchSummary run_batch(const BatchSpec& spec);

// Aggregates digests (ordered by run index) into a summary.
BatchSummary summarize(Algorithm algorithm, ScenarioKind scenario,
                       std::vector<RunDigest> digests);

// Throws std::runtime_error naming the first run whose cost falls below the
// certified optimum by more than `tolerance`.
void certify(const BatchSummary& summary, const OracleResult& oracle,
             double tolerance = 1e-9);

// CSV text of the three emitted files.
std::string summary_csv(const BatchSummary& summary);
std::string runs_csv(const BatchSummary& summary);
std::string history_csv(const BatchSummary& summary);

// Writes summary.csv, runs.csv and history.csv under `out_dir` (created if
// needed), overwriting existing files. Returns the written paths.
std::vector<std::filesystem::path> emit_results(
    const BatchSummary& summary, const std::filesystem::path& out_dir);

std::string oracle_json(ScenarioKind kind, const OracleResult& oracle);

}  // namespace cranesite

#endif  // CRANESITE_BATCH_HPP_
