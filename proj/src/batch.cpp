#include "cranesite/batch.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>
#include <json.hpp>

#include "cranesite/instance_io.hpp"

namespace cranesite {

BatchSummary run_batch(const BatchSpec& spec, const SiteInstance& instance) {
  if (spec.runs < 1) throw std::invalid_argument("runs must be at least 1");
  validate(spec.config);

  const TravelTimeMatrix tm = build_time_matrix(instance);
  const ScenarioObjective objective =
      objective_for(spec.scenario, instance, tm, spec.duplicate_penalty);

  std::vector<RunDigest> digests(static_cast<std::size_t>(spec.runs));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r = next++; r < spec.runs; r = next++) {
      OptimizerConfig config = spec.config;
      config.seed = spec.base_seed + static_cast<std::uint64_t>(r);
      RunResult result =
          run(spec.algorithm, objective.evaluate, objective.bounds, config);
      RunDigest& d = digests[static_cast<std::size_t>(r)];
      d.run = r;
      d.seed = config.seed;
      d.best_cost = result.best_cost;
      d.best_solution = objective.decode(result.best_x);
      d.evaluations = result.evaluations;
      d.history = std::move(result.history);
    }
  };

  const int threads = std::clamp(spec.threads, 1, spec.runs);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  return summarize(spec.algorithm, spec.scenario, std::move(digests));
}

BatchSummary run_batch(const BatchSpec& spec) {
  return run_batch(spec, load_instance(spec.instance_path));
}

BatchSummary summarize(Algorithm algorithm, ScenarioKind scenario,
                       std::vector<RunDigest> digests) {
  if (digests.empty()) throw std::invalid_argument("summarize: no runs");
  BatchSummary s;
  s.algorithm = algorithm;
  s.scenario = scenario;

  std::size_t best = 0;
  double total = 0.0;
  s.worst_cost = digests.front().best_cost;
  for (std::size_t r = 0; r < digests.size(); ++r) {
    const double c = digests[r].best_cost;
    total += c;
    if (c < digests[best].best_cost) best = r;
    s.worst_cost = std::max(s.worst_cost, c);
  }
  const double n = static_cast<double>(digests.size());
  s.best_cost = digests[best].best_cost;
  s.best_solution = digests[best].best_solution;
  s.mean_cost = total / n;
  if (digests.size() > 1) {
    double ss = 0.0;
    for (const auto& d : digests) ss += (d.best_cost - s.mean_cost) * (d.best_cost - s.mean_cost);
    s.std_dev = std::sqrt(ss / (n - 1.0));
  }

  const std::size_t iters = digests.front().history.size();
  s.mean_history.assign(iters, 0.0);
  for (const auto& d : digests) {
    if (d.history.size() != iters)
      throw std::invalid_argument("summarize: runs differ in iteration count");
    for (std::size_t t = 0; t < iters; ++t) s.mean_history[t] += d.history[t];
  }
  for (double& v : s.mean_history) v /= n;

  s.per_run = std::move(digests);
  return s;
}

void certify(const BatchSummary& summary, const OracleResult& oracle,
             double tolerance) {
  for (const auto& d : summary.per_run) {
    if (d.best_cost < oracle.best_cost - tolerance)
      throw std::runtime_error(fmt::format(
          "run {} (seed {}) reports cost {:.10f} below the certified optimum {:.10f}",
          d.run, d.seed, d.best_cost, oracle.best_cost));
  }
}

namespace {

std::string allocation_columns(const Solution& sol) {
  std::string out = fmt::format("{}", crane_of(sol));
  for (int a : allocation_of(sol)) out += fmt::format(",{}", a);
  return out;
}

std::string allocation_header(const Solution& sol) {
  const char* prefix =
      std::holds_alternative<HomogeneousSolution>(sol) ? "material" : "demand";
  std::string out = "crane";
  for (std::size_t n = 1; n <= allocation_of(sol).size(); ++n)
    out += fmt::format(",{}_{}", prefix, n);
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

std::string summary_csv(const BatchSummary& summary) {
  return fmt::format("method,{},best,mean,std,worst\n{},{},{:.4f},{:.4f},{:.4f},{:.4f}\n",
                     allocation_header(summary.best_solution),
                     to_string(summary.algorithm),
                     allocation_columns(summary.best_solution), summary.best_cost,
                     summary.mean_cost, summary.std_dev, summary.worst_cost);
}

std::string runs_csv(const BatchSummary& summary) {
  std::string out = fmt::format("run,seed,best_cost,evaluations,{}\n",
                                allocation_header(summary.best_solution));
  for (const auto& d : summary.per_run) {
    out += fmt::format("{},{},{:.17g},{},{}\n", d.run, d.seed, d.best_cost,
                       d.evaluations, allocation_columns(d.best_solution));
  }
  return out;
}

std::string history_csv(const BatchSummary& summary) {
  std::string out = "iteration,mean_best_cost\n";
  for (std::size_t t = 0; t < summary.mean_history.size(); ++t)
    out += fmt::format("{},{:.17g}\n", t + 1, summary.mean_history[t]);
  return out;
}

std::vector<std::filesystem::path> emit_results(
    const BatchSummary& summary, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec)
    throw std::runtime_error("cannot create " + out_dir.string() + ": " + ec.message());
  const std::vector<std::filesystem::path> paths{
      out_dir / "summary.csv", out_dir / "runs.csv", out_dir / "history.csv"};
  write_file(paths[0], summary_csv(summary));
  write_file(paths[1], runs_csv(summary));
  write_file(paths[2], history_csv(summary));
  return paths;
}

std::string oracle_json(ScenarioKind kind, const OracleResult& oracle) {
  nlohmann::ordered_json doc;
  doc["scenario"] = std::string(to_string(kind));
  doc["best_cost"] = oracle.best_cost;
  doc["crane"] = crane_of(oracle.best_solution);
  doc[std::holds_alternative<HomogeneousSolution>(oracle.best_solution)
          ? "supply_for_material"
          : "supply_for_demand"] = allocation_of(oracle.best_solution);
  doc["enumerated"] = oracle.enumerated;
  return doc.dump(2) + "\n";
}

}  // namespace cranesite
