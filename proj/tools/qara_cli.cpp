// Command-line front end: generate instances, solve one, run the benchmark
// protocol, or recompute metrics from a runs CSV.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qara/errors.hpp"
#include "qara/exact_cover.hpp"
#include "qara/experiment.hpp"
#include "qara/instance_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitResource = 2;

struct SolverFlags {
  std::size_t depth = 1;
  int max_iters = 500;
  double lr = 0.05;
  bool no_rollback = false;
  std::size_t theta_min = 5;

  void attach(CLI::App* cmd) {
    cmd->add_option("--depth", depth, "QAOA depth p")->check(CLI::PositiveNumber);
    cmd->add_option("--max-iters", max_iters, "Adam iteration cap per QAOA run");
    cmd->add_option("--lr", lr, "Adam learning rate");
    cmd->add_flag("--no-rollback", no_rollback, "Disable local verification and rollback in qara and crra");
    cmd->add_option("--theta-min", theta_min, "RQAOA residual variable threshold");
  }

  qara::SolverSettings settings() const {
    qara::SolverSettings s;
    s.depth = depth;
    s.optimizer.max_iterations = max_iters;
    s.optimizer.learning_rate = lr;
    s.rollback_enabled = !no_rollback;
    s.var_threshold = theta_min;
    return s;
  }
};

std::vector<qara::Algorithm> parse_algorithms(const std::vector<std::string>& names) {
  std::vector<qara::Algorithm> out;
  for (const auto& n : names) {
    auto a = qara::parse_algorithm(n);
    if (!a) throw qara::InvalidArgument("unknown algorithm '" + n + "'");
    out.push_back(*a);
  }
  return out;
}

nlohmann::json record_to_json(const qara::RunRecord& r) {
  nlohmann::json phases = nlohmann::json::array();
  for (const auto& p : r.phases) {
    phases.push_back({{"entry_size", p.entry_size}, {"cap", p.cap}, {"attempts", p.attempts}, {"rollbacks", p.rollbacks}});
  }
  std::vector<int> bits(r.assignment.bits().begin(), r.assignment.bits().end());
  return {
      {"assignment", bits},
      {"objective", r.objective},
      {"optimizer_iterations_total", r.optimizer_iterations_total},
      {"quantum_prunings", r.quantum_prunings},
      {"rollbacks", r.rollbacks},
      {"wall_ms", std::chrono::duration<double, std::milli>(r.wall_time).count()},
      {"phases", phases},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cover solvers: QARA, CRRA, RQAOA and plain QAOA on a state-vector simulator"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write seeded random instances as JSON files");
  std::vector<std::size_t> gen_sizes{8};
  std::size_t gen_count = 1;
  std::uint64_t gen_seed = 2025;
  std::string gen_dir = ".";
  gen->add_option("--sizes", gen_sizes, "Subset counts m (m = n)")->delimiter(',');
  gen->add_option("--instances", gen_count, "Instances per size");
  gen->add_option("--seed", gen_seed, "Master seed");
  gen->add_option("--out-dir", gen_dir, "Output directory");

  // solve
  auto* solve = app.add_subcommand("solve", "Run one algorithm on one instance file and print the run as JSON");
  std::string solve_algorithm = "qara";
  std::string solve_instance;
  std::uint64_t solve_seed = 0;
  SolverFlags solve_flags;
  solve->add_option("--algorithm", solve_algorithm, "qara | qara-no-rollback | crra | rqaoa | qaoa");
  solve->add_option("--instance", solve_instance, "Instance JSON file")->required();
  solve->add_option("--seed", solve_seed, "Run seed");
  solve_flags.attach(solve);

  // bench
  auto* bench = app.add_subcommand("bench", "Run the benchmark protocol and write CSV results");
  qara::ExperimentConfig bench_config;
  std::vector<std::string> bench_algorithms{"qara", "qara-no-rollback", "crra", "rqaoa", "qaoa"};
  std::string bench_dir = "results";
  SolverFlags bench_flags;
  bench->add_option("--sizes", bench_config.sizes, "Subset counts m")->delimiter(',');
  bench->add_option("--instances", bench_config.instances_per_size, "Instances per size (K)");
  bench->add_option("--runs", bench_config.runs_per_instance, "Runs per instance (R)");
  bench->add_option("--algorithms", bench_algorithms, "Comma-separated algorithm list")->delimiter(',');
  bench->add_option("--seed", bench_config.master_seed, "Master seed");
  bench->add_option("--out-dir", bench_dir, "Output directory");
  bench->add_option("--threads", bench_config.threads, "Worker threads (0 = all cores)");
  bench->add_flag("--wall-time", bench_config.record_wall_time, "Record per-run wall time in runs.csv");
  bench_flags.attach(bench);

  // metrics
  auto* metrics = app.add_subcommand("metrics", "Recompute instance and size summaries from a runs CSV");
  std::string metrics_runs;
  std::string metrics_dir;
  metrics->add_option("--runs", metrics_runs, "runs.csv produced by bench")->required();
  metrics->add_option("--out-dir", metrics_dir, "Write instances.csv and summary.csv here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*gen) {
      std::filesystem::create_directories(gen_dir);
      for (std::size_t m : gen_sizes) {
        for (std::size_t k = 0; k < gen_count; ++k) {
          const auto path = std::filesystem::path(gen_dir) / ("m" + std::to_string(m) + "_i" + std::to_string(k) + ".json");
          qara::save_instance(qara::generate_instance(m, qara::instance_seed(gen_seed, m, k)), path);
          std::cout << path.string() << '\n';
        }
      }
    } else if (*solve) {
      const auto algorithm = parse_algorithms({solve_algorithm}).front();
      const auto settings = solve_flags.settings();
      settings.qara_config().validate();
      settings.rqaoa_config().validate();
      const auto instance = qara::load_instance(solve_instance);
      auto out = record_to_json(qara::run_algorithm(algorithm, instance, settings, solve_seed));
      out["algorithm"] = solve_algorithm;
      out["seed"] = solve_seed;
      std::cout << out.dump(2) << '\n';
    } else if (*bench) {
      bench_config.algorithms = parse_algorithms(bench_algorithms);
      bench_config.solver = bench_flags.settings();
      const auto result = qara::run_experiment(bench_config, bench_dir);
      qara::write_summary_csv(std::cout, result.summaries);
    } else if (*metrics) {
      std::ifstream in(metrics_runs);
      if (!in) throw qara::InvalidArgument("cannot open " + metrics_runs);
      const auto result = qara::metrics_from_runs_csv(in);
      if (metrics_dir.empty()) {
        qara::write_summary_csv(std::cout, result.summaries);
      } else {
        std::filesystem::create_directories(metrics_dir);
        std::ofstream instances(std::filesystem::path(metrics_dir) / "instances.csv");
        qara::write_instances_csv(instances, result.instances);
        std::ofstream summary(std::filesystem::path(metrics_dir) / "summary.csv");
        qara::write_summary_csv(summary, result.summaries);
      }
    }
  } catch (const qara::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const qara::InvalidArgument& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}
