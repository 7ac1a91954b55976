#include "qara/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qara/errors.hpp"
#include "qara/hamiltonian.hpp"
#include "qara/statevector.hpp"

namespace qara {

namespace {

struct AlgorithmName {
  Algorithm algorithm;
  std::string_view name;
};

constexpr AlgorithmName kAlgorithmNames[] = {
    {Algorithm::qara, "qara"},   {Algorithm::qara_no_rollback, "qara-no-rollback"},
    {Algorithm::crra, "crra"},   {Algorithm::rqaoa, "rqaoa"},
    {Algorithm::qaoa, "qaoa"},
};

bool uses_simulator(Algorithm a) { return a != Algorithm::crra; }

}  // namespace

std::string_view algorithm_name(Algorithm a) {
  for (const auto& entry : kAlgorithmNames) {
    if (entry.algorithm == a) return entry.name;
  }
  throw InvalidArgument("unknown algorithm");
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& entry : kAlgorithmNames) {
    if (entry.name == name) return entry.algorithm;
  }
  return std::nullopt;
}

QaraConfig SolverSettings::qara_config() const {
  return QaraConfig{depth, optimizer, rollback_enabled, rollback_cap_override};
}

RqaoaConfig SolverSettings::rqaoa_config() const { return RqaoaConfig{depth, optimizer, var_threshold}; }

RunRecord qaoa_baseline_run(const ExactCoverInstance& instance, const SolverSettings& settings, std::uint64_t seed) {
  if (settings.depth < 1) throw InvalidArgument("QAOA depth must be at least 1");
  const auto started = std::chrono::steady_clock::now();
  Rng rng(seed);
  const auto result =
      optimize(build_hamiltonian(instance), instance.num_subsets(), settings.depth, settings.optimizer, rng);
  RunRecord record;
  record.assignment = most_probable_bitstring(result.final_state);
  record.objective = objective_value(instance, record.assignment);
  record.optimizer_iterations_total = result.iterations;
  record.wall_time = std::chrono::steady_clock::now() - started;
  return record;
}

RunRecord run_algorithm(Algorithm algorithm, const ExactCoverInstance& instance, const SolverSettings& settings,
                        std::uint64_t seed) {
  switch (algorithm) {
    case Algorithm::qara:
      return qara_run(instance, settings.qara_config(), seed);
    case Algorithm::qara_no_rollback: {
      auto config = settings.qara_config();
      config.rollback_enabled = false;
      return qara_run(instance, config, seed);
    }
    case Algorithm::crra:
      return crra_run(instance, settings.qara_config(), seed);
    case Algorithm::rqaoa:
      return rqaoa_run(instance, settings.rqaoa_config(), seed);
    case Algorithm::qaoa:
      return qaoa_baseline_run(instance, settings, seed);
  }
  throw InvalidArgument("unknown algorithm");
}

void ExperimentConfig::validate() const {
  if (sizes.empty()) throw InvalidArgument("at least one problem size is required");
  if (instances_per_size < 1) throw InvalidArgument("instances per size must be at least 1");
  if (runs_per_instance < 1) throw InvalidArgument("runs per instance must be at least 1");
  if (algorithms.empty()) throw InvalidArgument("at least one algorithm is required");
  for (std::size_t m : sizes) {
    if (m < 4) throw InvalidArgument("problem sizes must be at least 4");
  }
  solver.qara_config().validate();
  solver.rqaoa_config().validate();
}

std::uint64_t derive_seed(std::initializer_list<std::uint64_t> key) {
  auto splitmix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t h = 0x5171a5eedULL;
  for (std::uint64_t v : key) h = splitmix(h ^ splitmix(v));
  return h;
}

std::uint64_t instance_seed(std::uint64_t master_seed, std::size_t m, std::size_t instance_id) {
  return derive_seed({master_seed, 0x1c5ULL, m, instance_id});
}

std::uint64_t run_seed(std::uint64_t master_seed, std::size_t m, std::size_t instance_id, Algorithm algorithm,
                       std::size_t run_id) {
  return derive_seed({master_seed, 0x2a1ULL, m, instance_id, static_cast<std::uint64_t>(algorithm), run_id});
}

const SizeSummary& ExperimentResult::summary(std::size_t m, Algorithm a) const {
  for (const auto& row : summaries) {
    if (row.summary.m == m && row.algorithm == a) return row.summary;
  }
  throw InvalidArgument("no summary for size " + std::to_string(m) + " and algorithm " +
                        std::string(algorithm_name(a)));
}

namespace {

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// Groups consecutive runs of one (size, instance, algorithm) into instance
// rows, then instance rows into (size, algorithm) summaries. Input order is kept.
void aggregate(ExperimentResult& result) {
  result.instances.clear();
  result.summaries.clear();
  std::size_t begin = 0;
  while (begin < result.runs.size()) {
    const auto& head = result.runs[begin];
    std::size_t end = begin;
    std::vector<std::uint64_t> objectives;
    std::vector<std::int64_t> iterations;
    while (end < result.runs.size() && result.runs[end].size == head.size &&
           result.runs[end].instance_id == head.instance_id && result.runs[end].algorithm == head.algorithm) {
      objectives.push_back(result.runs[end].record.objective);
      iterations.push_back(result.runs[end].record.optimizer_iterations_total);
      ++end;
    }
    result.instances.push_back({head.size, head.instance_id, head.algorithm,
                                compute_instance_metrics(objectives, iterations)});
    begin = end;
  }

  std::vector<std::pair<std::size_t, Algorithm>> order;
  std::map<std::pair<std::size_t, Algorithm>, std::vector<InstanceMetrics>> groups;
  for (const auto& row : result.instances) {
    const auto key = std::make_pair(row.size, row.algorithm);
    if (!groups.contains(key)) order.push_back(key);
    groups[key].push_back(row.metrics);
  }
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& key : order) {
    result.summaries.push_back({key.second, compute_size_summary(groups[key], key.first)});
  }
}

nlohmann::json manifest(const ExperimentConfig& config, const std::vector<std::pair<std::size_t, std::size_t>>& done) {
  nlohmann::json algos = nlohmann::json::array();
  for (auto a : config.algorithms) algos.push_back(std::string(algorithm_name(a)));
  const auto& opt = config.solver.optimizer;
  nlohmann::json seeds = nlohmann::json::array();
  for (const auto& [m, k] : done) {
    seeds.push_back({{"size", m}, {"instance_id", k}, {"seed", instance_seed(config.master_seed, m, k)}});
  }
  return {
      {"sizes", config.sizes},
      {"instances_per_size", config.instances_per_size},
      {"runs_per_instance", config.runs_per_instance},
      {"algorithms", algos},
      {"master_seed", config.master_seed},
      {"depth", config.solver.depth},
      {"rollback_enabled", config.solver.rollback_enabled},
      {"var_threshold", config.solver.var_threshold},
      {"optimizer",
       {{"learning_rate", opt.learning_rate},
        {"adam_beta1", opt.adam_beta1},
        {"adam_beta2", opt.adam_beta2},
        {"adam_epsilon", opt.adam_epsilon},
        {"stop_tolerance", opt.stop_tolerance},
        {"stop_patience", opt.stop_patience},
        {"max_iterations", opt.max_iterations},
        {"fd_step", opt.fd_step}}},
      {"instance_seeds", seeds},
      {"files", {"runs.csv", "instances.csv", "summary.csv"}},
  };
}

void write_outputs(const ExperimentResult& result, const ExperimentConfig& config,
                   const std::vector<std::pair<std::size_t, std::size_t>>& done, const std::filesystem::path& dir) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  std::ofstream runs(dir / "runs.csv");
  write_runs_csv(runs, result.runs, config.record_wall_time);
  std::ofstream instances(dir / "instances.csv");
  write_instances_csv(instances, result.instances);
  std::ofstream summary(dir / "summary.csv");
  write_summary_csv(summary, result.summaries);
  std::ofstream(dir / "manifest.json") << manifest(config, done).dump(2) << '\n';
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config, const std::filesystem::path& out_dir) {
  config.validate();
  ExperimentResult result;
  std::vector<std::pair<std::size_t, std::size_t>> done;
  const std::size_t workers =
      config.threads ? config.threads : std::max<std::size_t>(1, std::thread::hardware_concurrency());

  for (std::size_t m : config.sizes) {
    const bool needs_simulator =
        std::any_of(config.algorithms.begin(), config.algorithms.end(), uses_simulator);
    if (needs_simulator && m > kMaxQubits) {
      aggregate(result);
      write_outputs(result, config, done, out_dir);
      throw ResourceLimit("size " + std::to_string(m) + " exceeds the " + std::to_string(kMaxQubits) +
                          "-qubit simulator cap");
    }

    std::vector<ExactCoverInstance> instances;
    for (std::size_t k = 0; k < config.instances_per_size; ++k) {
      instances.push_back(generate_instance(m, instance_seed(config.master_seed, m, k)));
    }

    std::vector<RunRow> rows;
    for (std::size_t k = 0; k < config.instances_per_size; ++k) {
      for (Algorithm a : config.algorithms) {
        for (std::size_t r = 0; r < config.runs_per_instance; ++r) rows.push_back({m, k, a, r, {}});
      }
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
      for (std::size_t i = next++; i < rows.size(); i = next++) {
        try {
          auto& row = rows[i];
          row.record = run_algorithm(row.algorithm, instances[row.instance_id], config.solver,
                                     run_seed(config.master_seed, m, row.instance_id, row.algorithm, row.run_id));
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = rows.size();
        }
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) {
      aggregate(result);
      write_outputs(result, config, done, out_dir);
      std::rethrow_exception(failure);
    }

    result.runs.insert(result.runs.end(), std::make_move_iterator(rows.begin()), std::make_move_iterator(rows.end()));
    for (std::size_t k = 0; k < config.instances_per_size; ++k) done.emplace_back(m, k);
  }

  aggregate(result);
  write_outputs(result, config, done, out_dir);
  return result;
}

void write_runs_csv(std::ostream& out, const std::vector<RunRow>& rows, bool record_wall_time) {
  out << "size,instance_id,algorithm,run_id,objective,iterations,quantum_prunings,rollbacks,wall_ms\n";
  for (const auto& row : rows) {
    const double wall_ms =
        record_wall_time ? std::chrono::duration<double, std::milli>(row.record.wall_time).count() : 0.0;
    out << row.size << ',' << row.instance_id << ',' << algorithm_name(row.algorithm) << ',' << row.run_id << ','
        << row.record.objective << ',' << row.record.optimizer_iterations_total << ','
        << row.record.quantum_prunings << ',' << row.record.rollbacks << ',' << fixed(wall_ms) << '\n';
  }
}

void write_instances_csv(std::ostream& out, const std::vector<InstanceRow>& rows) {
  out << "size,instance_id,algorithm,runs,c_opt,c_avg,p_success,t_itr\n";
  for (const auto& row : rows) {
    out << row.size << ',' << row.instance_id << ',' << algorithm_name(row.algorithm) << ','
        << row.metrics.run_count << ',' << row.metrics.c_opt << ',' << fixed(row.metrics.c_avg) << ','
        << fixed(row.metrics.p_success) << ',' << fixed(row.metrics.t_itr) << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "size,algorithm,instances,mean_c_opt,mean_c_avg,mean_p_success,mean_t_itr,s_ratio\n";
  for (const auto& row : rows) {
    const auto& s = row.summary;
    out << s.m << ',' << algorithm_name(row.algorithm) << ',' << s.instance_count << ',' << fixed(s.mean_c_opt)
        << ',' << fixed(s.mean_c_avg) << ',' << fixed(s.mean_p_success) << ',' << fixed(s.mean_t_itr) << ','
        << fixed(s.s_ratio) << '\n';
  }
}

ExperimentResult metrics_from_runs_csv(std::istream& in) {
  static constexpr std::string_view kHeader =
      "size,instance_id,algorithm,run_id,objective,iterations,quantum_prunings,rollbacks,wall_ms";
  std::string line;
  if (!std::getline(in, line) || line != kHeader) throw InvalidArgument("runs CSV has an unexpected header");

  ExperimentResult result;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    if (fields.size() != 9) throw InvalidArgument("runs CSV line " + std::to_string(line_no) + " needs 9 fields");
    const auto algorithm = parse_algorithm(fields[2]);
    if (!algorithm) throw InvalidArgument("unknown algorithm '" + fields[2] + "' on line " + std::to_string(line_no));
    RunRow row;
    try {
      row.size = std::stoull(fields[0]);
      row.instance_id = std::stoull(fields[1]);
      row.algorithm = *algorithm;
      row.run_id = std::stoull(fields[3]);
      row.record.objective = std::stoull(fields[4]);
      row.record.optimizer_iterations_total = std::stoll(fields[5]);
      row.record.quantum_prunings = std::stoull(fields[6]);
      row.record.rollbacks = std::stoull(fields[7]);
      row.record.wall_time = std::chrono::nanoseconds(static_cast<std::int64_t>(std::stod(fields[8]) * 1e6));
    } catch (const std::logic_error&) {
      throw InvalidArgument("malformed number on runs CSV line " + std::to_string(line_no));
    }
    result.runs.push_back(std::move(row));
  }
  aggregate(result);
  return result;
}

}  // namespace qara
