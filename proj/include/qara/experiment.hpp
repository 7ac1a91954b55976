#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qara/exact_cover.hpp"
#include "qara/metrics.hpp"
#include "qara/optimizer.hpp"
#include "qara/qara_solver.hpp"
#include "qara/rqaoa.hpp"
#include "qara/run_record.hpp"

namespace qara {

enum class Algorithm { qara, qara_no_rollback, crra, rqaoa, qaoa };

std::string_view algorithm_name(Algorithm a);
/// Accepts the CLI spellings: qara, qara-no-rollback, crra, rqaoa, qaoa.
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// Solver knobs shared by every algorithm in an experiment.
struct SolverSettings {
  std::size_t depth = 1;
  OptimizerConfig optimizer;
  bool rollback_enabled = true;  // applies to qara and crra
  std::optional<std::size_t> rollback_cap_override;
  std::size_t var_threshold = 5;

  QaraConfig qara_config() const;
  RqaoaConfig rqaoa_config() const;
};

/// One QAOA optimization on the whole instance; the answer is the most
/// probable basis state of the optimized output.
RunRecord qaoa_baseline_run(const ExactCoverInstance& instance, const SolverSettings& settings, std::uint64_t seed);

RunRecord run_algorithm(Algorithm algorithm, const ExactCoverInstance& instance, const SolverSettings& settings,
                        std::uint64_t seed);

struct ExperimentConfig {
  std::vector<std::size_t> sizes{8, 10, 12, 14, 16, 18, 20};
  std::size_t instances_per_size = 20;
  std::size_t runs_per_instance = 50;
  std::vector<Algorithm> algorithms{Algorithm::qara, Algorithm::qara_no_rollback, Algorithm::crra, Algorithm::rqaoa,
                                    Algorithm::qaoa};
  std::uint64_t master_seed = 2025;
  SolverSettings solver;
  std::size_t threads = 0;        // 0 picks hardware concurrency
  bool record_wall_time = false;  // wall_ms is written as 0 unless set, keeping CSVs reproducible

  void validate() const;
};

/// splitmix64 fold over the key; the seed of a run depends on nothing else.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> key);
std::uint64_t instance_seed(std::uint64_t master_seed, std::size_t m, std::size_t instance_id);
std::uint64_t run_seed(std::uint64_t master_seed, std::size_t m, std::size_t instance_id, Algorithm algorithm,
                       std::size_t run_id);

struct RunRow {
  std::size_t size = 0;
  std::size_t instance_id = 0;
  Algorithm algorithm = Algorithm::qara;
  std::size_t run_id = 0;
  RunRecord record;
};

struct InstanceRow {
  std::size_t size = 0;
  std::size_t instance_id = 0;
  Algorithm algorithm = Algorithm::qara;
  InstanceMetrics metrics;
};

struct SummaryRow {
  Algorithm algorithm = Algorithm::qara;
  SizeSummary summary;
};

struct ExperimentResult {
  std::vector<RunRow> runs;            // ordered by (size, instance, algorithm, run)
  std::vector<InstanceRow> instances;  // ordered by (size, instance, algorithm)
  std::vector<SummaryRow> summaries;   // ordered by (size, algorithm)

  const SizeSummary& summary(std::size_t m, Algorithm a) const;
};

/// Runs the full protocol. With a non-empty `out_dir` the CSVs and manifest
/// are written there; sizes completed before a failure are flushed first.
ExperimentResult run_experiment(const ExperimentConfig& config, const std::filesystem::path& out_dir = {});

void write_runs_csv(std::ostream& out, const std::vector<RunRow>& rows, bool record_wall_time);
void write_instances_csv(std::ostream& out, const std::vector<InstanceRow>& rows);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

/// Rebuilds instance and size aggregates from a runs CSV.
ExperimentResult metrics_from_runs_csv(std::istream& in);

}  // namespace qara
