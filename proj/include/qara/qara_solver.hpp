#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "qara/exact_cover.hpp"
#include "qara/optimizer.hpp"
#include "qara/reduced_problem.hpp"
#include "qara/run_record.hpp"

namespace qara {

struct QaraConfig {
  std::size_t depth = 1;
  OptimizerConfig optimizer;
  bool rollback_enabled = true;
  /// Replaces the per-phase ceil(log2 |S|) rollback cap when set.
  std::optional<std::size_t> rollback_cap_override;

  void validate() const;
};

/// ceil(log2 n) for n >= 1, and 0 for n <= 1.
std::size_t log2_ceil(std::size_t n);

/// Biases closer than this in absolute value count as tied.
inline constexpr double kBiasTieTolerance = 1e-9;

/// Position of the largest |value|; near-ties are broken uniformly with `rng`.
std::size_t argmax_abs_with_ties(std::span<const double> values, Rng& rng);

struct AttemptResult {
  ReducedProblem candidate;
  std::int64_t iterations = 0;
};

struct PhaseResult {
  ReducedProblem state;
  std::int64_t iterations = 0;
  PhaseTrace trace;
};

using PruneAttempt = std::function<AttemptResult(const ReducedProblem&)>;

/// One QAOA run on the reduced problem, then fix the subset with the
/// strongest Z bias: select it (and exclude its d_i conflicts) when
/// M < 0, exclude it otherwise.
AttemptResult quantum_prune_attempt(const ReducedProblem& state, const QaraConfig& config, Rng& rng);

/// CRRA's replacement for the quantum step: select a uniformly random active subset.
AttemptResult random_prune_attempt(const ReducedProblem& state, Rng& rng);

/// Repeats `attempt` from the phase-entry state until the candidate passes
/// the completeness check or the rollback cap is spent; the last candidate
/// is then accepted regardless. With rollback disabled the first candidate
/// is always accepted.
PhaseResult prune_phase(const ReducedProblem& state, const QaraConfig& config, const PruneAttempt& attempt);

PhaseResult quantum_prune_phase(const ReducedProblem& state, const QaraConfig& config, Rng& rng);

/// Alternates classical pruning to fixpoint with quantum pruning phases
/// until no subsets or no uncovered elements remain.
RunRecord qara_run(const ExactCoverInstance& instance, const QaraConfig& config, std::uint64_t seed);

/// Same skeleton as qara_run with random selection in place of QAOA.
RunRecord crra_run(const ExactCoverInstance& instance, const QaraConfig& config, std::uint64_t seed);

}  // namespace qara
