#include "qara/qara_solver.hpp"

#include <bit>
#include <chrono>
#include <cmath>

#include "qara/errors.hpp"
#include "qara/hamiltonian.hpp"
#include "qara/pruning.hpp"
#include "qara/statevector.hpp"

namespace qara {

void QaraConfig::validate() const {
  if (depth < 1) throw InvalidArgument("QAOA depth must be at least 1");
  optimizer.validate();
}

std::size_t log2_ceil(std::size_t n) { return n <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n - 1)); }

std::size_t argmax_abs_with_ties(std::span<const double> values, Rng& rng) {
  if (values.empty()) throw InvalidArgument("argmax over an empty list");
  double best = 0.0;
  for (double v : values) best = std::max(best, std::abs(v));
  std::vector<std::size_t> tied;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::abs(values[i]) >= best - kBiasTieTolerance) tied.push_back(i);
  }
  if (tied.size() == 1) return tied.front();
  return tied[std::uniform_int_distribution<std::size_t>(0, tied.size() - 1)(rng)];
}

AttemptResult quantum_prune_attempt(const ReducedProblem& state, const QaraConfig& config, Rng& rng) {
  if (state.active.empty() || state.uncovered.empty()) {
    throw InvalidArgument("quantum pruning needs at least one active subset and one uncovered element");
  }
  const auto h = build_hamiltonian(state);
  const auto result = optimize(h, state.active.size(), config.depth, config.optimizer, rng);
  const auto bias = all_expectation_z(result.final_state);
  const std::size_t q = argmax_abs_with_ties(bias, rng);
  const SubsetIndex chosen = state.active[q].index;
  // M = 0 falls to exclusion, the single-variable reduction.
  auto candidate = bias[q] < 0.0 ? apply_selection(state, chosen) : apply_exclusion(state, chosen);
  return {std::move(candidate), result.iterations};
}

AttemptResult random_prune_attempt(const ReducedProblem& state, Rng& rng) {
  if (state.active.empty()) throw InvalidArgument("random pruning needs at least one active subset");
  const auto q = std::uniform_int_distribution<std::size_t>(0, state.active.size() - 1)(rng);
  return {apply_selection(state, state.active[q].index), 0};
}

PhaseResult prune_phase(const ReducedProblem& state, const QaraConfig& config, const PruneAttempt& attempt) {
  PhaseResult out{state, 0, {}};
  out.trace.entry_size = state.active.size();
  out.trace.cap = config.rollback_enabled ? config.rollback_cap_override.value_or(log2_ceil(state.active.size())) : 0;
  while (true) {
    auto [candidate, iterations] = attempt(state);
    ++out.trace.attempts;
    out.iterations += iterations;
    const bool accept = !config.rollback_enabled || is_completable(candidate) || out.trace.attempts > out.trace.cap;
    if (accept) {
      out.state = std::move(candidate);
      return out;
    }
    ++out.trace.rollbacks;
  }
}

PhaseResult quantum_prune_phase(const ReducedProblem& state, const QaraConfig& config, Rng& rng) {
  return prune_phase(state, config, [&](const ReducedProblem& s) { return quantum_prune_attempt(s, config, rng); });
}

namespace {

RunRecord recursive_run(const ExactCoverInstance& instance, const QaraConfig& config,
                        const std::function<PhaseResult(const ReducedProblem&)>& phase) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();
  RunRecord record;
  ReducedProblem state = ReducedProblem::from_instance(instance);
  while (true) {
    state = prune_to_fixpoint(state).state;
    if (state.solved()) break;
    auto result = phase(state);
    state = std::move(result.state);
    record.optimizer_iterations_total += result.iterations;
    record.rollbacks += result.trace.rollbacks;
    record.phases.push_back(result.trace);
    ++record.quantum_prunings;
  }
  record.assignment = state.to_assignment();
  record.objective = objective_value(instance, record.assignment);
  record.wall_time = std::chrono::steady_clock::now() - started;
  return record;
}

}  // namespace

RunRecord qara_run(const ExactCoverInstance& instance, const QaraConfig& config, std::uint64_t seed) {
  Rng rng(seed);
  return recursive_run(instance, config,
                       [&](const ReducedProblem& s) { return quantum_prune_phase(s, config, rng); });
}

RunRecord crra_run(const ExactCoverInstance& instance, const QaraConfig& config, std::uint64_t seed) {
  Rng rng(seed);
  return recursive_run(instance, config, [&](const ReducedProblem& s) {
    return prune_phase(s, config, [&](const ReducedProblem& st) { return random_prune_attempt(st, rng); });
  });
}

}  // namespace qara
