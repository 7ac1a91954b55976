#include "qara/rqaoa.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "qara/errors.hpp"
#include "qara/qara_solver.hpp"
#include "qara/statevector.hpp"

namespace qara {

void RqaoaConfig::validate() const {
  if (depth < 1) throw InvalidArgument("QAOA depth must be at least 1");
  if (var_threshold < 1) throw InvalidArgument("variable threshold must be at least 1");
  optimizer.validate();
}

ReduceStep rqaoa_reduce_step(const IsingHamiltonian& h, const RqaoaConfig& config, Rng& rng) {
  if (!has_cross_terms(h)) throw InvalidArgument("RQAOA reduce step needs at least one cross term");

  const auto vars = h.active_variables();
  std::vector<std::size_t> qubit_of(h.num_vars(), 0);
  for (std::size_t q = 0; q < vars.size(); ++q) qubit_of[vars[q]] = q;

  IsingHamiltonian compact(vars.size(), h.constant());
  for (const auto& [i, c] : h.linear()) compact.add_linear(qubit_of[i], c);
  for (const auto& [key, c] : h.quadratic()) compact.add_quadratic(qubit_of[key.first], qubit_of[key.second], c);

  const auto result = optimize(compact, vars.size(), config.depth, config.optimizer, rng);

  std::vector<IsingHamiltonian::Pair> pairs;
  std::vector<double> correlation;
  for (const auto& [key, c] : h.quadratic()) {
    pairs.push_back(key);
    correlation.push_back(expectation_zz(result.final_state, qubit_of[key.first], qubit_of[key.second]));
  }
  const std::size_t best = argmax_abs_with_ties(correlation, rng);
  const SubstitutionRecord record{pairs[best].first, pairs[best].second, correlation[best] < 0.0 ? -1 : 1};
  return {substitute_variable(h, record.eliminated, record.retained, record.sign), record, result.iterations};
}

std::vector<std::uint8_t> solve_residual(const IsingHamiltonian& h, const std::vector<std::size_t>& vars,
                                         std::size_t var_threshold) {
  const std::size_t k = vars.size();
  if (k > var_threshold) {
    if (has_cross_terms(h)) throw InvalidArgument("residual above the threshold still has cross terms");
    std::vector<std::uint8_t> bits(k, 0);
    for (std::size_t a = 0; a < k; ++a) {
      auto it = h.linear().find(vars[a]);
      bits[a] = (it != h.linear().end() && it->second > 0.0) ? 1 : 0;
    }
    return bits;
  }
  if (k >= 63) throw ResourceLimit("residual too large to enumerate");

  Assignment probe(h.num_vars());
  std::vector<std::uint8_t> best_bits(k, 0);
  double best = 0.0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
    for (std::size_t a = 0; a < k; ++a) probe.set(vars[a], (code >> (k - 1 - a)) & 1U);
    const double e = energy_of_bitstring(h, probe);
    if (code == 0 || e < best - 1e-12) {
      best = e;
      for (std::size_t a = 0; a < k; ++a) best_bits[a] = probe[vars[a]];
    }
  }
  return best_bits;
}

Assignment backtrack(const std::vector<SubstitutionRecord>& records,
                     std::vector<std::optional<std::uint8_t>> partial) {
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    if (it->eliminated >= partial.size() || it->retained >= partial.size()) {
      throw InternalInconsistency("substitution record index out of range");
    }
    const auto& retained = partial[it->retained];
    if (!retained) {
      throw InternalInconsistency("retained variable " + std::to_string(it->retained) +
                                  " is unresolved while backtracking");
    }
    partial[it->eliminated] = it->sign > 0 ? *retained : static_cast<std::uint8_t>(1 - *retained);
  }
  Assignment x(partial.size());
  for (std::size_t i = 0; i < partial.size(); ++i) {
    if (!partial[i]) throw InternalInconsistency("variable " + std::to_string(i) + " left unresolved");
    x.set(i, *partial[i] == 1);
  }
  return x;
}

RunRecord rqaoa_run(const ExactCoverInstance& instance, const RqaoaConfig& config, std::uint64_t seed,
                    std::vector<SubstitutionRecord>* records_out) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();
  Rng rng(seed);
  RunRecord record;
  std::vector<SubstitutionRecord> records;

  IsingHamiltonian h = build_hamiltonian(instance);
  while (h.active_variables().size() > config.var_threshold && has_cross_terms(h)) {
    auto step = rqaoa_reduce_step(h, config, rng);
    h = std::move(step.hamiltonian);
    records.push_back(step.record);
    record.optimizer_iterations_total += step.iterations;
    ++record.quantum_prunings;
  }

  const auto vars = h.active_variables();
  const auto bits = solve_residual(h, vars, config.var_threshold);
  std::vector<std::optional<std::uint8_t>> partial(instance.num_subsets());
  for (std::size_t a = 0; a < vars.size(); ++a) partial[vars[a]] = bits[a];
  std::vector<bool> eliminated(instance.num_subsets(), false);
  for (const auto& r : records) eliminated[r.eliminated] = true;
  // Variables whose terms all cancelled are free; fix them to 0.
  for (std::size_t i = 0; i < partial.size(); ++i) {
    if (!partial[i] && !eliminated[i]) partial[i] = 0;
  }

  record.assignment = backtrack(records, std::move(partial));
  record.objective = objective_value(instance, record.assignment);
  record.wall_time = std::chrono::steady_clock::now() - started;
  if (records_out) *records_out = std::move(records);
  return record;
}

}  // namespace qara
