#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qara/exact_cover.hpp"
#include "qara/hamiltonian.hpp"
#include "qara/optimizer.hpp"
#include "qara/run_record.hpp"

namespace qara {

/// Spin relation s_eliminated = sign * s_retained recorded by one reduce step.
struct SubstitutionRecord {
  std::size_t eliminated;
  std::size_t retained;
  int sign;

  friend bool operator==(const SubstitutionRecord&, const SubstitutionRecord&) = default;
};

struct RqaoaConfig {
  std::size_t depth = 1;
  OptimizerConfig optimizer;
  /// Stop reducing once at most this many variables remain.
  std::size_t var_threshold = 5;

  void validate() const;
};

struct ReduceStep {
  IsingHamiltonian hamiltonian;
  SubstitutionRecord record;
  std::int64_t iterations = 0;
};

/// QAOA on the live variables of `h`, then eliminate the lower index of the
/// cross-term pair with the strongest |<Z_i Z_j>| in favour of the higher one.
ReduceStep rqaoa_reduce_step(const IsingHamiltonian& h, const RqaoaConfig& config, Rng& rng);

/// Bits for `vars` only. Up to `var_threshold` variables are enumerated
/// exhaustively (ties go to the lexicographically smallest pattern, vars[0]
/// most significant). Larger residuals must be free of cross terms and are
/// solved per variable by s_i = -sgn(h_i), with h_i = 0 giving x_i = 0.
std::vector<std::uint8_t> solve_residual(const IsingHamiltonian& h, const std::vector<std::size_t>& vars,
                                         std::size_t var_threshold);

/// Resolves eliminated variables last record first. `partial` must fix every
/// variable that no record eliminates. Throws InternalInconsistency when a
/// retained variable is still unknown at its turn.
Assignment backtrack(const std::vector<SubstitutionRecord>& records,
                     std::vector<std::optional<std::uint8_t>> partial);

/// Full recursive run. `phases` stays empty; quantum_prunings counts reduce steps.
RunRecord rqaoa_run(const ExactCoverInstance& instance, const RqaoaConfig& config, std::uint64_t seed,
                    std::vector<SubstitutionRecord>* records_out = nullptr);

}  // namespace qara
