#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qara/exact_cover.hpp"

namespace qara {

/// Rollback bookkeeping for one pruning phase.
struct PhaseTrace {
  std::size_t entry_size = 0;  // active subsets when the phase began
  std::size_t cap = 0;         // rollbacks allowed in this phase
  std::size_t attempts = 0;
  std::size_t rollbacks = 0;
};

/// Outcome of one solver run on one instance.
struct RunRecord {
  Assignment assignment;
  std::uint64_t objective = 0;
  std::int64_t optimizer_iterations_total = 0;
  std::size_t quantum_prunings = 0;  // pruning phases (QARA/CRRA) or reduce steps (RQAOA)
  std::size_t rollbacks = 0;
  std::chrono::nanoseconds wall_time{0};
  std::vector<PhaseTrace> phases;
};

}  // namespace qara
