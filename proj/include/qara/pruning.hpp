#pragma once

#include <cstddef>
#include <optional>

#include "qara/reduced_problem.hpp"

namespace qara {

struct PruneOutcome {
  ReducedProblem state;
  bool progressed = false;  // at least one variable decided
  bool solved = false;      // S' or U' empty afterwards
  std::size_t rounds = 0;   // forced selections applied
};

/// Scans uncovered elements in instance order and returns the subset covering
/// the first element that exactly one active subset contains.
std::optional<SubsetIndex> find_forced_subset(const ReducedProblem& state);

/// Fixes subset t to 1, fixes every active subset overlapping it to 0, and
/// removes t's elements from the uncovered set. Throws InvalidArgument if t is
/// not active.
ReducedProblem apply_selection(const ReducedProblem& state, SubsetIndex t);

/// Fixes subset t to 0 and drops it from the active list.
ReducedProblem apply_exclusion(const ReducedProblem& state, SubsetIndex t);

/// One forced selection per round, rescanning after each, until nothing is
/// forced or the problem is solved.
PruneOutcome prune_to_fixpoint(const ReducedProblem& state);

}  // namespace qara
