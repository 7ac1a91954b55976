#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qara/exact_cover.hpp"

namespace qara {

struct ActiveSubset {
  SubsetIndex index;     // position in the original instance
  ElementSet elements;   // members still uncovered

  friend bool operator==(const ActiveSubset&, const ActiveSubset&) = default;
};

/// Partially decided problem P' = (S', U').
///
/// Every original subset is either active or decided, never both. No element
/// of `uncovered` belongs to a subset decided 1.
struct ReducedProblem {
  std::vector<ActiveSubset> active;                 // ascending by index
  ElementSet uncovered;                             // ascending element positions
  std::vector<std::optional<std::uint8_t>> decided; // one slot per original subset

  static ReducedProblem from_instance(const ExactCoverInstance& instance);

  std::size_t num_subsets() const noexcept { return decided.size(); }
  bool is_active(SubsetIndex i) const;
  /// Nothing left to decide or nothing left to cover.
  bool solved() const noexcept { return active.empty() || uncovered.empty(); }
  std::vector<ElementSet> active_element_sets() const;
  /// Decided bits, with undecided subsets set to 0.
  Assignment to_assignment() const;

  friend bool operator==(const ReducedProblem&, const ReducedProblem&) = default;
};

/// Completeness check on a reduced problem: can every uncovered element still be covered?
bool is_completable(const ReducedProblem& state);

}  // namespace qara
