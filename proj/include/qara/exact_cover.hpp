#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qara {

using ElementId = std::int64_t;
/// Position of an element in the instance's universe ordering.
using ElementIndex = std::size_t;
/// Position of a subset in the instance's subset ordering.
using SubsetIndex = std::size_t;

/// Sorted, duplicate-free list of element positions.
using ElementSet = std::vector<ElementIndex>;

/// Binary decision vector, one bit per subset. Bit i set means subset i is selected.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t size) : bits_(size, 0) {}
  explicit Assignment(std::vector<std::uint8_t> bits);

  std::size_t size() const noexcept { return bits_.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, bool value) { bits_.at(i) = value ? 1 : 0; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Universe U plus the ordered subset collection S. Immutable once built.
///
/// Construction validates that element ids are distinct, every subset is
/// non-empty, every member lies in U and no two subsets are equal as sets.
/// Orderings given at construction define every index used downstream.
class ExactCoverInstance {
 public:
  ExactCoverInstance(std::vector<ElementId> universe,
                     std::vector<std::vector<ElementId>> subsets);

  std::size_t num_elements() const noexcept { return universe_.size(); }
  std::size_t num_subsets() const noexcept { return subsets_.size(); }

  const std::vector<ElementId>& universe() const noexcept { return universe_; }
  /// Subset members as element ids, in the order given at construction.
  const std::vector<std::vector<ElementId>>& subsets() const noexcept { return subsets_; }
  /// Subset members as sorted element positions.
  const ElementSet& subset_elements(SubsetIndex i) const { return subset_positions_.at(i); }
  /// Subsets containing element j, ascending.
  const std::vector<SubsetIndex>& covering_subsets(ElementIndex j) const { return coverers_.at(j); }

  bool contains(SubsetIndex i, ElementIndex j) const;

  friend bool operator==(const ExactCoverInstance& a, const ExactCoverInstance& b) {
    return a.universe_ == b.universe_ && a.subsets_ == b.subsets_;
  }

 private:
  std::vector<ElementId> universe_;
  std::vector<std::vector<ElementId>> subsets_;
  std::vector<ElementSet> subset_positions_;
  std::vector<std::vector<SubsetIndex>> coverers_;
};

/// Entry j counts how many selected subsets contain element j.
std::vector<std::size_t> coverage_counts(const ExactCoverInstance& instance, const Assignment& x);

/// Sum over elements of (coverage - 1)^2. Zero exactly when x is an exact cover.
std::uint64_t objective_value(const ExactCoverInstance& instance, const Assignment& x);

/// True iff every uncovered element lies in at least one active subset.
/// A true result does not mean an exact cover of the remainder exists.
bool is_completable(std::span<const ElementSet> active_subsets, std::span<const ElementIndex> uncovered);

/// Random instance with m subsets over m elements, a planted exact cover, and
/// every element occurring in at least two subsets. Pure function of (m, seed).
ExactCoverInstance generate_instance(std::size_t m, std::uint64_t seed);

/// The planted blocks of the instance generate_instance(m, seed) returns, as
/// subset indices. Exposed for tests.
std::vector<SubsetIndex> planted_solution(std::size_t m, std::uint64_t seed);

/// Exhaustive backtracking: cover the lowest uncovered element by each
/// candidate subset in turn. Returns some zero-objective assignment, or
/// nullopt when none exists.
std::optional<Assignment> exact_solve(const ExactCoverInstance& instance);

}  // namespace qara
