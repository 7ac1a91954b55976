#include "qara/pruning.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "qara/errors.hpp"

namespace qara {

ReducedProblem ReducedProblem::from_instance(const ExactCoverInstance& instance) {
  ReducedProblem state;
  state.active.reserve(instance.num_subsets());
  for (SubsetIndex i = 0; i < instance.num_subsets(); ++i) {
    state.active.push_back({i, instance.subset_elements(i)});
  }
  state.uncovered.resize(instance.num_elements());
  for (ElementIndex j = 0; j < instance.num_elements(); ++j) state.uncovered[j] = j;
  state.decided.assign(instance.num_subsets(), std::nullopt);
  return state;
}

bool ReducedProblem::is_active(SubsetIndex i) const {
  return std::any_of(active.begin(), active.end(), [i](const ActiveSubset& s) { return s.index == i; });
}

std::vector<ElementSet> ReducedProblem::active_element_sets() const {
  std::vector<ElementSet> sets;
  sets.reserve(active.size());
  for (const auto& s : active) sets.push_back(s.elements);
  return sets;
}

Assignment ReducedProblem::to_assignment() const {
  Assignment x(decided.size());
  for (SubsetIndex i = 0; i < decided.size(); ++i) x.set(i, decided[i].value_or(0) == 1);
  return x;
}

bool is_completable(const ReducedProblem& state) {
  const auto sets = state.active_element_sets();
  return is_completable(sets, state.uncovered);
}

namespace {

bool overlaps(const ElementSet& a, const ElementSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) return true;
    if (*ia < *ib) ++ia; else ++ib;
  }
  return false;
}

std::vector<ActiveSubset>::const_iterator find_active(const ReducedProblem& state, SubsetIndex t) {
  auto it = std::find_if(state.active.begin(), state.active.end(),
                         [t](const ActiveSubset& s) { return s.index == t; });
  if (it == state.active.end()) throw InvalidArgument("subset " + std::to_string(t) + " is not active");
  return it;
}

}  // namespace

std::optional<SubsetIndex> find_forced_subset(const ReducedProblem& state) {
  for (ElementIndex e : state.uncovered) {
    std::optional<SubsetIndex> only;
    std::size_t count = 0;
    for (const auto& s : state.active) {
      if (std::binary_search(s.elements.begin(), s.elements.end(), e)) {
        if (++count > 1) break;
        only = s.index;
      }
    }
    if (count == 1) return only;
  }
  return std::nullopt;
}

ReducedProblem apply_selection(const ReducedProblem& state, SubsetIndex t) {
  const auto chosen = find_active(state, t);
  ReducedProblem next;
  next.decided = state.decided;
  next.decided[t] = 1;
  next.active.reserve(state.active.size());
  for (const auto& s : state.active) {
    if (s.index == t) continue;
    if (overlaps(s.elements, chosen->elements)) {
      next.decided[s.index] = 0;
    } else {
      next.active.push_back(s);
    }
  }
  std::set_difference(state.uncovered.begin(), state.uncovered.end(), chosen->elements.begin(),
                      chosen->elements.end(), std::back_inserter(next.uncovered));
  return next;
}

ReducedProblem apply_exclusion(const ReducedProblem& state, SubsetIndex t) {
  const auto excluded = find_active(state, t);
  ReducedProblem next = state;
  next.active.erase(next.active.begin() + (excluded - state.active.begin()));
  next.decided[t] = 0;
  return next;
}

PruneOutcome prune_to_fixpoint(const ReducedProblem& state) {
  PruneOutcome out{state, false, state.solved(), 0};
  while (!out.state.solved()) {
    const auto forced = find_forced_subset(out.state);
    if (!forced) break;
    out.state = apply_selection(out.state, *forced);
    out.progressed = true;
    ++out.rounds;
  }
  out.solved = out.state.solved();
  return out;
}

}  // namespace qara
