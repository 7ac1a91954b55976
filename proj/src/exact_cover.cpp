#include "qara/exact_cover.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>

#include "qara/errors.hpp"

namespace qara {

Assignment::Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) {
    if (b > 1) throw InvalidArgument("assignment bits must be 0 or 1");
  }
}

ExactCoverInstance::ExactCoverInstance(std::vector<ElementId> universe,
                                       std::vector<std::vector<ElementId>> subsets)
    : universe_(std::move(universe)), subsets_(std::move(subsets)) {
  std::unordered_map<ElementId, ElementIndex> position;
  position.reserve(universe_.size());
  for (ElementIndex j = 0; j < universe_.size(); ++j) {
    if (!position.emplace(universe_[j], j).second) {
      throw InvalidArgument("duplicate element id " + std::to_string(universe_[j]) + " in universe");
    }
  }

  subset_positions_.reserve(subsets_.size());
  coverers_.assign(universe_.size(), {});
  std::set<ElementSet> seen;
  for (SubsetIndex i = 0; i < subsets_.size(); ++i) {
    if (subsets_[i].empty()) throw InvalidArgument("subset " + std::to_string(i) + " is empty");
    ElementSet members;
    members.reserve(subsets_[i].size());
    for (ElementId e : subsets_[i]) {
      auto it = position.find(e);
      if (it == position.end()) {
        throw InvalidArgument("subset " + std::to_string(i) + " contains element " + std::to_string(e) +
                              " outside the universe");
      }
      members.push_back(it->second);
    }
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
      throw InvalidArgument("subset " + std::to_string(i) + " repeats an element");
    }
    if (!seen.insert(members).second) {
      throw InvalidArgument("subset " + std::to_string(i) + " duplicates an earlier subset");
    }
    for (ElementIndex j : members) coverers_[j].push_back(i);
    subset_positions_.push_back(std::move(members));
  }
}

bool ExactCoverInstance::contains(SubsetIndex i, ElementIndex j) const {
  const auto& members = subset_positions_.at(i);
  return std::binary_search(members.begin(), members.end(), j);
}

std::vector<std::size_t> coverage_counts(const ExactCoverInstance& instance, const Assignment& x) {
  if (x.size() != instance.num_subsets()) {
    throw InvalidArgument("assignment length " + std::to_string(x.size()) + " does not match subset count " +
                          std::to_string(instance.num_subsets()));
  }
  std::vector<std::size_t> counts(instance.num_elements(), 0);
  for (SubsetIndex i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    for (ElementIndex j : instance.subset_elements(i)) ++counts[j];
  }
  return counts;
}

std::uint64_t objective_value(const ExactCoverInstance& instance, const Assignment& x) {
  std::uint64_t total = 0;
  for (std::size_t c : coverage_counts(instance, x)) {
    const auto d = static_cast<std::int64_t>(c) - 1;
    total += static_cast<std::uint64_t>(d * d);
  }
  return total;
}

bool is_completable(std::span<const ElementSet> active_subsets, std::span<const ElementIndex> uncovered) {
  for (ElementIndex e : uncovered) {
    const bool coverable = std::any_of(active_subsets.begin(), active_subsets.end(), [e](const ElementSet& s) {
      return std::find(s.begin(), s.end(), e) != s.end();
    });
    if (!coverable) return false;
  }
  return true;
}

namespace {

constexpr int kMaxGenerationAttempts = 1000;

struct GeneratedInstance {
  std::vector<std::vector<ElementId>> subsets;
  std::vector<SubsetIndex> planted;
};

// Planted partition into k blocks plus m-k random distractors, then a repair
// pass so every element occurs at least twice. Repairs only touch distractors,
// so the planted blocks stay an exact cover.
GeneratedInstance generate_raw(std::size_t m, std::uint64_t seed) {
  if (m < 4) throw InvalidArgument("generate_instance requires m >= 4");
  const std::size_t n = m;
  const std::size_t max_distractor = (n + 2) / 3;
  std::mt19937_64 rng(seed);

  for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, m / 2)(rng);

    std::vector<ElementIndex> order(n);
    for (std::size_t j = 0; j < n; ++j) order[j] = j;
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<std::size_t> cut_candidates(n - 1);
    for (std::size_t c = 0; c + 1 < n; ++c) cut_candidates[c] = c + 1;
    std::shuffle(cut_candidates.begin(), cut_candidates.end(), rng);
    std::vector<std::size_t> cuts(cut_candidates.begin(), cut_candidates.begin() + static_cast<std::ptrdiff_t>(k - 1));
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(n);

    std::vector<std::vector<ElementIndex>> blocks;
    std::size_t start = 0;
    for (std::size_t cut : cuts) {
      blocks.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(start),
                          order.begin() + static_cast<std::ptrdiff_t>(cut));
      start = cut;
    }

    std::vector<std::vector<ElementIndex>> distractors;
    std::vector<ElementIndex> pool(n);
    for (std::size_t d = 0; d < m - k; ++d) {
      const std::size_t size = std::uniform_int_distribution<std::size_t>(1, max_distractor)(rng);
      for (std::size_t j = 0; j < n; ++j) pool[j] = j;
      std::shuffle(pool.begin(), pool.end(), rng);
      distractors.emplace_back(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    }

    std::vector<std::size_t> occurrences(n, 1);  // each element sits in exactly one block
    for (const auto& d : distractors)
      for (ElementIndex j : d) ++occurrences[j];
    for (ElementIndex j = 0; j < n; ++j) {
      while (occurrences[j] < 2) {
        std::vector<std::size_t> open;
        for (std::size_t d = 0; d < distractors.size(); ++d) {
          if (std::find(distractors[d].begin(), distractors[d].end(), j) == distractors[d].end()) open.push_back(d);
        }
        if (open.empty()) break;
        const auto pick = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
        distractors[pick].push_back(j);
        ++occurrences[j];
      }
    }

    std::vector<std::pair<std::vector<ElementIndex>, bool>> all;
    for (auto& b : blocks) all.emplace_back(std::move(b), true);
    for (auto& d : distractors) all.emplace_back(std::move(d), false);
    std::shuffle(all.begin(), all.end(), rng);

    std::set<std::vector<ElementIndex>> seen;
    bool duplicate = false;
    bool under_covered = false;
    for (auto& [members, is_planted] : all) {
      std::sort(members.begin(), members.end());
      duplicate = duplicate || !seen.insert(members).second;
    }
    for (std::size_t c : occurrences) under_covered = under_covered || c < 2;
    if (duplicate || under_covered) continue;

    GeneratedInstance out;
    for (SubsetIndex i = 0; i < all.size(); ++i) {
      std::vector<ElementId> ids;
      for (ElementIndex j : all[i].first) ids.push_back(static_cast<ElementId>(j + 1));
      out.subsets.push_back(std::move(ids));
      if (all[i].second) out.planted.push_back(i);
    }
    return out;
  }
  throw GenerationError("could not generate a duplicate-free instance for m=" + std::to_string(m) + " after " +
                        std::to_string(kMaxGenerationAttempts) + " attempts");
}

bool cover_from(const ExactCoverInstance& instance, std::vector<bool>& covered, std::vector<std::uint8_t>& bits) {
  const auto first = std::find(covered.begin(), covered.end(), false);
  if (first == covered.end()) return true;
  const auto element = static_cast<ElementIndex>(first - covered.begin());
  for (SubsetIndex s : instance.covering_subsets(element)) {
    const auto& members = instance.subset_elements(s);
    if (std::any_of(members.begin(), members.end(), [&](ElementIndex j) { return covered[j]; })) continue;
    for (ElementIndex j : members) covered[j] = true;
    bits[s] = 1;
    if (cover_from(instance, covered, bits)) return true;
    bits[s] = 0;
    for (ElementIndex j : members) covered[j] = false;
  }
  return false;
}

}  // namespace

ExactCoverInstance generate_instance(std::size_t m, std::uint64_t seed) {
  auto raw = generate_raw(m, seed);
  std::vector<ElementId> universe(m);
  for (std::size_t j = 0; j < m; ++j) universe[j] = static_cast<ElementId>(j + 1);
  return ExactCoverInstance(std::move(universe), std::move(raw.subsets));
}

std::vector<SubsetIndex> planted_solution(std::size_t m, std::uint64_t seed) {
  return generate_raw(m, seed).planted;
}

std::optional<Assignment> exact_solve(const ExactCoverInstance& instance) {
  std::vector<bool> covered(instance.num_elements(), false);
  std::vector<std::uint8_t> bits(instance.num_subsets(), 0);
  if (!cover_from(instance, covered, bits)) return std::nullopt;
  return Assignment(std::move(bits));
}

}  // namespace qara
