#include <doctest.h>

#include <array>
#include <random>

#include "qara/errors.hpp"
#include "qara/pruning.hpp"
#include "qara/qara_solver.hpp"
#include "test_support.hpp"

using namespace qara;

namespace {

std::size_t max_coverage(const ExactCoverInstance& inst, const Assignment& x) {
  const auto c = coverage_counts(inst, x);
  return *std::max_element(c.begin(), c.end());
}

// Pearson statistic against a uniform distribution over counts.size() bins.
double chi_square_uniform(const std::vector<int>& counts) {
  double total = 0;
  for (int c : counts) total += c;
  const double expected = total / static_cast<double>(counts.size());
  double stat = 0;
  for (int c : counts) stat += (c - expected) * (c - expected) / expected;
  return stat;
}

}  // namespace

TEST_CASE("log2_ceil") {
  CHECK(log2_ceil(0) == 0);
  CHECK(log2_ceil(1) == 0);
  CHECK(log2_ceil(2) == 1);
  CHECK(log2_ceil(3) == 2);
  CHECK(log2_ceil(4) == 2);
  CHECK(log2_ceil(8) == 3);
  CHECK(log2_ceil(9) == 4);
  CHECK(log2_ceil(20) == 5);
}

TEST_CASE("worked example is solved by classical pruning alone") {
  const auto inst = test::worked_example();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto r = qara_run(inst, QaraConfig{}, seed);
    CHECK(r.assignment == Assignment({1, 0, 1, 0}));
    CHECK(r.objective == 0);
    CHECK(r.quantum_prunings == 0);
    CHECK(r.optimizer_iterations_total == 0);
    CHECK(r.rollbacks == 0);
    CHECK(r.phases.empty());
  }
}

TEST_CASE("argmax_abs_with_ties") {
  Rng rng(1);
  const std::vector<double> clear{0.1, -0.9, 0.3};
  CHECK(argmax_abs_with_ties(clear, rng) == 1);
  const std::vector<double> apart{0.5, -0.5 - 1e-8};
  for (int i = 0; i < 50; ++i) CHECK(argmax_abs_with_ties(apart, rng) == 1);
  CHECK_THROWS_AS(argmax_abs_with_ties(std::vector<double>{}, rng), InvalidArgument);

  const std::vector<double> tied{0.5, -0.5 + 1e-10, 0.2, 0.5};
  std::vector<int> counts(3, 0);
  for (int i = 0; i < 3000; ++i) {
    const auto k = argmax_abs_with_ties(tied, rng);
    REQUIRE(k != 2);
    ++counts[k == 3 ? 2 : k];
  }
  // chi-square, 2 degrees of freedom, 1% level
  CHECK(chi_square_uniform(counts) < 9.21);
}

TEST_CASE("single active subset: the attempt decides it") {
  const ExactCoverInstance inst({1, 2}, {{1}, {1, 2}});
  auto state = apply_exclusion(ReducedProblem::from_instance(inst), 0);
  int selected = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const auto a = quantum_prune_attempt(state, QaraConfig{}, rng);
    CHECK(a.candidate.active.empty());
    CHECK(a.candidate.decided[1].has_value());
    CHECK(a.iterations >= 3);
    if (a.candidate.decided[1] == std::optional<std::uint8_t>(1)) ++selected;
  }
  // H = 1 + Z; minimizing pushes <Z> negative, which selects
  CHECK(selected >= 15);
}

TEST_CASE("two symmetric subsets: either may be picked") {
  // both subsets cover the only uncovered element: H = 1/2 + 1/2 Z0 Z1
  const ExactCoverInstance pair({1, 2}, {{1}, {1, 2}});
  auto state = ReducedProblem::from_instance(pair);
  state.uncovered = {0};
  state.active[1].elements = {0};
  std::array<int, 2> picked{0, 0};
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    const auto a = quantum_prune_attempt(state, QaraConfig{}, rng);
    // selecting one excludes the other; excluding one leaves the other active
    const bool selected = a.candidate.active.empty();
    const SubsetIndex chosen = selected ? (a.candidate.decided[0] == std::optional<std::uint8_t>(1) ? 0 : 1)
                                        : (a.candidate.is_active(0) ? 1 : 0);
    picked[chosen]++;
  }
  CHECK(picked[0] > 0);
  CHECK(picked[1] > 0);
}

TEST_CASE("symmetric triangle: tied biases are broken uniformly") {
  // {1,2}, {2,3}, {1,3} are related by relabelling, so all three biases agree
  const ExactCoverInstance inst({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}});
  const auto state = ReducedProblem::from_instance(inst);
  std::vector<int> counts(3, 0);
  Rng rng(77);
  for (int draw = 0; draw < 1000; ++draw) {
    const auto a = quantum_prune_attempt(state, QaraConfig{}, rng);
    for (SubsetIndex i = 0; i < 3; ++i) {
      if (!a.candidate.is_active(i) && a.candidate.active.size() == 2) ++counts[i];
    }
    if (a.candidate.active.empty()) {
      for (SubsetIndex i = 0; i < 3; ++i)
        if (a.candidate.decided[i] == std::optional<std::uint8_t>(1)) ++counts[i];
    }
  }
  CHECK(counts[0] + counts[1] + counts[2] == 1000);
  CHECK(chi_square_uniform(counts) < 9.21);
}

TEST_CASE("prune_phase rollback accounting") {
  // every attempt yields an incompletable candidate
  const auto inst = generate_instance(8, 1);
  const auto state = ReducedProblem::from_instance(inst);
  int calls = 0;
  const PruneAttempt dead_end = [&](const ReducedProblem& s) {
    ++calls;
    auto c = s;
    for (const auto& a : s.active) c.decided[a.index] = 0;
    c.active.clear();
    return AttemptResult{c, 7};
  };

  QaraConfig cfg;
  auto r = prune_phase(state, cfg, dead_end);
  CHECK(r.trace.entry_size == 8);
  CHECK(r.trace.cap == 3);
  CHECK(r.trace.attempts == 4);
  CHECK(r.trace.rollbacks == 3);
  CHECK(r.iterations == 28);
  CHECK(calls == 4);
  CHECK(r.state.active.empty());

  cfg.rollback_enabled = false;
  calls = 0;
  r = prune_phase(state, cfg, dead_end);
  CHECK(r.trace.attempts == 1);
  CHECK(r.trace.rollbacks == 0);
  CHECK(r.trace.cap == 0);
  CHECK(calls == 1);

  cfg.rollback_enabled = true;
  cfg.rollback_cap_override = 0;
  r = prune_phase(state, cfg, dead_end);
  CHECK(r.trace.attempts == 1);

  // a completable candidate is accepted immediately
  const PruneAttempt fine = [](const ReducedProblem& s) { return AttemptResult{s, 0}; };
  r = prune_phase(state, QaraConfig{}, fine);
  CHECK(r.trace.attempts == 1);
  CHECK(r.trace.rollbacks == 0);
}

TEST_CASE("CRRA on a two-element instance always finds the cover") {
  const ExactCoverInstance inst({1, 2}, {{1, 2}, {1}, {2}});
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto r = crra_run(inst, QaraConfig{}, seed);
    CHECK(r.objective == 0);
    CHECK(r.quantum_prunings == 1);
    CHECK(r.optimizer_iterations_total == 0);
    CHECK(max_coverage(inst, r.assignment) == 1);
  }
  Rng rng(3);
  const auto a = random_prune_attempt(ReducedProblem::from_instance(inst), rng);
  CHECK(a.iterations == 0);
  CHECK(std::count(a.candidate.decided.begin(), a.candidate.decided.end(), std::optional<std::uint8_t>(1)) == 1);
}

TEST_CASE("property: QARA and CRRA never double-cover and respect the rollback cap") {
  for (std::size_t m : {6, 8}) {
    for (std::uint64_t k = 0; k < 6; ++k) {
      const auto inst = generate_instance(m, 1000 + k);
      for (bool rollback : {true, false}) {
        QaraConfig cfg;
        cfg.rollback_enabled = rollback;
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
          for (const auto& r : {qara_run(inst, cfg, seed), crra_run(inst, cfg, seed)}) {
            CHECK(max_coverage(inst, r.assignment) <= 1);
            CHECK(r.objective == objective_value(inst, r.assignment));
            CHECK(r.quantum_prunings == r.phases.size());
            std::size_t total = 0;
            for (const auto& ph : r.phases) {
              CHECK(ph.rollbacks <= log2_ceil(ph.entry_size));
              CHECK(ph.attempts == ph.rollbacks + 1);
              total += ph.rollbacks;
            }
            CHECK(total == r.rollbacks);
            if (!rollback) CHECK(r.rollbacks == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("runs are reproducible for a fixed seed") {
  const auto inst = generate_instance(8, 4);
  const auto a = qara_run(inst, QaraConfig{}, 12);
  const auto b = qara_run(inst, QaraConfig{}, 12);
  CHECK(a.assignment == b.assignment);
  CHECK(a.optimizer_iterations_total == b.optimizer_iterations_total);
  CHECK(a.rollbacks == b.rollbacks);
}
