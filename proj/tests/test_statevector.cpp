#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dense_oracle.hpp"
#include "qara/errors.hpp"
#include "qara/statevector.hpp"
#include "test_support.hpp"

using namespace qara;

namespace {

double overlap(const QuantumState& s, const oracle::Vec& v) {
  std::complex<double> total = 0.0;
  for (std::size_t b = 0; b < s.dimension(); ++b) total += std::conj(v[static_cast<Eigen::Index>(b)]) * s.amplitudes()[b];
  return std::abs(total);
}

QaoaParams random_params(std::size_t p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-2 * std::numbers::pi, 2 * std::numbers::pi);
  QaoaParams params;
  for (std::size_t l = 0; l < p; ++l) {
    params.gammas.push_back(angle(rng));
    params.betas.push_back(angle(rng));
  }
  return params;
}

}  // namespace

TEST_CASE("plus state and register limits") {
  const auto s = prepare_plus_state(3);
  CHECK(s.dimension() == 8);
  for (const auto& a : s.amplitudes()) CHECK(std::abs(a - 1 / std::sqrt(8.0)) < 1e-15);
  CHECK(s.norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(QuantumState(0), ResourceLimit);
  CHECK_THROWS_AS(QuantumState(25), ResourceLimit);
  CHECK_THROWS_AS(prepare_plus_state(25), ResourceLimit);
  CHECK_THROWS_AS(QuantumState(2, 4), InvalidArgument);
  CHECK_THROWS_AS(QuantumState(2, std::vector<Amplitude>(3)), InvalidArgument);
}

TEST_CASE("diagonal of the worked example is the objective table") {
  const auto inst = test::worked_example();
  const auto diag = precompute_diagonal(build_hamiltonian(inst), 4);
  REQUIRE(diag.energies.size() == 16);
  for (std::uint64_t b = 0; b < 16; ++b) {
    CHECK(diag.energies[b] == static_cast<double>(test::objective_oracle(inst, test::bits_of(b, 4))));
    CHECK(diag.levels[diag.level_of[b]] == diag.energies[b]);
  }
  CHECK(diag.energies[0b0101] == 0.0);
}

TEST_CASE("phase and mixer layers on small states") {
  SUBCASE("phase multiplies each amplitude by exp(-i gamma E)") {
    const auto h = build_hamiltonian(test::worked_example());
    const auto diag = precompute_diagonal(h, 4);
    auto s = prepare_plus_state(4);
    apply_phase_layer(s, diag, 0.3);
    for (std::size_t b = 0; b < 16; ++b) {
      const auto expected = std::polar(0.25, -0.3 * diag.energies[b]);
      CHECK(std::abs(s.amplitudes()[b] - expected) < 1e-14);
    }
  }
  SUBCASE("phase on a diagonal with many distinct levels") {
    std::mt19937_64 rng(1);
    IsingHamiltonian h(3);
    std::uniform_real_distribution<double> c(-1, 1);
    for (std::size_t i = 0; i < 3; ++i) h.add_linear(i, c(rng));
    h.add_quadratic(0, 2, c(rng));
    const auto diag = precompute_diagonal(h, 3);
    auto s = prepare_plus_state(3);
    apply_phase_layer(s, diag, 1.1);
    for (std::size_t b = 0; b < 8; ++b) {
      const double e = energy_of_bitstring(h, test::bits_of(b, 3));
      CHECK(std::abs(s.amplitudes()[b] - std::polar(1 / std::sqrt(8.0), -1.1 * e)) < 1e-14);
    }
  }
  SUBCASE("mixer on |0>") {
    QuantumState s(1);
    apply_mixer_layer(s, 0.4);
    CHECK(std::abs(s.amplitudes()[0] - std::complex<double>(std::cos(0.4), 0)) < 1e-15);
    CHECK(std::abs(s.amplitudes()[1] - std::complex<double>(0, -std::sin(0.4))) < 1e-15);
  }
  SUBCASE("beta = pi is a global phase") {
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    std::vector<Amplitude> amps(8);
    for (auto& a : amps) a = {g(rng), g(rng)};
    QuantumState s(3, amps);
    apply_mixer_layer(s, std::numbers::pi);
    for (std::size_t b = 0; b < 8; ++b) CHECK(std::abs(s.amplitudes()[b] + amps[b]) < 1e-14);
  }
  SUBCASE("plus state is invariant under the mixer up to phase") {
    auto s = prepare_plus_state(4);
    apply_mixer_layer(s, 0.7);
    const auto phase = std::polar(1.0, -4 * 0.7);
    for (const auto& a : s.amplitudes()) CHECK(std::abs(a - 0.25 * phase) < 1e-14);
  }
}

TEST_CASE("expectations") {
  SUBCASE("basis states") {
    const QuantumState s(3, 0b101);
    CHECK(expectation_z(s, 0) == -1.0);
    CHECK(expectation_z(s, 1) == 1.0);
    CHECK(expectation_zz(s, 0, 2) == 1.0);
    CHECK(expectation_zz(s, 0, 1) == -1.0);
    CHECK(all_expectation_z(s) == std::vector<double>{-1.0, 1.0, -1.0});
  }
  SUBCASE("GHZ") {
    std::vector<Amplitude> amps(8);
    amps[0] = amps[7] = 1 / std::sqrt(2.0);
    const QuantumState s(3, amps);
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(expectation_z(s, i)) < 1e-15);
    CHECK(expectation_zz(s, 0, 1) == doctest::Approx(1.0));
    CHECK(expectation_zz(s, 2, 1) == doctest::Approx(1.0));
  }
  SUBCASE("two qubits with weights 0.7 and 0.3") {
    std::vector<Amplitude> amps(4);
    amps[0] = std::sqrt(0.7);
    amps[3] = std::sqrt(0.3);
    const QuantumState s(2, amps);
    CHECK(expectation_z(s, 0) == doctest::Approx(0.4));
    CHECK(expectation_z(s, 1) == doctest::Approx(0.4));
    CHECK(expectation_zz(s, 0, 1) == doctest::Approx(1.0));
    CHECK(most_probable_bitstring(s) == Assignment({0, 0}));
  }
  SUBCASE("most probable bitstring") {
    std::vector<Amplitude> amps(4);
    amps[1] = 0.8;  // x0 = 1, x1 = 0
    amps[2] = 0.6;
    CHECK(most_probable_bitstring(QuantumState(2, amps)) == Assignment({1, 0}));
    std::vector<Amplitude> tie(4);
    tie[2] = tie[3] = 1 / std::sqrt(2.0);
    CHECK(most_probable_bitstring(QuantumState(2, tie)) == Assignment({0, 1}));
  }
  SUBCASE("argument checks") {
    const QuantumState s(2);
    CHECK_THROWS_AS(expectation_zz(s, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(expectation_z(s, 2), InvalidArgument);
  }
}

TEST_CASE("property: layered simulator matches dense exponentials") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 1 + trial % 4;
    const auto h = test::random_ising(m, rng);
    const auto params = random_params(1 + trial % 2, rng);
    const auto state = run_ansatz(h, m, params);
    const auto ref = oracle::ansatz(h, m, params.gammas, params.betas, false);
    CHECK(overlap(state, ref) >= 1 - 1e-10);
    CHECK(expectation_energy(state, precompute_diagonal(h, m)) ==
          doctest::Approx((ref.adjoint() * oracle::hamiltonian_matrix(h, m) * ref)(0, 0).real()));
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(expectation_z(state, i) == doctest::Approx((ref.adjoint() * oracle::pauli_z(i, m) * ref)(0, 0).real()));
    }
  }
}

TEST_CASE("property: both oracle exponentials agree, and the simulator matches up to 7 qubits") {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t m = 2 + trial % 6;
    const auto h = test::random_ising(m, rng);
    const auto params = random_params(1 + trial % 3, rng);
    const auto eig = oracle::ansatz(h, m, params.gammas, params.betas, true);
    if (m <= 4) {
      const auto full = oracle::ansatz(h, m, params.gammas, params.betas, false);
      CHECK(std::abs(eig.dot(full)) >= 1 - 1e-10);
    }
    CHECK(overlap(run_ansatz(h, m, params), eig) >= 1 - 1e-10);
  }
}

TEST_CASE("property: periodicity in gamma and beta") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = test::random_instance(3 + trial % 5, 3 + trial % 4, rng);
    const auto m = inst.num_subsets();
    // Every objective value is an integer, so shifting gamma by 2 pi changes nothing.
    const auto diag = precompute_diagonal(build_hamiltonian(inst), m);
    auto params = random_params(2, rng);
    const auto base = run_ansatz(diag, params);
    auto shifted = params;
    shifted.gammas[1] += 2 * std::numbers::pi;
    shifted.betas[0] += std::numbers::pi;
    const auto moved = run_ansatz(diag, shifted);
    std::complex<double> inner = 0;
    for (std::size_t b = 0; b < base.dimension(); ++b) inner += std::conj(base.amplitudes()[b]) * moved.amplitudes()[b];
    CHECK(std::abs(inner) >= 1 - 1e-10);
    CHECK(expectation_energy(moved, diag) == doctest::Approx(expectation_energy(base, diag)));
  }
}

TEST_CASE("norm stays at 1 across many layers") {
  std::mt19937_64 rng(20);
  const auto h = test::random_ising(6, rng);
  const auto diag = precompute_diagonal(h, 6);
  auto s = prepare_plus_state(6);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  for (int layer = 0; layer < 100; ++layer) {
    apply_phase_layer(s, diag, angle(rng));
    apply_mixer_layer(s, angle(rng));
  }
  CHECK(std::abs(s.norm() - 1.0) < 1e-9);
}

TEST_CASE("parameter validation") {
  const auto diag = precompute_diagonal(build_hamiltonian(test::worked_example()), 4);
  CHECK_THROWS_AS(run_ansatz(diag, QaoaParams{}), InvalidArgument);
  CHECK_THROWS_AS(run_ansatz(diag, QaoaParams{{0.1, 0.2}, {0.3}}), InvalidArgument);
  CHECK_THROWS_AS(precompute_diagonal(build_hamiltonian(test::worked_example()), 3), InvalidArgument);
}

TEST_CASE("sampling follows the Born rule") {
  std::vector<Amplitude> amps(4);
  amps[0] = std::sqrt(0.7);
  amps[3] = std::sqrt(0.3);
  const QuantumState s(2, amps);
  std::mt19937_64 rng(4);
  const auto shots = sample_bitstrings(s, 20000, rng);
  const auto ones = std::count(shots.begin(), shots.end(), 3u);
  CHECK(std::count(shots.begin(), shots.end(), 0u) + ones == 20000);
  CHECK(static_cast<double>(ones) / 20000.0 == doctest::Approx(0.3).epsilon(0.05));

  IsingHamiltonian h(2);
  h.add_linear(0, 1.0);
  const auto diag = precompute_diagonal(h, 2);
  CHECK(sampled_energy(s, diag, 20000, rng) == doctest::Approx(expectation_energy(s, diag)).epsilon(0.1));
}
