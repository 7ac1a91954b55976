#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qara/exact_cover.hpp"
#include "qara/hamiltonian.hpp"

namespace qara {

using Amplitude = std::complex<double>;

/// Largest register the simulator will allocate (2^24 amplitudes, 256 MiB).
inline constexpr std::size_t kMaxQubits = 24;

/// Dense state over 2^m basis states. Bit i of the basis index holds x_i.
class QuantumState {
 public:
  /// Basis state |index>. Throws ResourceLimit when num_qubits is 0 or above kMaxQubits.
  explicit QuantumState(std::size_t num_qubits, std::uint64_t basis_index = 0);
  QuantumState(std::size_t num_qubits, std::vector<Amplitude> amplitudes);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::vector<Amplitude>& amplitudes() noexcept { return amplitudes_; }
  const std::vector<Amplitude>& amplitudes() const noexcept { return amplitudes_; }
  double norm() const;

 private:
  std::size_t num_qubits_;
  std::vector<Amplitude> amplitudes_;
};

/// Diagonal of H_C, entry b = energy_of_bitstring(H, bits(b)).
///
/// When the diagonal takes few distinct values (the exact-cover objective is
/// integer-valued), `levels` and `level_of` index them so a phase layer needs
/// one complex exponential per level instead of one per amplitude.
struct DiagonalEnergies {
  std::size_t num_qubits = 0;
  std::vector<double> energies;
  std::vector<double> levels;
  std::vector<std::uint16_t> level_of;
};

QuantumState prepare_plus_state(std::size_t m);

DiagonalEnergies precompute_diagonal(const IsingHamiltonian& h, std::size_t m);

void apply_phase_layer(QuantumState& state, const DiagonalEnergies& diag, double gamma);
void apply_mixer_layer(QuantumState& state, double beta);

struct QaoaParams {
  std::vector<double> gammas;
  std::vector<double> betas;

  std::size_t depth() const noexcept { return gammas.size(); }
  /// Throws InvalidArgument unless both arrays have the same length p >= 1.
  void validate() const;

  friend bool operator==(const QaoaParams&, const QaoaParams&) = default;
};

/// |+>^m followed by p (phase, mixer) layer pairs.
QuantumState run_ansatz(const DiagonalEnergies& diag, const QaoaParams& params);
QuantumState run_ansatz(const IsingHamiltonian& h, std::size_t m, const QaoaParams& params);
/// Reuses `state`'s storage; avoids an allocation per optimizer evaluation.
void run_ansatz_into(QuantumState& state, const DiagonalEnergies& diag, const QaoaParams& params);

double expectation_energy(const QuantumState& state, const DiagonalEnergies& diag);
double expectation_z(const QuantumState& state, std::size_t i);
double expectation_zz(const QuantumState& state, std::size_t i, std::size_t t);
/// Biases <Z_i> for every qubit in one pass over the amplitudes.
std::vector<double> all_expectation_z(const QuantumState& state);

/// Basis state with the largest probability; ties go to the lowest index.
Assignment most_probable_bitstring(const QuantumState& state);

/// Draws `shots` measurement outcomes in the computational basis.
std::vector<std::uint64_t> sample_bitstrings(const QuantumState& state, std::size_t shots, std::mt19937_64& rng);
/// Shot-noise estimate of <H_C>. Demonstration only; the solvers use exact expectations.
double sampled_energy(const QuantumState& state, const DiagonalEnergies& diag, std::size_t shots,
                      std::mt19937_64& rng);

}  // namespace qara
