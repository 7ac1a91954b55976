#include "qara/statevector.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <unordered_map>

#include "qara/errors.hpp"

namespace qara {

namespace {

constexpr std::size_t kMaxLevels = 4096;

void check_qubits(std::size_t m) {
  if (m == 0 || m > kMaxQubits) {
    throw ResourceLimit("register of " + std::to_string(m) + " qubits is outside [1, " + std::to_string(kMaxQubits) +
                        "]");
  }
}

inline double parity_sign(std::uint64_t b, std::size_t i) { return ((b >> i) & 1U) ? -1.0 : 1.0; }

}  // namespace

QuantumState::QuantumState(std::size_t num_qubits, std::uint64_t basis_index) : num_qubits_(num_qubits) {
  check_qubits(num_qubits);
  amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  if (basis_index >= amplitudes_.size()) throw InvalidArgument("basis index out of range");
  amplitudes_[basis_index] = 1.0;
}

QuantumState::QuantumState(std::size_t num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubits(num_qubits);
  if (amplitudes_.size() != (std::size_t{1} << num_qubits)) {
    throw InvalidArgument("amplitude array length must be 2^num_qubits");
  }
}

double QuantumState::norm() const {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  return std::sqrt(total);
}

QuantumState prepare_plus_state(std::size_t m) {
  check_qubits(m);
  QuantumState state(m);
  const double amp = std::pow(2.0, -0.5 * static_cast<double>(m));
  for (auto& a : state.amplitudes()) a = amp;
  return state;
}

DiagonalEnergies precompute_diagonal(const IsingHamiltonian& h, std::size_t m) {
  check_qubits(m);
  if (h.num_vars() > m) {
    for (std::size_t v : h.active_variables()) {
      if (v >= m) throw InvalidArgument("Hamiltonian index " + std::to_string(v) + " exceeds register size");
    }
  }
  const std::size_t dim = std::size_t{1} << m;
  DiagonalEnergies diag;
  diag.num_qubits = m;
  diag.energies.assign(dim, h.constant());
  auto& e = diag.energies;
  for (const auto& [i, c] : h.linear()) {
    for (std::uint64_t b = 0; b < dim; ++b) e[b] += c * parity_sign(b, i);
  }
  for (const auto& [key, c] : h.quadratic()) {
    const std::uint64_t mask = (std::uint64_t{1} << key.first) | (std::uint64_t{1} << key.second);
    for (std::uint64_t b = 0; b < dim; ++b) e[b] += (std::popcount(b & mask) & 1U) ? -c : c;
  }

  std::unordered_map<double, std::uint16_t> index;
  diag.level_of.resize(dim);
  for (std::uint64_t b = 0; b < dim; ++b) {
    auto [it, inserted] = index.try_emplace(e[b], static_cast<std::uint16_t>(diag.levels.size()));
    if (inserted) {
      if (diag.levels.size() == kMaxLevels) {
        diag.levels.clear();
        diag.level_of.clear();
        return diag;
      }
      diag.levels.push_back(e[b]);
    }
    diag.level_of[b] = it->second;
  }
  return diag;
}

void apply_phase_layer(QuantumState& state, const DiagonalEnergies& diag, double gamma) {
  auto& amps = state.amplitudes();
  if (diag.energies.size() != amps.size()) throw InvalidArgument("diagonal and state dimensions differ");
  if (!diag.levels.empty()) {
    std::vector<Amplitude> phase(diag.levels.size());
    for (std::size_t l = 0; l < phase.size(); ++l) phase[l] = std::polar(1.0, -gamma * diag.levels[l]);
    for (std::size_t b = 0; b < amps.size(); ++b) amps[b] *= phase[diag.level_of[b]];
    return;
  }
  for (std::size_t b = 0; b < amps.size(); ++b) amps[b] *= std::polar(1.0, -gamma * diag.energies[b]);
}

// exp(-i beta X) = [[cos, -i sin], [-i sin, cos]] on every qubit.
void apply_mixer_layer(QuantumState& state, double beta) {
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  auto* amps = state.amplitudes().data();
  const std::size_t dim = state.dimension();
  for (std::size_t q = 0; q < state.num_qubits(); ++q) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      for (std::size_t off = base; off < base + stride; ++off) {
        const Amplitude a0 = amps[off];
        const Amplitude a1 = amps[off + stride];
        amps[off] = {c * a0.real() + s * a1.imag(), c * a0.imag() - s * a1.real()};
        amps[off + stride] = {c * a1.real() + s * a0.imag(), c * a1.imag() - s * a0.real()};
      }
    }
  }
}

void QaoaParams::validate() const {
  if (gammas.empty() || gammas.size() != betas.size()) {
    throw InvalidArgument("QAOA parameters need equal-length gamma and beta arrays with p >= 1");
  }
}

void run_ansatz_into(QuantumState& state, const DiagonalEnergies& diag, const QaoaParams& params) {
  params.validate();
  const std::size_t m = diag.num_qubits;
  if (state.num_qubits() != m) state = QuantumState(m);
  const double amp = std::pow(2.0, -0.5 * static_cast<double>(m));
  for (auto& a : state.amplitudes()) a = amp;
  for (std::size_t layer = 0; layer < params.depth(); ++layer) {
    apply_phase_layer(state, diag, params.gammas[layer]);
    apply_mixer_layer(state, params.betas[layer]);
  }
}

QuantumState run_ansatz(const DiagonalEnergies& diag, const QaoaParams& params) {
  QuantumState state(diag.num_qubits);
  run_ansatz_into(state, diag, params);
  return state;
}

QuantumState run_ansatz(const IsingHamiltonian& h, std::size_t m, const QaoaParams& params) {
  params.validate();
  return run_ansatz(precompute_diagonal(h, m), params);
}

double expectation_energy(const QuantumState& state, const DiagonalEnergies& diag) {
  const auto& amps = state.amplitudes();
  if (diag.energies.size() != amps.size()) throw InvalidArgument("diagonal and state dimensions differ");
  double total = 0.0;
  for (std::size_t b = 0; b < amps.size(); ++b) total += std::norm(amps[b]) * diag.energies[b];
  return total;
}

double expectation_z(const QuantumState& state, std::size_t i) {
  if (i >= state.num_qubits()) throw InvalidArgument("qubit index " + std::to_string(i) + " out of range");
  const auto& amps = state.amplitudes();
  double total = 0.0;
  for (std::size_t b = 0; b < amps.size(); ++b) total += std::norm(amps[b]) * parity_sign(b, i);
  return total;
}

double expectation_zz(const QuantumState& state, std::size_t i, std::size_t t) {
  if (i == t) throw InvalidArgument("expectation_zz needs two distinct qubits");
  if (i >= state.num_qubits() || t >= state.num_qubits()) throw InvalidArgument("qubit index out of range");
  const auto& amps = state.amplitudes();
  double total = 0.0;
  for (std::size_t b = 0; b < amps.size(); ++b) total += std::norm(amps[b]) * parity_sign(b, i) * parity_sign(b, t);
  return total;
}

std::vector<double> all_expectation_z(const QuantumState& state) {
  const auto& amps = state.amplitudes();
  std::vector<double> bias(state.num_qubits(), 0.0);
  for (std::size_t b = 0; b < amps.size(); ++b) {
    const double p = std::norm(amps[b]);
    for (std::size_t i = 0; i < bias.size(); ++i) bias[i] += p * parity_sign(b, i);
  }
  return bias;
}

Assignment most_probable_bitstring(const QuantumState& state) {
  const auto& amps = state.amplitudes();
  std::size_t best = 0;
  double best_p = std::norm(amps[0]);
  for (std::size_t b = 1; b < amps.size(); ++b) {
    const double p = std::norm(amps[b]);
    if (p > best_p) {
      best_p = p;
      best = b;
    }
  }
  Assignment x(state.num_qubits());
  for (std::size_t i = 0; i < state.num_qubits(); ++i) x.set(i, (best >> i) & 1U);
  return x;
}

std::vector<std::uint64_t> sample_bitstrings(const QuantumState& state, std::size_t shots, std::mt19937_64& rng) {
  std::vector<double> probs(state.dimension());
  for (std::size_t b = 0; b < probs.size(); ++b) probs[b] = std::norm(state.amplitudes()[b]);
  std::discrete_distribution<std::uint64_t> dist(probs.begin(), probs.end());
  std::vector<std::uint64_t> out(shots);
  for (auto& s : out) s = dist(rng);
  return out;
}

double sampled_energy(const QuantumState& state, const DiagonalEnergies& diag, std::size_t shots,
                      std::mt19937_64& rng) {
  if (shots == 0) throw InvalidArgument("sampling needs at least one shot");
  double total = 0.0;
  for (std::uint64_t b : sample_bitstrings(state, shots, rng)) total += diag.energies[b];
  return total / static_cast<double>(shots);
}

}  // namespace qara
