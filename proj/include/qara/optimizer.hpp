#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "qara/hamiltonian.hpp"
#include "qara/statevector.hpp"

namespace qara {

using Rng = std::mt19937_64;

struct OptimizerConfig {
  double learning_rate = 0.05;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_epsilon = 1e-8;
  /// Convergence: |F_k - F_{k-1}| below this for `stop_patience` consecutive iterations.
  double stop_tolerance = 0.01;
  int stop_patience = 3;
  int max_iterations = 500;
  double fd_step = 1e-4;

  void validate() const;
};

struct OptimizationResult {
  QaoaParams params;
  QuantumState final_state;
  double initial_energy = 0.0;
  double final_energy = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// gamma_i ~ U[0, 2pi), beta_i ~ U[0, pi).
QaoaParams init_params(std::size_t p, Rng& rng);

/// F(gamma, beta) = <psi|H_C|psi>.
double qaoa_energy(const DiagonalEnergies& diag, const QaoaParams& params);

/// Central differences of F, ordered (gamma_1..gamma_p, beta_1..beta_p).
std::vector<double> gradient(const DiagonalEnergies& diag, const QaoaParams& params, double fd_step);

/// Adam from a random start until the energy change stalls or the iteration cap hits.
OptimizationResult optimize(const DiagonalEnergies& diag, std::size_t p, const OptimizerConfig& config, Rng& rng);
OptimizationResult optimize(const IsingHamiltonian& h, std::size_t m, std::size_t p, const OptimizerConfig& config,
                            Rng& rng);

}  // namespace qara
