#include "qara/optimizer.hpp"

#include <cmath>
#include <numbers>

#include "qara/errors.hpp"

namespace qara {

void OptimizerConfig::validate() const {
  if (!(stop_tolerance > 0.0)) throw InvalidArgument("stop_tolerance must be positive");
  if (stop_patience < 1) throw InvalidArgument("stop_patience must be at least 1");
  if (max_iterations < stop_patience) throw InvalidArgument("max_iterations must be at least stop_patience");
  if (!(fd_step > 0.0)) throw InvalidArgument("fd_step must be positive");
  if (!(learning_rate > 0.0)) throw InvalidArgument("learning_rate must be positive");
  if (adam_beta1 < 0.0 || adam_beta1 >= 1.0 || adam_beta2 < 0.0 || adam_beta2 >= 1.0) {
    throw InvalidArgument("Adam decay rates must lie in [0, 1)");
  }
  if (!(adam_epsilon > 0.0)) throw InvalidArgument("adam_epsilon must be positive");
}

QaoaParams init_params(std::size_t p, Rng& rng) {
  if (p == 0) throw InvalidArgument("QAOA depth must be at least 1");
  std::uniform_real_distribution<double> gamma_dist(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> beta_dist(0.0, std::numbers::pi);
  QaoaParams params;
  for (std::size_t i = 0; i < p; ++i) {
    params.gammas.push_back(gamma_dist(rng));
    params.betas.push_back(beta_dist(rng));
  }
  return params;
}

namespace {

double& param_at(QaoaParams& params, std::size_t k) {
  const std::size_t p = params.depth();
  return k < p ? params.gammas[k] : params.betas[k - p];
}

// Holds one scratch register so repeated energy evaluations do not reallocate.
class EnergyEvaluator {
 public:
  explicit EnergyEvaluator(const DiagonalEnergies& diag) : diag_(diag), scratch_(diag.num_qubits) {}

  double operator()(const QaoaParams& params) {
    run_ansatz_into(scratch_, diag_, params);
    return expectation_energy(scratch_, diag_);
  }

  std::vector<double> gradient(const QaoaParams& params, double h) {
    std::vector<double> g(2 * params.depth());
    QaoaParams probe = params;
    for (std::size_t k = 0; k < g.size(); ++k) {
      const double base = param_at(probe, k);
      param_at(probe, k) = base + h;
      const double up = (*this)(probe);
      param_at(probe, k) = base - h;
      const double down = (*this)(probe);
      param_at(probe, k) = base;
      g[k] = (up - down) / (2.0 * h);
    }
    return g;
  }

 private:
  const DiagonalEnergies& diag_;
  QuantumState scratch_;
};

}  // namespace

double qaoa_energy(const DiagonalEnergies& diag, const QaoaParams& params) {
  return EnergyEvaluator(diag)(params);
}

std::vector<double> gradient(const DiagonalEnergies& diag, const QaoaParams& params, double fd_step) {
  if (!(fd_step > 0.0)) throw InvalidArgument("fd_step must be positive");
  params.validate();
  return EnergyEvaluator(diag).gradient(params, fd_step);
}

OptimizationResult optimize(const DiagonalEnergies& diag, std::size_t p, const OptimizerConfig& config, Rng& rng) {
  config.validate();
  EnergyEvaluator energy(diag);
  QaoaParams params = init_params(p, rng);

  const std::size_t n = 2 * p;
  std::vector<double> first(n, 0.0);
  std::vector<double> second(n, 0.0);
  double beta1_power = 1.0;
  double beta2_power = 1.0;

  const double initial = energy(params);
  double previous = initial;
  int streak = 0;
  int iterations = 0;
  bool converged = false;
  while (iterations < config.max_iterations) {
    const auto g = energy.gradient(params, config.fd_step);
    beta1_power *= config.adam_beta1;
    beta2_power *= config.adam_beta2;
    for (std::size_t k = 0; k < n; ++k) {
      first[k] = config.adam_beta1 * first[k] + (1.0 - config.adam_beta1) * g[k];
      second[k] = config.adam_beta2 * second[k] + (1.0 - config.adam_beta2) * g[k] * g[k];
      const double m_hat = first[k] / (1.0 - beta1_power);
      const double v_hat = second[k] / (1.0 - beta2_power);
      param_at(params, k) -= config.learning_rate * m_hat / (std::sqrt(v_hat) + config.adam_epsilon);
    }
    ++iterations;
    const double current = energy(params);
    streak = std::abs(current - previous) < config.stop_tolerance ? streak + 1 : 0;
    previous = current;
    if (streak >= config.stop_patience) {
      converged = true;
      break;
    }
  }

  OptimizationResult result{params, run_ansatz(diag, params), initial, 0.0, iterations, converged};
  result.final_energy = expectation_energy(result.final_state, diag);
  return result;
}

OptimizationResult optimize(const IsingHamiltonian& h, std::size_t m, std::size_t p, const OptimizerConfig& config,
                            Rng& rng) {
  return optimize(precompute_diagonal(h, m), p, config, rng);
}

}  // namespace qara
