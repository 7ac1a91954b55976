#pragma once

// Dense-matrix reference simulator. Builds every operator from Kronecker
// products of 2x2 Paulis (qubit m-1 is the leftmost factor) and evolves the
// state with full matrix exponentials. Shares no code with the library
// simulator; only the Hamiltonian coefficients are read.

#include <Eigen/Dense>
#include <complex>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

#include "qara/hamiltonian.hpp"

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using cd = std::complex<double>;

inline Mat single_qubit(const Mat& op, std::size_t target, std::size_t m) {
  Mat out = Mat::Identity(1, 1);
  for (std::size_t q = m; q-- > 0;) {
    const Mat factor = q == target ? op : Mat::Identity(2, 2);
    out = Eigen::kroneckerProduct(out, factor).eval();
  }
  return out;
}

inline Mat pauli_z(std::size_t target, std::size_t m) {
  Mat z(2, 2);
  z << 1, 0, 0, -1;
  return single_qubit(z, target, m);
}

inline Mat pauli_x(std::size_t target, std::size_t m) {
  Mat x(2, 2);
  x << 0, 1, 1, 0;
  return single_qubit(x, target, m);
}

inline Mat hamiltonian_matrix(const qara::IsingHamiltonian& h, std::size_t m) {
  const Eigen::Index dim = Eigen::Index{1} << m;
  Mat out = h.constant() * Mat::Identity(dim, dim);
  for (const auto& [i, c] : h.linear()) out += c * pauli_z(i, m);
  for (const auto& [k, c] : h.quadratic()) out += c * pauli_z(k.first, m) * pauli_z(k.second, m);
  return out;
}

inline Mat mixer_matrix(std::size_t m) {
  const Eigen::Index dim = Eigen::Index{1} << m;
  Mat out = Mat::Zero(dim, dim);
  for (std::size_t i = 0; i < m; ++i) out += pauli_x(i, m);
  return out;
}

inline Vec plus_state(std::size_t m) {
  const Eigen::Index dim = Eigen::Index{1} << m;
  return Vec::Constant(dim, cd(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
}

/// exp(-i t A) for Hermitian A through the generic matrix exponential.
inline Mat expm(const Mat& a, double t) { return (cd(0.0, -t) * a).exp(); }

/// exp(-i t A) for Hermitian A through its eigendecomposition.
inline Mat expm_eig(const Mat& a, double t) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(a);
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  Vec phases(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) phases[k] = std::polar(1.0, -t * lambda[k]);
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

/// Reference QAOA: |+>^m, then exp(-i gamma H_C) followed by exp(-i beta B) per layer.
inline Vec ansatz(const qara::IsingHamiltonian& h, std::size_t m, const std::vector<double>& gammas,
                  const std::vector<double>& betas, bool use_eigen_decomposition) {
  const Mat hc = hamiltonian_matrix(h, m);
  const Mat b = mixer_matrix(m);
  Vec psi = plus_state(m);
  for (std::size_t l = 0; l < gammas.size(); ++l) {
    if (use_eigen_decomposition) {
      psi = expm_eig(hc, gammas[l]) * psi;
      psi = expm_eig(b, betas[l]) * psi;
    } else {
      psi = expm(hc, gammas[l]) * psi;
      psi = expm(b, betas[l]) * psi;
    }
  }
  return psi;
}

/// Operators for one Hamiltonian, decomposed once so repeated energy
/// evaluations only cost matrix-vector products.
struct Model {
  Mat hc;
  Eigen::SelfAdjointEigenSolver<Mat> hc_eig;
  Eigen::SelfAdjointEigenSolver<Mat> mixer_eig;
  Vec start;

  Model(const qara::IsingHamiltonian& h, std::size_t m)
      : hc(hamiltonian_matrix(h, m)), hc_eig(hc), mixer_eig(mixer_matrix(m)), start(plus_state(m)) {}

  static Vec evolve(const Eigen::SelfAdjointEigenSolver<Mat>& eig, double t, const Vec& v) {
    Vec coeffs = eig.eigenvectors().adjoint() * v;
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) coeffs[k] *= std::polar(1.0, -t * eig.eigenvalues()[k]);
    return eig.eigenvectors() * coeffs;
  }

  double energy(const std::vector<double>& gammas, const std::vector<double>& betas) const {
    Vec psi = start;
    for (std::size_t l = 0; l < gammas.size(); ++l) {
      psi = evolve(hc_eig, gammas[l], psi);
      psi = evolve(mixer_eig, betas[l], psi);
    }
    return (psi.adjoint() * hc * psi)(0, 0).real();
  }
};

inline double energy(const qara::IsingHamiltonian& h, std::size_t m, const std::vector<double>& gammas,
                     const std::vector<double>& betas) {
  return Model(h, m).energy(gammas, betas);
}

/// Five-point stencil derivative of the reference energy, ordered (gammas, betas).
inline std::vector<double> gradient(const qara::IsingHamiltonian& h, std::size_t m, std::vector<double> gammas,
                                    std::vector<double> betas, double step) {
  const Model model(h, m);
  const std::size_t p = gammas.size();
  std::vector<double> grad(2 * p);
  for (std::size_t k = 0; k < 2 * p; ++k) {
    double& v = k < p ? gammas[k] : betas[k - p];
    const double origin = v;
    auto at = [&](double offset) {
      v = origin + offset;
      return model.energy(gammas, betas);
    };
    const double fp2 = at(2 * step), fp1 = at(step), fm1 = at(-step), fm2 = at(-2 * step);
    v = origin;
    grad[k] = (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * step);
  }
  return grad;
}

}  // namespace oracle
