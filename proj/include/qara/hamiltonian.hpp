#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "qara/exact_cover.hpp"
#include "qara/reduced_problem.hpp"

namespace qara {

/// Diagonal Ising operator: constant + sum_i h_i Z_i + sum_{i<t} J_it Z_i Z_t.
///
/// Quadratic keys are stored as (i, t) with i < t. Zero coefficients are never
/// stored, so `quadratic.empty()` means no cross terms remain.
class IsingHamiltonian {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  explicit IsingHamiltonian(std::size_t num_vars, double constant = 0.0);

  std::size_t num_vars() const noexcept { return num_vars_; }
  double constant() const noexcept { return constant_; }
  const std::map<std::size_t, double>& linear() const noexcept { return linear_; }
  const std::map<Pair, double>& quadratic() const noexcept { return quadratic_; }

  void add_constant(double c) { constant_ += c; }
  void add_linear(std::size_t i, double c);
  void add_quadratic(std::size_t i, std::size_t t, double c);

  /// Indices that still carry a nonzero linear or quadratic coefficient, ascending.
  std::vector<std::size_t> active_variables() const;

 private:
  std::size_t num_vars_;
  double constant_;
  std::map<std::size_t, double> linear_;
  std::map<Pair, double> quadratic_;
};

/// Ising form of the exact-cover objective. For an element covered by the k
/// subsets D: constant += 1 - k/2 + k(k-1)/4, h_i += (2-k)/2 for i in D, and
/// J += 1/2 for each pair in D. Energies on basis states equal objective_value.
IsingHamiltonian build_hamiltonian(const ExactCoverInstance& instance);

/// Same rule for a reduced problem. Qubit q stands for the q-th active subset;
/// only uncovered elements contribute.
IsingHamiltonian build_hamiltonian(const ReducedProblem& state);

/// Generic form: `coverers[j]` lists the variables covering element j.
IsingHamiltonian build_hamiltonian(std::size_t num_vars, const std::vector<std::vector<std::size_t>>& coverers);

/// <x|H|x> with Z_i|x> = (-1)^{x_i}|x>.
double energy_of_bitstring(const IsingHamiltonian& h, const Assignment& x);

/// Rewrites Z_eliminated as sign * Z_retained everywhere and merges terms.
IsingHamiltonian substitute_variable(const IsingHamiltonian& h, std::size_t eliminated, std::size_t retained, int sign);

bool has_cross_terms(const IsingHamiltonian& h);

}  // namespace qara
