#include "qara/hamiltonian.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qara/errors.hpp"

namespace qara {

IsingHamiltonian::IsingHamiltonian(std::size_t num_vars, double constant)
    : num_vars_(num_vars), constant_(constant) {}

void IsingHamiltonian::add_linear(std::size_t i, double c) {
  if (i >= num_vars_) throw InvalidArgument("linear index " + std::to_string(i) + " out of range");
  if (c == 0.0) return;
  const double merged = (linear_[i] += c);
  if (merged == 0.0) linear_.erase(i);
}

void IsingHamiltonian::add_quadratic(std::size_t i, std::size_t t, double c) {
  if (i == t) throw InvalidArgument("quadratic term needs two distinct indices");
  if (i >= num_vars_ || t >= num_vars_) throw InvalidArgument("quadratic index out of range");
  if (c == 0.0) return;
  const Pair key = i < t ? Pair{i, t} : Pair{t, i};
  const double merged = (quadratic_[key] += c);
  if (merged == 0.0) quadratic_.erase(key);
}

std::vector<std::size_t> IsingHamiltonian::active_variables() const {
  std::set<std::size_t> vars;
  for (const auto& [i, c] : linear_) vars.insert(i);
  for (const auto& [key, c] : quadratic_) {
    vars.insert(key.first);
    vars.insert(key.second);
  }
  return {vars.begin(), vars.end()};
}

IsingHamiltonian build_hamiltonian(std::size_t num_vars, const std::vector<std::vector<std::size_t>>& coverers) {
  IsingHamiltonian h(num_vars);
  for (const auto& d : coverers) {
    const double k = static_cast<double>(d.size());
    h.add_constant(1.0 - k / 2.0 + k * (k - 1.0) / 4.0);
    for (std::size_t a = 0; a < d.size(); ++a) {
      h.add_linear(d[a], (2.0 - k) / 2.0);
      for (std::size_t b = a + 1; b < d.size(); ++b) h.add_quadratic(d[a], d[b], 0.5);
    }
  }
  return h;
}

IsingHamiltonian build_hamiltonian(const ExactCoverInstance& instance) {
  std::vector<std::vector<std::size_t>> coverers(instance.num_elements());
  for (ElementIndex j = 0; j < instance.num_elements(); ++j) {
    const auto& c = instance.covering_subsets(j);
    coverers[j].assign(c.begin(), c.end());
  }
  return build_hamiltonian(instance.num_subsets(), coverers);
}

IsingHamiltonian build_hamiltonian(const ReducedProblem& state) {
  std::vector<std::vector<std::size_t>> coverers;
  coverers.reserve(state.uncovered.size());
  for (ElementIndex e : state.uncovered) {
    std::vector<std::size_t> d;
    for (std::size_t q = 0; q < state.active.size(); ++q) {
      const auto& members = state.active[q].elements;
      if (std::binary_search(members.begin(), members.end(), e)) d.push_back(q);
    }
    coverers.push_back(std::move(d));
  }
  return build_hamiltonian(state.active.size(), coverers);
}

double energy_of_bitstring(const IsingHamiltonian& h, const Assignment& x) {
  if (x.size() != h.num_vars()) {
    throw InvalidArgument("bitstring length " + std::to_string(x.size()) + " does not match " +
                          std::to_string(h.num_vars()) + " variables");
  }
  auto spin = [&x](std::size_t i) { return x[i] ? -1.0 : 1.0; };
  double energy = h.constant();
  for (const auto& [i, c] : h.linear()) energy += c * spin(i);
  for (const auto& [key, c] : h.quadratic()) energy += c * spin(key.first) * spin(key.second);
  return energy;
}

IsingHamiltonian substitute_variable(const IsingHamiltonian& h, std::size_t eliminated, std::size_t retained,
                                     int sign) {
  if (eliminated == retained) throw InvalidArgument("cannot substitute a variable by itself");
  if (eliminated >= h.num_vars() || retained >= h.num_vars()) {
    throw InvalidArgument("substitution index out of range");
  }
  if (sign != 1 && sign != -1) throw InvalidArgument("substitution sign must be +1 or -1");
  const double s = sign;

  IsingHamiltonian out(h.num_vars(), h.constant());
  for (const auto& [i, c] : h.linear()) {
    out.add_linear(i == eliminated ? retained : i, i == eliminated ? s * c : c);
  }
  for (const auto& [key, c] : h.quadratic()) {
    auto [i, t] = key;
    if (i != eliminated && t != eliminated) {
      out.add_quadratic(i, t, c);
      continue;
    }
    const std::size_t other = i == eliminated ? t : i;
    if (other == retained) {
      out.add_constant(s * c);  // Z_j Z_j = I
    } else {
      out.add_quadratic(retained, other, s * c);
    }
  }
  return out;
}

bool has_cross_terms(const IsingHamiltonian& h) { return !h.quadratic().empty(); }

}  // namespace qara
