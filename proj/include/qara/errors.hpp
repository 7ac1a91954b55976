#pragma once

#include <stdexcept>
#include <string>

namespace qara {

/// Caller passed a value outside an operation's contract.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeds the simulator's memory ceiling (more than 24 qubits).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The instance generator could not satisfy its constraints within the retry bound.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bookkeeping broke an internal invariant. Never a valid runtime state.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qara
