#pragma once

#include <string>

namespace prover {

// One tactic application has exactly one of three outcomes.
struct EnvOutcome {
  enum class Kind { NewState, Finished, Error };

  Kind kind = Kind::Error;
  // New state text for NewState, error message for Error, empty for Finished.
  std::string payload;

  static EnvOutcome new_state(std::string state) {
    return {Kind::NewState, std::move(state)};
  }
  static EnvOutcome finished() { return {Kind::Finished, {}}; }
  static EnvOutcome error(std::string message) { return {Kind::Error, std::move(message)}; }

  bool operator==(const EnvOutcome&) const = default;
};

// Proof environment: applies one tactic to a serialized proof state.
// Tactic-level failures come back as Error outcomes, never exceptions;
// only transport or configuration problems throw InfrastructureError.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual EnvOutcome apply(const std::string& state, const std::string& tactic) = 0;

  // Initial state for a goal. Identity for in-process environments; remote
  // environments may run a session-opening handshake here.
  virtual std::string init(const std::string& goal) { return goal; }
};

// The synthetic Peano rewriting environment. Pure and stateless, freely
// shareable across concurrent searches.
class PeanoEnvironment final : public Environment {
 public:
  EnvOutcome apply(const std::string& state, const std::string& tactic) override;
};

}  // namespace prover
