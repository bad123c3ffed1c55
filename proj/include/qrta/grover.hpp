#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrta/linalg.hpp"

namespace qrta::grover {

struct GroverConfig {
  int n_qubits = 3;
  std::uint64_t target = 7;
  int iterations = 2;

  void validate() const;
};

struct LabeledState {
  std::string label;  // "s", "psi1", "psi2", ...
  PureState state;
};

struct GroverTrace {
  GroverConfig config;
  std::vector<LabeledState> states;
};

PureState uniform_state(int n_qubits);

/// I - 2|t><t|: negates the target amplitude.
PureState apply_oracle(const PureState& state, std::uint64_t target);

/// 2|s><s| - I, computed as x_i -> 2*mean - x_i.
PureState apply_diffuser(const PureState& state);

/// [s, oracle, diffuser, oracle, diffuser, ...]; 2*iterations + 1 states.
GroverTrace trace_states(const GroverConfig& config);

}  // namespace qrta::grover
