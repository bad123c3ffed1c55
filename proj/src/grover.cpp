#include "qrta/grover.hpp"

#include <cmath>

#include "qrta/error.hpp"

namespace qrta::grover {

void GroverConfig::validate() const {
  if (n_qubits < 1 || n_qubits > 30) fail(ErrorCode::invalid_argument, "grover: qubit count must be in [1, 30]");
  if (target >= dimension_of(n_qubits)) fail(ErrorCode::invalid_argument, "grover: target index out of range");
  if (iterations < 0) fail(ErrorCode::invalid_argument, "grover: iterations must be >= 0");
}

PureState uniform_state(int n_qubits) {
  if (n_qubits < 1) fail(ErrorCode::invalid_argument, "uniform_state: need at least one qubit");
  const std::size_t d = dimension_of(n_qubits);
  return PureState(n_qubits, std::vector<Complex>(d, 1.0 / std::sqrt(static_cast<double>(d))));
}

PureState apply_oracle(const PureState& state, std::uint64_t target) {
  if (target >= state.dimension()) fail(ErrorCode::invalid_argument, "oracle: target index out of range");
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  amps[target] = -amps[target];
  return PureState(state.n_qubits(), std::move(amps));
}

PureState apply_diffuser(const PureState& state) {
  Complex mean = 0.0;
  for (const auto& a : state.amplitudes()) mean += a;
  mean /= static_cast<double>(state.dimension());
  std::vector<Complex> amps;
  amps.reserve(state.dimension());
  for (const auto& a : state.amplitudes()) amps.push_back(2.0 * mean - a);
  return PureState(state.n_qubits(), std::move(amps));
}

GroverTrace trace_states(const GroverConfig& config) {
  config.validate();
  GroverTrace trace{config, {}};
  trace.states.push_back({"s", uniform_state(config.n_qubits)});
  int step = 0;
  for (int it = 0; it < config.iterations; ++it) {
    PureState marked = apply_oracle(trace.states.back().state, config.target);
    trace.states.push_back({"psi" + std::to_string(++step), marked});
    PureState diffused = apply_diffuser(marked);
    trace.states.push_back({"psi" + std::to_string(++step), std::move(diffused)});
  }
  return trace;
}

}  // namespace qrta::grover
