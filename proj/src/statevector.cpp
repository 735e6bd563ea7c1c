#include "mubvqe/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "mubvqe/rng.hpp"

namespace mubvqe {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_qubit(const StateVector& s, int qubit) {
  if (qubit < 0 || qubit >= s.n_qubits) {
    throw std::invalid_argument("qubit index " + std::to_string(qubit) +
                                " out of range");
  }
}

}  // namespace

StateVector basis_state(int n_qubits, std::uint64_t index) {
  if (n_qubits <= 0 || n_qubits > kMaxSimQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(n_qubits) +
                                " outside [1, " +
                                std::to_string(kMaxSimQubits) + "]");
  }
  const std::int64_t dim = std::int64_t{1} << n_qubits;
  if (index >= static_cast<std::uint64_t>(dim)) {
    throw std::invalid_argument("basis index " + std::to_string(index) +
                                " out of range for " +
                                std::to_string(n_qubits) + " qubits");
  }
  StateVector s{n_qubits, Vector::Zero(dim)};
  s.amplitudes[static_cast<std::int64_t>(index)] = Complex{1.0, 0.0};
  return s;
}

StateVector from_amplitudes(int n_qubits, Vector amplitudes) {
  if ((std::int64_t{1} << n_qubits) != amplitudes.size()) {
    throw std::invalid_argument("amplitude length is not 2^n");
  }
  return StateVector{n_qubits, std::move(amplitudes)};
}

void apply_x(StateVector& s, int qubit) {
  check_qubit(s, qubit);
  const std::int64_t bit = std::int64_t{1} << qubit;
  for (std::int64_t k = 0; k < s.dim(); ++k) {
    if (!(k & bit)) std::swap(s.amplitudes[k], s.amplitudes[k | bit]);
  }
}

void apply_h(StateVector& s, int qubit) {
  check_qubit(s, qubit);
  const std::int64_t bit = std::int64_t{1} << qubit;
  const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  for (std::int64_t k = 0; k < s.dim(); ++k) {
    if (k & bit) continue;
    const Complex a0 = s.amplitudes[k];
    const Complex a1 = s.amplitudes[k | bit];
    s.amplitudes[k] = inv_sqrt2 * (a0 + a1);
    s.amplitudes[k | bit] = inv_sqrt2 * (a0 - a1);
  }
}

void apply_s(StateVector& s, int qubit) {
  check_qubit(s, qubit);
  const std::int64_t bit = std::int64_t{1} << qubit;
  for (std::int64_t k = 0; k < s.dim(); ++k) {
    if (k & bit) s.amplitudes[k] *= kI;
  }
}

void apply_sdg(StateVector& s, int qubit) {
  check_qubit(s, qubit);
  const std::int64_t bit = std::int64_t{1} << qubit;
  for (std::int64_t k = 0; k < s.dim(); ++k) {
    if (k & bit) s.amplitudes[k] *= -kI;
  }
}

void apply_ry(StateVector& s, int qubit, double theta) {
  check_qubit(s, qubit);
  const std::int64_t bit = std::int64_t{1} << qubit;
  const double c = std::cos(theta / 2.0);
  const double n = std::sin(theta / 2.0);
  for (std::int64_t k = 0; k < s.dim(); ++k) {
    if (k & bit) continue;
    const Complex a0 = s.amplitudes[k];
    const Complex a1 = s.amplitudes[k | bit];
    s.amplitudes[k] = c * a0 - n * a1;
    s.amplitudes[k | bit] = n * a0 + c * a1;
  }
}

void apply_rz(StateVector& s, int qubit, double theta) {
  check_qubit(s, qubit);
  const std::int64_t bit = std::int64_t{1} << qubit;
  const Complex phase0 = std::exp(-kI * (theta / 2.0));
  const Complex phase1 = std::exp(kI * (theta / 2.0));
  for (std::int64_t k = 0; k < s.dim(); ++k) {
    s.amplitudes[k] *= (k & bit) ? phase1 : phase0;
  }
}

void apply_cx(StateVector& s, int control, int target) {
  check_qubit(s, control);
  check_qubit(s, target);
  if (control == target) {
    throw std::invalid_argument("CX control and target coincide");
  }
  const std::int64_t cbit = std::int64_t{1} << control;
  const std::int64_t tbit = std::int64_t{1} << target;
  for (std::int64_t k = 0; k < s.dim(); ++k) {
    if ((k & cbit) && !(k & tbit)) {
      std::swap(s.amplitudes[k], s.amplitudes[k | tbit]);
    }
  }
}

void apply_pauli_evolution(StateVector& s, const PauliWord& generator,
                           double theta) {
  if (generator.n_qubits != s.n_qubits) {
    throw std::invalid_argument("generator length mismatch");
  }
  // exp(-i theta P / 2) = cos(theta/2) I - i sin(theta/2) P, exact since
  // P^2 = I.
  const Vector p_s = apply_word(generator, s.amplitudes);
  s.amplitudes = std::cos(theta / 2.0) * s.amplitudes -
                 kI * std::sin(theta / 2.0) * p_s;
}

void apply_gate(StateVector& s, const Gate& gate, double angle) {
  switch (gate.kind) {
    case GateKind::X: apply_x(s, gate.q0); break;
    case GateKind::H: apply_h(s, gate.q0); break;
    case GateKind::S: apply_s(s, gate.q0); break;
    case GateKind::Sdg: apply_sdg(s, gate.q0); break;
    case GateKind::RY: apply_ry(s, gate.q0, angle); break;
    case GateKind::RZ: apply_rz(s, gate.q0, angle); break;
    case GateKind::CX: apply_cx(s, gate.q0, gate.q1); break;
    case GateKind::PauliEvolution:
      apply_pauli_evolution(s, gate.generator, angle);
      break;
  }
}

void apply_circuit_gate_angles(const Circuit& circuit,
                               std::span<const double> gate_angles,
                               StateVector& s) {
  if (gate_angles.size() != circuit.gates.size()) {
    throw std::invalid_argument("per-gate angle count mismatch");
  }
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    apply_gate(s, circuit.gates[i], gate_angles[i]);
  }
}

StateVector run_circuit(const Circuit& circuit, const Eigen::VectorXd& theta,
                        const StateVector& s0) {
  if (theta.size() != circuit.n_params) {
    throw std::invalid_argument(
        "parameter vector length " + std::to_string(theta.size()) +
        " != circuit parameter count " + std::to_string(circuit.n_params));
  }
  if (s0.n_qubits != circuit.n_qubits) {
    throw std::invalid_argument("initial state width mismatch");
  }
  StateVector s = s0;
  for (const Gate& g : circuit.gates) {
    apply_gate(s, g, g.parameterized() ? theta[g.slot] : 0.0);
  }
  if (std::abs(s.amplitudes.squaredNorm() - 1.0) > 1e-10) {
    throw std::runtime_error("circuit output lost normalization");
  }
  return s;
}

std::map<std::uint64_t, std::uint64_t> sample(const StateVector& s,
                                              std::uint64_t shots,
                                              std::uint64_t seed) {
  if (shots == 0) {
    throw std::invalid_argument("shots must be positive");
  }
  if (std::abs(s.amplitudes.squaredNorm() - 1.0) > 1e-10) {
    throw std::invalid_argument("cannot sample a non-normalized state");
  }
  // Cumulative distribution, then binary search per shot.
  std::vector<double> cdf(static_cast<std::size_t>(s.dim()));
  double acc = 0.0;
  for (std::int64_t k = 0; k < s.dim(); ++k) {
    acc += std::norm(s.amplitudes[k]);
    cdf[static_cast<std::size_t>(k)] = acc;
  }
  cdf.back() = 1.0;

  Rng rng(seed);
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (std::uint64_t i = 0; i < shots; ++i) {
    const double u = rng.uniform();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto index =
        static_cast<std::uint64_t>(std::distance(cdf.begin(), it));
    ++histogram[index];
  }
  return histogram;
}

}  // namespace mubvqe
