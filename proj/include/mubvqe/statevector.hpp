#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <span>

#include "mubvqe/circuit.hpp"
#include "mubvqe/pauli.hpp"

namespace mubvqe {

/// Allocation cap for dense simulation.
inline constexpr int kMaxSimQubits = 24;

/// Dense n-qubit state. Index bit i corresponds to qubit i, so basis index 5
/// on three qubits is |101> (qubit 0 = 1, qubit 1 = 0, qubit 2 = 1).
struct StateVector {
  int n_qubits = 0;
  Vector amplitudes;

  double norm() const { return amplitudes.norm(); }
  std::int64_t dim() const { return amplitudes.size(); }
};

/// |index> on n qubits. Throws if index is out of range or n exceeds the
/// simulation cap.
StateVector basis_state(int n_qubits, std::uint64_t index);

StateVector from_amplitudes(int n_qubits, Vector amplitudes);

// In-place gate kernels. Rotations use the half-angle convention
// exp(-i theta G / 2); the exact parameter-shift rule (shift +-pi/2, divide
// by 2) therefore applies to every parameterized gate.
void apply_x(StateVector& s, int qubit);
void apply_h(StateVector& s, int qubit);
void apply_s(StateVector& s, int qubit);
void apply_sdg(StateVector& s, int qubit);
void apply_ry(StateVector& s, int qubit, double theta);
void apply_rz(StateVector& s, int qubit, double theta);
void apply_cx(StateVector& s, int control, int target);
void apply_pauli_evolution(StateVector& s, const PauliWord& generator,
                           double theta);

void apply_gate(StateVector& s, const Gate& gate, double angle);

/// Apply the circuit with one explicit angle per gate (non-parameterized
/// gates ignore their entry). No normalization checks; used by the
/// parameter-shift rule and by linearity tests.
void apply_circuit_gate_angles(const Circuit& circuit,
                               std::span<const double> gate_angles,
                               StateVector& s);

/// U(theta)|s0>: validates dimensions and parameter count, applies gates in
/// order, and checks the output stayed normalized to 1e-10.
StateVector run_circuit(const Circuit& circuit,
                        const Eigen::VectorXd& theta,
                        const StateVector& s0);

/// Computational-basis sampling: `shots` draws from |amplitude|^2 with a
/// seeded deterministic stream. Identical (state, shots, seed) triples give
/// identical histograms.
std::map<std::uint64_t, std::uint64_t> sample(const StateVector& s,
                                              std::uint64_t shots,
                                              std::uint64_t seed);

}  // namespace mubvqe
