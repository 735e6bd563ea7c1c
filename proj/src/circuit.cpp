#include "mubvqe/circuit.hpp"

#include <stdexcept>
#include <string>

namespace mubvqe {

void validate(const Circuit& circuit) {
  if (circuit.n_qubits <= 0) {
    throw std::invalid_argument("circuit must have at least one qubit");
  }
  if (circuit.n_params < 0) {
    throw std::invalid_argument("negative parameter count");
  }
  std::vector<bool> slot_used(static_cast<std::size_t>(circuit.n_params),
                              false);
  auto check_qubit = [&](int q, const char* what) {
    if (q < 0 || q >= circuit.n_qubits) {
      throw std::invalid_argument(std::string(what) + " index " +
                                  std::to_string(q) + " out of range for " +
                                  std::to_string(circuit.n_qubits) +
                                  " qubits");
    }
  };
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::CX:
        check_qubit(g.q0, "control");
        check_qubit(g.q1, "target");
        if (g.q0 == g.q1) {
          throw std::invalid_argument("CX control and target coincide");
        }
        break;
      case GateKind::PauliEvolution:
        if (g.generator.n_qubits != circuit.n_qubits) {
          throw std::invalid_argument(
              "evolution generator length " +
              std::to_string(g.generator.n_qubits) + " != circuit width " +
              std::to_string(circuit.n_qubits));
        }
        break;
      default:
        check_qubit(g.q0, "qubit");
        break;
    }
    if (g.parameterized()) {
      if (g.slot < 0 || g.slot >= circuit.n_params) {
        throw std::invalid_argument("parameter slot " +
                                    std::to_string(g.slot) + " out of range");
      }
      slot_used[static_cast<std::size_t>(g.slot)] = true;
    }
  }
  for (int s = 0; s < circuit.n_params; ++s) {
    if (!slot_used[static_cast<std::size_t>(s)]) {
      throw std::invalid_argument("parameter slot " + std::to_string(s) +
                                  " unreferenced by any gate");
    }
  }
}

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::CX: return "cx";
    case GateKind::PauliEvolution: return "evo";
  }
  return "?";
}

}  // namespace mubvqe
