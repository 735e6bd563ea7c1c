#pragma once

#include <string_view>
#include <vector>

#include "mubvqe/pauli.hpp"

namespace mubvqe {

enum class GateKind { X, H, S, Sdg, RY, RZ, CX, PauliEvolution };

/// One gate in a circuit. q0 is the acted-on qubit (control for CX, unused
/// for PauliEvolution); q1 is the CX target. Parameterized kinds (RY, RZ,
/// PauliEvolution) reference a parameter slot; slots may be shared between
/// gates, which realizes multi-term generators exactly when the terms
/// commute.
struct Gate {
  GateKind kind;
  int q0 = -1;
  int q1 = -1;
  int slot = -1;
  PauliWord generator;  // PauliEvolution only

  bool parameterized() const {
    return kind == GateKind::RY || kind == GateKind::RZ ||
           kind == GateKind::PauliEvolution;
  }
};

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
  int n_params = 0;
};

/// Check operand ranges, CX distinctness, generator lengths, and that every
/// slot in [0, n_params) is referenced by at least one gate. Throws
/// std::invalid_argument with a description on failure.
void validate(const Circuit& circuit);

std::string_view gate_name(GateKind kind);

}  // namespace mubvqe
