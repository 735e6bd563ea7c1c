#pragma once

#include <string>
#include <string_view>

#include "mubvqe/circuit.hpp"

namespace mubvqe {

enum class Entanglement { Linear, Full };

/// Hardware-efficient layered ansatz: an initial [RY layer, RZ layer], then
/// `reps` repetitions of [CX entangler, RY layer, RZ layer]. Parameter
/// slots are assigned in encounter order, giving 2*n*(reps+1) parameters
/// with the default final rotation layer (2*n*reps without it). The
/// entangler is a linear chain CX(q -> q+1) by default, or all ordered
/// pairs with Entanglement::Full.
Circuit efficient_su2(int n_qubits, int reps = 3,
                      Entanglement entanglement = Entanglement::Linear,
                      bool final_rotation_layer = true);

/// Two-qubit unitary coupled-cluster ansatz with three parameters:
/// exp(-i t0 IY/2), exp(-i t1 YI/2), then the two-term double-excitation
/// generator realized as exp(-i t2 XY/2) exp(-i t2 YX/2) on a shared slot
/// (exact, the terms commute).
Circuit uccsd_2q();

/// Parse the plain-text circuit format:
///   qubits <n>
///   ry <q> <slot> | rz <q> <slot> | cx <c> <t> | h <q> | x <q> | sdg <q>
///   | evo <word> <slot>
/// `#` starts a comment. Parameter count is max slot + 1; every slot below
/// that must be referenced. Errors carry line numbers.
Circuit parse_ansatz_file(std::string_view text);

/// A named, resolved ansatz as selected on the command line.
struct AnsatzSpec {
  std::string name;
  int n_qubits = 0;
  int reps = 0;  // efficient-su2 only
  Circuit circuit;
};

/// Resolve `efficient-su2`, `uccsd2`, or `file:<path>` against a qubit
/// count. The trailing knobs apply to efficient-su2 only.
AnsatzSpec resolve_ansatz(const std::string& selector, int n_qubits,
                          int reps = 3,
                          Entanglement entanglement = Entanglement::Linear,
                          bool final_rotation_layer = true);

Entanglement parse_entanglement(std::string_view name);
std::string_view entanglement_name(Entanglement entanglement);

}  // namespace mubvqe
