#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mubvqe/statevector.hpp"

namespace mubvqe {

/// Full mutually-unbiased-basis construction is capped at five qubits
/// (33 bases x 32 states).
inline constexpr int kMaxFullMubQubits = 5;

/// One orthonormal basis of 2^m states. Bases produced together satisfy
/// |<a|b>|^2 = 2^-m for states drawn from different bases.
struct MubBasis {
  int n_qubits = 0;
  int label = 0;
  std::vector<StateVector> states;
};

/// The five 2-qubit bases built from the partition of the 15 non-identity
/// two-qubit Pauli words into mutually commuting triples:
///   {ZI,IZ,ZZ} {XI,IX,XX} {YI,IY,YY} {XY,YZ,ZX} {YX,ZY,XZ}.
/// Basis 0 is the computational basis ordered |00>,|01>,|10>,|11>. Each
/// non-computational eigenvector is phase-normalized so its first nonzero
/// amplitude is real positive.
std::vector<MubBasis> two_qubit_mubs();

/// 2^n + 1 bases for 1 <= n <= kMaxFullMubQubits, from the symplectic-spread
/// partition of the 4^n - 1 non-identity Pauli words into maximal commuting
/// classes (GF(2^n) multiplication maps under the trace form). Basis 0 is
/// computational.
std::vector<MubBasis> full_mubs(int n_qubits);

struct InitialStateEntry {
  std::string label;
  StateVector state;
};

/// Labeled collection of optimization start states.
struct InitialStateSet {
  int n_qubits = 0;
  std::vector<InitialStateEntry> entries;
};

/// Pair-embedded start set: every unordered qubit pair (i, j) carries each
/// of the 20 two-qubit MUB states with all other qubits in |0>; the
/// embedded all-zero state is dropped from every pair (19 per pair) and,
/// for n > 2, the global all-zero state is appended once. Counts:
/// C(n,2)*19 + [n > 2], i.e. 19 / 286 / 856 for n = 2 / 6 / 10.
InitialStateSet partial_dqes_states(int n_qubits);

/// `count` uniformly drawn computational basis states (with replacement),
/// deterministic per seed.
InitialStateSet random_basis_states(int n_qubits, int count,
                                    std::uint64_t seed);

/// Same pair enumeration as partial_dqes_states, but the non-pair qubits of
/// each entry are set to a seeded random classical bit pattern. The single
/// appended entry stays the global |0...0>. Requires n > 2.
InitialStateSet mub_pairs_random_rest(int n_qubits, std::uint64_t seed);

/// All states of full_mubs(n) flattened into a labeled set.
InitialStateSet full_mub_states(int n_qubits);

}  // namespace mubvqe
