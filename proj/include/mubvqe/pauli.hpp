#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mubvqe {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Largest qubit count for dense 2^n x 2^n materialization (4096^2 complex).
inline constexpr int kDenseQubitLimit = 12;

/// Tensor product of single-qubit Paulis, stored in binary-symplectic form:
/// bit i of x_mask/z_mask is the X/Z component on qubit i, Y sets both.
/// In text form the leftmost character acts on qubit n-1, the rightmost on
/// qubit 0, so "AB" reads as the tensor product A (x) B.
struct PauliWord {
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;
  int n_qubits = 0;

  /// Parse a word like "IXYZ". Throws std::invalid_argument on bad symbols
  /// or empty/oversized input.
  static PauliWord from_string(std::string_view text);

  std::string str() const;
  char axis(int qubit) const;
  bool is_identity() const { return x_mask == 0 && z_mask == 0; }
  int weight() const;

  /// Non-identity positions as a bitmask (support of the word).
  std::uint64_t support() const { return x_mask | z_mask; }

  /// Symplectic commutation test: true iff the words commute as operators.
  bool commutes_with(const PauliWord& other) const;

  bool operator==(const PauliWord&) const = default;
};

struct HamiltonianTerm {
  double coefficient = 0.0;
  PauliWord word;
};

/// Real-weighted sum of Pauli words. Terms are unique by word (merged at
/// parse time) and coefficients are finite.
struct QubitHamiltonian {
  int n_qubits = 0;
  std::vector<HamiltonianTerm> terms;
};

/// Parse the one-term-per-line text format: `<coefficient> <word>`, with `#`
/// starting a comment and blank lines ignored. Duplicate words merge
/// additively; merged coefficients below 1e-15 in magnitude are dropped.
/// Errors mention the offending line number.
QubitHamiltonian parse_hamiltonian(std::string_view text);

/// Inverse of parse_hamiltonian: one `<coefficient> <word>` line per term,
/// coefficients with 17 significant digits so reparsing is lossless.
std::string serialize_hamiltonian(const QubitHamiltonian& h);

/// Validate term lengths, finiteness and word uniqueness. Throws on failure.
void validate(const QubitHamiltonian& h);

/// Dense 2^n x 2^n matrix of a single word.
Matrix to_dense(const PauliWord& word);

/// Dense Hermitian matrix of the full Hamiltonian. Throws if n_qubits
/// exceeds kDenseQubitLimit.
Matrix to_dense(const QubitHamiltonian& h);

/// P|s>, computed bitwise without materializing a matrix: X flips the
/// qubit's bit, Z signs it, Y does both with the +/-i phase.
Vector apply_word(const PauliWord& word, const Vector& amplitudes);

/// Accumulate coeff * P|s> into `out` (same kernel as apply_word, no
/// temporary). Used by the matrix-free Hamiltonian product.
void accumulate_word(const PauliWord& word, Complex coeff,
                     const Vector& amplitudes, Vector& out);

/// Matrix-free H|s>.
Vector apply_hamiltonian(const QubitHamiltonian& h, const Vector& amplitudes);

/// <s|P|s> as a complex number (exact, no imaginary-part assertion).
Complex word_expectation(const PauliWord& word, const Vector& amplitudes);

/// Sum of coeff * <s|P|s>. Requires |s| normalized within 1e-10; the
/// imaginary residue must be below 1e-12 and is discarded.
double expectation(const QubitHamiltonian& h, const Vector& amplitudes);

/// Built-in named Hamiltonians. Currently `h2o-2q` and `hcooh-2q`.
QubitHamiltonian builtin_hamiltonian(std::string_view name);
std::vector<std::string> builtin_hamiltonian_names();

}  // namespace mubvqe
