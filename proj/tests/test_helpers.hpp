// Test-only oracles, deliberately independent of the library kernels:
// dense operators are assembled by explicit Kronecker products from 2x2
// Pauli matrices, and circuits by multiplying dense gate matrices.

#pragma once

#include <Eigen/Dense>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

#include "mubvqe/circuit.hpp"
#include "mubvqe/pauli.hpp"
#include "mubvqe/rng.hpp"

namespace testhelpers {

using mubvqe::Complex;
using mubvqe::Matrix;
using mubvqe::Vector;

inline Matrix pauli_1q(char axis) {
  Matrix m(2, 2);
  switch (axis) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("bad axis");
  }
  return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          a(i, j) * b;
    }
  }
  return out;
}

// Word text reads left-to-right from qubit n-1 down to qubit 0.
inline Matrix dense_word(const std::string& word) {
  Matrix m = Matrix::Identity(1, 1);
  for (char axis : word) m = kron(m, pauli_1q(axis));
  return m;
}

inline Matrix dense_hamiltonian(
    const std::vector<std::pair<double, std::string>>& terms) {
  Matrix m = terms.front().first * dense_word(terms.front().second);
  for (std::size_t i = 1; i < terms.size(); ++i) {
    m += terms[i].first * dense_word(terms[i].second);
  }
  return m;
}

// Dense unitary of a single gate on n qubits (half-angle rotations).
inline Matrix dense_gate(const mubvqe::Gate& gate, int n_qubits,
                         double angle) {
  using mubvqe::GateKind;
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  auto one_qubit = [&](const Matrix& u, int q) {
    Matrix m = Matrix::Identity(1, 1);
    for (int k = n_qubits - 1; k >= 0; --k) {
      m = kron(m, k == q ? u : Matrix::Identity(2, 2).eval());
    }
    return m;
  };
  switch (gate.kind) {
    case GateKind::X: return one_qubit(pauli_1q('X'), gate.q0);
    case GateKind::H: {
      Matrix h(2, 2);
      h << 1, 1, 1, -1;
      h /= std::sqrt(2.0);
      return one_qubit(h, gate.q0);
    }
    case GateKind::S: {
      Matrix s(2, 2);
      s << 1, 0, 0, Complex(0, 1);
      return one_qubit(s, gate.q0);
    }
    case GateKind::Sdg: {
      Matrix s(2, 2);
      s << 1, 0, 0, Complex(0, -1);
      return one_qubit(s, gate.q0);
    }
    case GateKind::RY:
      return one_qubit((Complex(0, -angle / 2) * pauli_1q('Y')).exp(),
                       gate.q0);
    case GateKind::RZ:
      return one_qubit((Complex(0, -angle / 2) * pauli_1q('Z')).exp(),
                       gate.q0);
    case GateKind::CX: {
      Matrix m = Matrix::Zero(dim, dim);
      for (Eigen::Index k = 0; k < dim; ++k) {
        const bool control = (k >> gate.q0) & 1;
        const Eigen::Index to =
            control ? (k ^ (Eigen::Index{1} << gate.q1)) : k;
        m(to, k) = 1.0;
      }
      return m;
    }
    case GateKind::PauliEvolution: {
      const Matrix p = dense_word(gate.generator.str());
      return (Complex(0, -angle / 2) * p).exp();
    }
  }
  throw std::logic_error("bad gate");
}

// Dense unitary of a whole circuit under slot parameters.
inline Matrix dense_circuit(const mubvqe::Circuit& circuit,
                            const Eigen::VectorXd& theta) {
  const Eigen::Index dim = Eigen::Index{1} << circuit.n_qubits;
  Matrix u = Matrix::Identity(dim, dim);
  for (const mubvqe::Gate& g : circuit.gates) {
    const double angle = g.parameterized() ? theta[g.slot] : 0.0;
    u = dense_gate(g, circuit.n_qubits, angle) * u;
  }
  return u;
}

inline Vector random_state(int n_qubits, std::uint64_t seed) {
  mubvqe::Rng rng(seed);
  Vector v(Eigen::Index{1} << n_qubits);
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    v[k] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  }
  v.normalize();
  return v;
}

inline mubvqe::QubitHamiltonian random_hamiltonian(int n_qubits, int terms,
                                                   std::uint64_t seed) {
  mubvqe::Rng rng(seed);
  const char axes[4] = {'I', 'X', 'Y', 'Z'};
  std::string text;
  for (int t = 0; t < terms; ++t) {
    std::string word;
    for (int q = 0; q < n_qubits; ++q) {
      word += axes[rng.uniform_index(4)];
    }
    text += std::to_string(rng.uniform(-1.0, 1.0)) + " " + word + "\n";
  }
  return mubvqe::parse_hamiltonian(text);
}

// Random 2-local Hamiltonian: single-qubit Z/X fields plus two-qubit ZZ/XX
// couplings on random pairs.
inline mubvqe::QubitHamiltonian random_two_local(int n_qubits, int couplings,
                                                 std::uint64_t seed) {
  mubvqe::Rng rng(seed);
  std::string text;
  for (int q = 0; q < n_qubits; ++q) {
    std::string zfield(static_cast<std::size_t>(n_qubits), 'I');
    zfield[static_cast<std::size_t>(n_qubits - 1 - q)] = 'Z';
    text += std::to_string(rng.uniform(-1.0, 1.0)) + " " + zfield + "\n";
    std::string xfield(static_cast<std::size_t>(n_qubits), 'I');
    xfield[static_cast<std::size_t>(n_qubits - 1 - q)] = 'X';
    text += std::to_string(rng.uniform(-0.5, 0.5)) + " " + xfield + "\n";
  }
  for (int c = 0; c < couplings; ++c) {
    const int i = static_cast<int>(rng.uniform_index(n_qubits));
    int j = static_cast<int>(rng.uniform_index(n_qubits));
    while (j == i) j = static_cast<int>(rng.uniform_index(n_qubits));
    const char axis = rng.uniform_index(2) ? 'Z' : 'X';
    std::string word(static_cast<std::size_t>(n_qubits), 'I');
    word[static_cast<std::size_t>(n_qubits - 1 - i)] = axis;
    word[static_cast<std::size_t>(n_qubits - 1 - j)] = axis;
    text += std::to_string(rng.uniform(-1.0, 1.0)) + " " + word + "\n";
  }
  return mubvqe::parse_hamiltonian(text);
}

}  // namespace testhelpers
