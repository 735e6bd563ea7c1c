#include "mubvqe/mub.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>
#include <stdexcept>

#include "mubvqe/rng.hpp"

namespace mubvqe {

namespace {

// --- GF(2^n) arithmetic on bit-vector representatives --------------------
//
// Elements are polynomials over F2 modulo a fixed irreducible polynomial,
// packed into an unsigned integer (bit k = coefficient of x^k).

constexpr std::array<std::uint32_t, 6> kIrreducible = {
    0,       // unused
    0b11,    // x + 1
    0b111,   // x^2 + x + 1
    0b1011,  // x^3 + x + 1
    0b10011,       // x^4 + x + 1
    0b100101,      // x^5 + x^2 + 1
};

std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, int n) {
  const std::uint32_t poly = kIrreducible[static_cast<std::size_t>(n)];
  const std::uint32_t high = 1u << n;
  std::uint32_t acc = 0;
  while (b) {
    if (b & 1u) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a & high) a ^= poly;
  }
  return acc;
}

// Field trace tr(a) = a + a^2 + ... + a^(2^(n-1)), valued in {0, 1}.
std::uint32_t gf_trace(std::uint32_t a, int n) {
  std::uint32_t acc = 0;
  std::uint32_t p = a;
  for (int k = 0; k < n; ++k) {
    acc ^= p;
    p = gf_mul(p, p, n);
  }
  return acc & 1u;
}

// n x n F2 matrix stored column-wise as bitmasks.
using F2Matrix = std::array<std::uint32_t, kMaxFullMubQubits>;

std::uint32_t f2_apply(const F2Matrix& m, std::uint32_t v, int n) {
  std::uint32_t out = 0;
  for (int j = 0; j < n; ++j) {
    if ((v >> j) & 1u) out ^= m[static_cast<std::size_t>(j)];
  }
  return out;
}

// Columns of the map a -> b(m) a whose graph {(a, b(m) a)} is a maximal
// isotropic subspace under the Pauli commutation form: b(m) = G M(m), with
// M(m) multiplication by m and G the Gram matrix of the trace form. Sums
// b(m) + b(m') = G M(m + m') are invertible for m != m', so the graphs
// intersect trivially and the classes tile all non-identity words together
// with the x = 0 class.
F2Matrix spread_matrix(std::uint32_t m, int n) {
  F2Matrix mul{};  // columns of M(m)
  for (int j = 0; j < n; ++j) {
    mul[static_cast<std::size_t>(j)] = gf_mul(m, 1u << j, n);
  }
  F2Matrix gram{};
  for (int j = 0; j < n; ++j) {
    std::uint32_t col = 0;
    for (int i = 0; i < n; ++i) {
      col |= gf_trace(gf_mul(1u << i, 1u << j, n), n) << i;
    }
    gram[static_cast<std::size_t>(j)] = col;
  }
  F2Matrix out{};
  for (int j = 0; j < n; ++j) {
    out[static_cast<std::size_t>(j)] =
        f2_apply(gram, mul[static_cast<std::size_t>(j)], n);
  }
  return out;
}

PauliWord word_from_masks(std::uint64_t x, std::uint64_t z, int n) {
  PauliWord w;
  w.x_mask = x;
  w.z_mask = z;
  w.n_qubits = n;
  return w;
}

StateVector canonical_phase(StateVector s) {
  for (std::int64_t k = 0; k < s.dim(); ++k) {
    const double mag = std::abs(s.amplitudes[k]);
    if (mag > 1e-9) {
      s.amplitudes *= std::conj(s.amplitudes[k]) / mag;
      break;
    }
  }
  // Flush the tiny imaginary dust the rotation leaves behind.
  for (std::int64_t k = 0; k < s.dim(); ++k) {
    Complex& a = s.amplitudes[k];
    if (std::abs(a.real()) < 1e-14) a.real(0.0);
    if (std::abs(a.imag()) < 1e-14) a.imag(0.0);
  }
  return s;
}

std::vector<MubBasis> computational_basis_first(int n) {
  std::vector<MubBasis> bases;
  MubBasis b0;
  b0.n_qubits = n;
  b0.label = 0;
  for (std::uint64_t k = 0; k < (1ULL << n); ++k) {
    b0.states.push_back(basis_state(n, k));
  }
  bases.push_back(std::move(b0));
  return bases;
}

// Joint eigenbasis of n independent commuting words, via the spectrum of
// M = sum_i 2^i g_i: each joint eigenspace gets the distinct eigenvalue
// sum_i (+-)2^i, so a single self-adjoint solve separates all 2^n states.
MubBasis joint_eigenbasis(const std::vector<PauliWord>& generators, int label,
                          int n) {
  const std::int64_t dim = std::int64_t{1} << n;
  Matrix m = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    m += std::pow(2.0, static_cast<double>(i)) * to_dense(generators[i]);
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigenbasis solve failed");
  }
  MubBasis basis;
  basis.n_qubits = n;
  basis.label = label;
  for (std::int64_t k = 0; k < dim; ++k) {
    basis.states.push_back(
        canonical_phase(from_amplitudes(n, solver.eigenvectors().col(k))));
  }
  return basis;
}

}  // namespace

std::vector<MubBasis> two_qubit_mubs() {
  auto bases = computational_basis_first(2);
  // Generator pairs of the remaining four commuting triples; the third
  // element of each triple is the product of the two.
  const std::array<std::array<const char*, 2>, 4> generators = {{
      {"XI", "IX"},  // {XI, IX, XX}
      {"YI", "IY"},  // {YI, IY, YY}
      {"XY", "YZ"},  // {XY, YZ, ZX}
      {"YX", "ZY"},  // {YX, ZY, XZ}
  }};
  for (std::size_t i = 0; i < generators.size(); ++i) {
    std::vector<PauliWord> gens = {
        PauliWord::from_string(generators[i][0]),
        PauliWord::from_string(generators[i][1]),
    };
    bases.push_back(joint_eigenbasis(gens, static_cast<int>(i) + 1, 2));
  }
  return bases;
}

std::vector<MubBasis> full_mubs(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxFullMubQubits) {
    throw std::invalid_argument("full MUB construction supports 1.." +
                                std::to_string(kMaxFullMubQubits) +
                                " qubits");
  }
  const int n = n_qubits;
  // Class x = 0 (pure-Z words) is the computational basis.
  auto bases = computational_basis_first(n);
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    const F2Matrix bm = spread_matrix(m, n);
    std::vector<PauliWord> gens;
    for (int i = 0; i < n; ++i) {
      const std::uint32_t a = 1u << i;
      gens.push_back(word_from_masks(a, f2_apply(bm, a, n), n));
    }
    bases.push_back(joint_eigenbasis(gens, static_cast<int>(m) + 1, n));
  }
  return bases;
}

InitialStateSet partial_dqes_states(int n_qubits) {
  if (n_qubits < 2) {
    throw std::invalid_argument("pair embedding needs at least 2 qubits");
  }
  const auto pair_bases = two_qubit_mubs();
  InitialStateSet set;
  set.n_qubits = n_qubits;
  const std::int64_t dim = std::int64_t{1} << n_qubits;
  for (int j = 1; j < n_qubits; ++j) {
    for (int i = 0; i < j; ++i) {
      for (const MubBasis& basis : pair_bases) {
        for (std::size_t si = 0; si < basis.states.size(); ++si) {
          if (basis.label == 0 && si == 0) continue;  // embedded |00>
          Vector amps = Vector::Zero(dim);
          const Vector& pair = basis.states[si].amplitudes;
          for (std::int64_t b = 0; b < 4; ++b) {
            const std::int64_t index =
                ((b & 1) << i) | (((b >> 1) & 1) << j);
            amps[index] = pair[b];
          }
          set.entries.push_back(
              {"pair(" + std::to_string(i) + "," + std::to_string(j) +
                   ")/b" + std::to_string(basis.label) + "/s" +
                   std::to_string(si),
               from_amplitudes(n_qubits, std::move(amps))});
        }
      }
    }
  }
  if (n_qubits > 2) {
    set.entries.push_back({"zero", basis_state(n_qubits, 0)});
  }
  return set;
}

InitialStateSet random_basis_states(int n_qubits, int count,
                                    std::uint64_t seed) {
  if (count < 1) {
    throw std::invalid_argument("state count must be positive");
  }
  Rng rng(mix_seed(seed, 0x7261'6e64));
  InitialStateSet set;
  set.n_qubits = n_qubits;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t index = rng.uniform_index(1ULL << n_qubits);
    std::string bits(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
      if ((index >> q) & 1) bits[static_cast<std::size_t>(n_qubits - 1 - q)] = '1';
    }
    set.entries.push_back({"random/" + std::to_string(i) + "/" + bits,
                           basis_state(n_qubits, index)});
  }
  return set;
}

InitialStateSet mub_pairs_random_rest(int n_qubits, std::uint64_t seed) {
  if (n_qubits <= 2) {
    throw std::invalid_argument("random-rest embedding needs n > 2 qubits");
  }
  const auto pair_bases = two_qubit_mubs();
  Rng rng(mix_seed(seed, 0x7265'7374));
  InitialStateSet set;
  set.n_qubits = n_qubits;
  const std::int64_t dim = std::int64_t{1} << n_qubits;
  for (int j = 1; j < n_qubits; ++j) {
    for (int i = 0; i < j; ++i) {
      for (const MubBasis& basis : pair_bases) {
        for (std::size_t si = 0; si < basis.states.size(); ++si) {
          if (basis.label == 0 && si == 0) continue;
          // Classical pattern on the n-2 qubits outside the pair.
          std::uint64_t rest = 0;
          std::string rest_bits;
          for (int q = n_qubits - 1; q >= 0; --q) {
            if (q == i || q == j) continue;
            const std::uint64_t bit = rng.uniform_index(2);
            rest |= bit << q;
            rest_bits += bit ? '1' : '0';
          }
          Vector amps = Vector::Zero(dim);
          const Vector& pair = basis.states[si].amplitudes;
          for (std::int64_t b = 0; b < 4; ++b) {
            const std::int64_t index = static_cast<std::int64_t>(rest) |
                                       ((b & 1) << i) |
                                       (((b >> 1) & 1) << j);
            amps[index] = pair[b];
          }
          set.entries.push_back(
              {"pair(" + std::to_string(i) + "," + std::to_string(j) +
                   ")/b" + std::to_string(basis.label) + "/s" +
                   std::to_string(si) + "/rest=" + rest_bits,
               from_amplitudes(n_qubits, std::move(amps))});
        }
      }
    }
  }
  set.entries.push_back({"zero", basis_state(n_qubits, 0)});
  return set;
}

InitialStateSet full_mub_states(int n_qubits) {
  const auto bases = full_mubs(n_qubits);
  InitialStateSet set;
  set.n_qubits = n_qubits;
  for (const MubBasis& basis : bases) {
    for (std::size_t si = 0; si < basis.states.size(); ++si) {
      set.entries.push_back({"b" + std::to_string(basis.label) + "/s" +
                                 std::to_string(si),
                             basis.states[si]});
    }
  }
  return set;
}

}  // namespace mubvqe
