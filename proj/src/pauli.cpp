#include "mubvqe/pauli.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace mubvqe {

namespace {

constexpr double kMergeDropThreshold = 1e-15;

int parity(std::uint64_t bits) { return std::popcount(bits) & 1; }

// i^k for k = 0..3.
Complex ipow(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

PauliWord PauliWord::from_string(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty Pauli word");
  }
  if (text.size() > 64) {
    throw std::invalid_argument("Pauli word longer than 64 qubits");
  }
  PauliWord w;
  w.n_qubits = static_cast<int>(text.size());
  // Leftmost character = highest qubit index.
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int qubit = w.n_qubits - 1 - static_cast<int>(i);
    const std::uint64_t bit = 1ULL << qubit;
    switch (text[i]) {
      case 'I': break;
      case 'X': w.x_mask |= bit; break;
      case 'Y': w.x_mask |= bit; w.z_mask |= bit; break;
      case 'Z': w.z_mask |= bit; break;
      default:
        throw std::invalid_argument(std::string("illegal Pauli symbol '") +
                                    text[i] + "' (expected I, X, Y or Z)");
    }
  }
  return w;
}

std::string PauliWord::str() const {
  std::string s(static_cast<std::size_t>(n_qubits), 'I');
  for (int q = 0; q < n_qubits; ++q) {
    s[static_cast<std::size_t>(n_qubits - 1 - q)] = axis(q);
  }
  return s;
}

char PauliWord::axis(int qubit) const {
  const bool x = (x_mask >> qubit) & 1;
  const bool z = (z_mask >> qubit) & 1;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

int PauliWord::weight() const { return std::popcount(support()); }

bool PauliWord::commutes_with(const PauliWord& other) const {
  return ((parity(x_mask & other.z_mask) ^ parity(z_mask & other.x_mask)) &
          1) == 0;
}

QubitHamiltonian parse_hamiltonian(std::string_view text) {
  QubitHamiltonian h;
  std::unordered_map<std::string, std::size_t> index_of;  // word -> term slot
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::istringstream fields{std::string(line)};
    std::string coeff_token, word_token, extra;
    if (!(fields >> coeff_token)) continue;  // blank or comment-only line
    if (!(fields >> word_token)) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected `<coefficient> <word>`");
    }
    if (fields >> extra) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": trailing token '" + extra + "'");
    }

    double coeff = 0.0;
    const char* begin = coeff_token.data();
    const char* end = begin + coeff_token.size();
    auto [parsed_end, ec] = std::from_chars(begin, end, coeff);
    if (ec != std::errc{} || parsed_end != end || !std::isfinite(coeff)) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": malformed coefficient '" + coeff_token +
                                  "'");
    }

    PauliWord word;
    try {
      word = PauliWord::from_string(word_token);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " +
                                  e.what());
    }
    if (h.n_qubits == 0) {
      h.n_qubits = word.n_qubits;
    } else if (word.n_qubits != h.n_qubits) {
      throw std::invalid_argument(
          "line " + std::to_string(line_no) + ": word '" + word_token +
          "' has length " + std::to_string(word.n_qubits) +
          ", expected " + std::to_string(h.n_qubits));
    }

    if (auto it = index_of.find(word_token); it != index_of.end()) {
      h.terms[it->second].coefficient += coeff;
    } else {
      index_of.emplace(word_token, h.terms.size());
      h.terms.push_back({coeff, word});
    }
  }
  if (h.terms.empty()) {
    throw std::invalid_argument("empty Hamiltonian document");
  }
  // Drop terms whose merged coefficient vanished.
  std::erase_if(h.terms, [](const HamiltonianTerm& t) {
    return std::abs(t.coefficient) < kMergeDropThreshold;
  });
  if (h.terms.empty()) {
    throw std::invalid_argument("all terms cancelled to zero");
  }
  return h;
}

std::string serialize_hamiltonian(const QubitHamiltonian& h) {
  std::string out;
  char buf[64];
  for (const auto& term : h.terms) {
    std::snprintf(buf, sizeof buf, "%.17g ", term.coefficient);
    out += buf;
    out += term.word.str();
    out += '\n';
  }
  return out;
}

void validate(const QubitHamiltonian& h) {
  if (h.n_qubits <= 0) {
    throw std::invalid_argument("Hamiltonian has no qubits");
  }
  std::unordered_map<std::string, int> seen;
  for (const auto& term : h.terms) {
    if (term.word.n_qubits != h.n_qubits) {
      throw std::invalid_argument("term word length mismatch");
    }
    if (!std::isfinite(term.coefficient)) {
      throw std::invalid_argument("non-finite coefficient");
    }
    if (++seen[term.word.str()] > 1) {
      throw std::invalid_argument("duplicate term " + term.word.str());
    }
  }
}

Matrix to_dense(const PauliWord& word) {
  const std::int64_t dim = std::int64_t{1} << word.n_qubits;
  Matrix m = Matrix::Zero(dim, dim);
  const Complex y_phase = ipow(std::popcount(word.x_mask & word.z_mask));
  for (std::int64_t col = 0; col < dim; ++col) {
    const std::int64_t row = col ^ static_cast<std::int64_t>(word.x_mask);
    const double sign =
        parity(static_cast<std::uint64_t>(col) & word.z_mask) ? -1.0 : 1.0;
    m(row, col) = y_phase * sign;
  }
  return m;
}

Matrix to_dense(const QubitHamiltonian& h) {
  if (h.n_qubits > kDenseQubitLimit) {
    throw std::invalid_argument(
        "dense materialization limited to " +
        std::to_string(kDenseQubitLimit) + " qubits, got " +
        std::to_string(h.n_qubits));
  }
  const std::int64_t dim = std::int64_t{1} << h.n_qubits;
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& term : h.terms) {
    const Complex y_phase =
        ipow(std::popcount(term.word.x_mask & term.word.z_mask));
    const Complex base = term.coefficient * y_phase;
    for (std::int64_t col = 0; col < dim; ++col) {
      const std::int64_t row =
          col ^ static_cast<std::int64_t>(term.word.x_mask);
      const double sign =
          parity(static_cast<std::uint64_t>(col) & term.word.z_mask) ? -1.0
                                                                     : 1.0;
      m(row, col) += base * sign;
    }
  }
  return m;
}

Vector apply_word(const PauliWord& word, const Vector& amplitudes) {
  Vector out = Vector::Zero(amplitudes.size());
  accumulate_word(word, Complex{1.0, 0.0}, amplitudes, out);
  return out;
}

void accumulate_word(const PauliWord& word, Complex coeff,
                     const Vector& amplitudes, Vector& out) {
  const std::int64_t dim = amplitudes.size();
  if ((std::int64_t{1} << word.n_qubits) != dim) {
    throw std::invalid_argument("Pauli word / state dimension mismatch");
  }
  const Complex base = coeff * ipow(std::popcount(word.x_mask & word.z_mask));
  const auto x = static_cast<std::int64_t>(word.x_mask);
  for (std::int64_t k = 0; k < dim; ++k) {
    const double sign =
        parity(static_cast<std::uint64_t>(k) & word.z_mask) ? -1.0 : 1.0;
    out[k ^ x] += base * sign * amplitudes[k];
  }
}

Vector apply_hamiltonian(const QubitHamiltonian& h, const Vector& amplitudes) {
  Vector out = Vector::Zero(amplitudes.size());
  for (const auto& term : h.terms) {
    accumulate_word(term.word, Complex{term.coefficient, 0.0}, amplitudes,
                    out);
  }
  return out;
}

Complex word_expectation(const PauliWord& word, const Vector& amplitudes) {
  const std::int64_t dim = amplitudes.size();
  if ((std::int64_t{1} << word.n_qubits) != dim) {
    throw std::invalid_argument("Pauli word / state dimension mismatch");
  }
  const Complex y_phase = ipow(std::popcount(word.x_mask & word.z_mask));
  const auto x = static_cast<std::int64_t>(word.x_mask);
  Complex acc{0.0, 0.0};
  for (std::int64_t k = 0; k < dim; ++k) {
    const double sign =
        parity(static_cast<std::uint64_t>(k) & word.z_mask) ? -1.0 : 1.0;
    acc += std::conj(amplitudes[k ^ x]) * sign * amplitudes[k];
  }
  return y_phase * acc;
}

double expectation(const QubitHamiltonian& h, const Vector& amplitudes) {
  if ((std::int64_t{1} << h.n_qubits) != amplitudes.size()) {
    throw std::invalid_argument("Hamiltonian / state dimension mismatch");
  }
  const double norm2 = amplitudes.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-10) {
    throw std::invalid_argument("state not normalized: |s|^2 = " +
                                std::to_string(norm2));
  }
  Complex acc{0.0, 0.0};
  for (const auto& term : h.terms) {
    acc += term.coefficient * word_expectation(term.word, amplitudes);
  }
  if (std::abs(acc.imag()) > 1e-12) {
    throw std::runtime_error("expectation has imaginary residue " +
                             std::to_string(acc.imag()));
  }
  return acc.real();
}

QubitHamiltonian builtin_hamiltonian(std::string_view name) {
  // Two-qubit water and formic-acid Hamiltonians (parity-mapped, minimal
  // active space), coefficients in Hartree.
  if (name == "h2o-2q") {
    return parse_hamiltonian(
        "0.297406 IZ\n"
        "-0.297406 ZI\n"
        "-0.074868 ZZ\n"
        "0.038562 XX\n");
  }
  if (name == "hcooh-2q") {
    return parse_hamiltonian(
        "0.147402 IZ\n"
        "-0.147402 ZI\n"
        "-0.050507 ZZ\n"
        "0.015736 XX\n");
  }
  throw std::invalid_argument("unknown built-in Hamiltonian '" +
                              std::string(name) +
                              "' (known: h2o-2q, hcooh-2q)");
}

std::vector<std::string> builtin_hamiltonian_names() {
  return {"h2o-2q", "hcooh-2q"};
}

}  // namespace mubvqe
