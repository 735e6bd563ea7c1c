#include <doctest.h>

#include <cmath>

#include "mubvqe/pauli.hpp"
#include "mubvqe/statevector.hpp"
#include "test_helpers.hpp"

using namespace mubvqe;
using testhelpers::dense_hamiltonian;
using testhelpers::dense_word;
using testhelpers::random_hamiltonian;
using testhelpers::random_state;

TEST_CASE("word round-trips through text") {
  const PauliWord w = PauliWord::from_string("IXYZ");
  CHECK(w.n_qubits == 4);
  CHECK(w.str() == "IXYZ");
  CHECK(w.axis(0) == 'Z');
  CHECK(w.axis(1) == 'Y');
  CHECK(w.axis(2) == 'X');
  CHECK(w.axis(3) == 'I');
  CHECK(w.weight() == 3);
  CHECK_THROWS_AS(PauliWord::from_string("XQ"), std::invalid_argument);
  CHECK_THROWS_AS(PauliWord::from_string(""), std::invalid_argument);
}

TEST_CASE("parser handles the formic-acid document") {
  const auto h = parse_hamiltonian(
      "0.297406 IZ\n-0.297406 ZI\n-0.074868 ZZ\n0.038562 XX");
  CHECK(h.n_qubits == 2);
  CHECK(h.terms.size() == 4);
  CHECK(h.terms[0].coefficient == doctest::Approx(0.297406));
  CHECK(h.terms[0].word.str() == "IZ");
  CHECK(h.terms[3].word.str() == "XX");
}

TEST_CASE("parser identity and duplicate merge") {
  const auto identity = parse_hamiltonian("1.0 II");
  CHECK(identity.n_qubits == 2);
  CHECK(identity.terms.size() == 1);
  CHECK(identity.terms[0].word.is_identity());

  const auto merged = parse_hamiltonian("0.5 ZZ\n0.5 ZZ");
  CHECK(merged.terms.size() == 1);
  CHECK(merged.terms[0].coefficient == doctest::Approx(1.0));

  // Cancellation below 1e-15 drops the term entirely.
  CHECK_THROWS_AS(parse_hamiltonian("0.5 ZZ\n-0.5 ZZ"),
                  std::invalid_argument);
}

TEST_CASE("parser accepts comments, blanks and scientific notation") {
  const auto h = parse_hamiltonian(
      "# a comment line\n"
      "\n"
      "2.5e-1 XY   # trailing comment\n"
      "-1e0 ZI\n");
  CHECK(h.terms.size() == 2);
  CHECK(h.terms[0].coefficient == doctest::Approx(0.25));
  CHECK(h.terms[1].coefficient == doctest::Approx(-1.0));
}

TEST_CASE("parser reports the offending line") {
  using Catcher = std::invalid_argument;
  CHECK_THROWS_WITH_AS(parse_hamiltonian("1.0 ZZ\nabc ZZ"),
                       doctest::Contains("line 2"), Catcher);
  CHECK_THROWS_WITH_AS(parse_hamiltonian("1.0 ZZ\n2.0 QQ"),
                       doctest::Contains("line 2"), Catcher);
  CHECK_THROWS_WITH_AS(parse_hamiltonian("1.0 ZZ\n2.0 ZZZ"),
                       doctest::Contains("line 2"), Catcher);
  CHECK_THROWS_AS(parse_hamiltonian(""), Catcher);
  CHECK_THROWS_AS(parse_hamiltonian("# only comments\n"), Catcher);
}

TEST_CASE("serialize/parse round-trip preserves the term map") {
  const auto h = random_hamiltonian(4, 12, 99);
  const auto reparsed = parse_hamiltonian(serialize_hamiltonian(h));
  REQUIRE(reparsed.terms.size() == h.terms.size());
  for (std::size_t i = 0; i < h.terms.size(); ++i) {
    CHECK(reparsed.terms[i].word == h.terms[i].word);
    CHECK(reparsed.terms[i].coefficient == h.terms[i].coefficient);
  }
}

TEST_CASE("dense single-Z matrix") {
  const auto h = parse_hamiltonian("1.0 Z");
  const Matrix m = to_dense(h);
  CHECK(m(0, 0) == Complex(1.0, 0.0));
  CHECK(m(1, 1) == Complex(-1.0, 0.0));
  CHECK(m(0, 1) == Complex(0.0, 0.0));
  CHECK(m(1, 0) == Complex(0.0, 0.0));
}

TEST_CASE("dense formic-acid matrix matches the hand expansion") {
  const auto h = builtin_hamiltonian("hcooh-2q");
  const Matrix m = to_dense(h);
  // Diagonal from summing the Z-type words, off-diagonal from XX.
  CHECK(m(0, 0).real() == doctest::Approx(-0.050507).epsilon(1e-12));
  CHECK(m(1, 1).real() == doctest::Approx(-0.244297).epsilon(1e-12));
  CHECK(m(2, 2).real() == doctest::Approx(0.345311).epsilon(1e-12));
  CHECK(m(3, 3).real() == doctest::Approx(-0.050507).epsilon(1e-12));
  CHECK(m(0, 3).real() == doctest::Approx(0.015736));
  CHECK(m(1, 2).real() == doctest::Approx(0.015736));
  CHECK(m(0, 1) == Complex(0.0, 0.0));
  CHECK(m(0, 2) == Complex(0.0, 0.0));
}

TEST_CASE("dense XX is the half anti-diagonal") {
  const auto h = parse_hamiltonian("0.5 XX");
  const Matrix m = to_dense(h);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(m(i, j) == (i + j == 3 ? Complex(0.5, 0.0) : Complex(0.0, 0.0)));
    }
  }
}

TEST_CASE("dense agrees with the Kronecker oracle and is exactly Hermitian") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto h = random_hamiltonian(3, 8, seed);
    std::vector<std::pair<double, std::string>> terms;
    for (const auto& t : h.terms) terms.push_back({t.coefficient, t.word.str()});
    const Matrix mine = to_dense(h);
    const Matrix oracle = dense_hamiltonian(terms);
    CHECK((mine - oracle).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((mine - mine.adjoint().eval()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("dense limit enforced") {
  std::string word(13, 'Z');
  CHECK_THROWS_AS(to_dense(parse_hamiltonian("1.0 " + word)),
                  std::invalid_argument);
}

TEST_CASE("apply_word identity and bit flips") {
  const Vector s = random_state(2, 5);
  const Vector same = apply_word(PauliWord::from_string("II"), s);
  CHECK((same - s).norm() < 1e-15);

  const Vector zz = basis_state(2, 0).amplitudes;
  const Vector flipped = apply_word(PauliWord::from_string("XX"), zz);
  CHECK(std::abs(flipped[3] - Complex(1.0, 0.0)) < 1e-15);
  CHECK(flipped.head(3).norm() < 1e-15);
}

TEST_CASE("ZY on |01> gives -i|00>") {
  const Vector s = basis_state(2, 1).amplitudes;
  const Vector out = apply_word(PauliWord::from_string("ZY"), s);
  CHECK(std::abs(out[0] - Complex(0.0, -1.0)) < 1e-15);
  CHECK(out.tail(3).norm() < 1e-15);
  // Same answer via the dense route.
  const Vector oracle = dense_word("ZY") * s;
  CHECK((out - oracle).norm() < 1e-14);
}

TEST_CASE("apply_word matches dense products on random words") {
  Rng rng(31);
  const char axes[4] = {'I', 'X', 'Y', 'Z'};
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_index(5));
    std::string text;
    for (int q = 0; q < n; ++q) text += axes[rng.uniform_index(4)];
    const PauliWord w = PauliWord::from_string(text);
    const Vector s = random_state(n, 1000 + trial);
    const Vector mine = apply_word(w, s);
    const Vector oracle = dense_word(text) * s;
    CHECK((mine - oracle).norm() < 1e-13);
    CHECK(mine.norm() == doctest::Approx(s.norm()).epsilon(1e-12));
  }
}

TEST_CASE("applying a word twice restores the state") {
  for (const char* text : {"XYZI", "YYYY", "ZIZI", "XXXX", "IYIY"}) {
    const Vector s = random_state(4, 77);
    const PauliWord w = PauliWord::from_string(text);
    const Vector back = apply_word(w, apply_word(w, s));
    CHECK((back - s).norm() < 1e-14);
  }
}

TEST_CASE("expectation of the water Hamiltonian in |00>") {
  const auto h = builtin_hamiltonian("h2o-2q");
  const double e = expectation(h, basis_state(2, 0).amplitudes);
  // IZ and ZI cancel, ZZ contributes its coefficient, XX nothing.
  CHECK(e == doctest::Approx(-0.074868).epsilon(1e-12));
}

TEST_CASE("expectation of identity is one") {
  const auto h = parse_hamiltonian("1.0 II");
  CHECK(expectation(h, random_state(2, 8)) == doctest::Approx(1.0));
}

TEST_CASE("expectation matches the dense quadratic form") {
  for (std::uint64_t seed : {11u, 12u, 13u, 14u}) {
    const int n = 2 + static_cast<int>(seed % 5);  // up to 6
    const auto h = random_hamiltonian(n, 10, seed);
    const Vector s = random_state(n, seed * 7);
    const double mine = expectation(h, s);
    const double oracle = std::real(Complex(s.dot(to_dense(h) * s)));
    CHECK(mine == doctest::Approx(oracle).epsilon(1e-10));
  }
}

TEST_CASE("expectation rejects non-normalized states") {
  const auto h = parse_hamiltonian("1.0 Z");
  Vector s(2);
  s << 1.0, 1.0;
  CHECK_THROWS_AS(expectation(h, s), std::invalid_argument);
}

TEST_CASE("expectation rejects dimension mismatch") {
  const auto h = parse_hamiltonian("1.0 ZZ");
  CHECK_THROWS_AS(expectation(h, basis_state(3, 0).amplitudes),
                  std::invalid_argument);
}

TEST_CASE("apply_word rejects length mismatch") {
  CHECK_THROWS_AS(apply_word(PauliWord::from_string("XX"),
                             basis_state(3, 0).amplitudes),
                  std::invalid_argument);
}

TEST_CASE("commutation test agrees with dense commutators") {
  Rng rng(4242);
  const char axes[4] = {'I', 'X', 'Y', 'Z'};
  for (int trial = 0; trial < 30; ++trial) {
    std::string a, b;
    for (int q = 0; q < 3; ++q) {
      a += axes[rng.uniform_index(4)];
      b += axes[rng.uniform_index(4)];
    }
    const Matrix ma = dense_word(a);
    const Matrix mb = dense_word(b);
    const bool commute = (ma * mb - mb * ma).cwiseAbs().maxCoeff() < 1e-12;
    CHECK(PauliWord::from_string(a).commutes_with(PauliWord::from_string(b)) ==
          commute);
  }
}

TEST_CASE("builtin registry") {
  CHECK(builtin_hamiltonian("h2o-2q").terms.size() == 4);
  CHECK(builtin_hamiltonian("hcooh-2q").terms.size() == 4);
  CHECK_THROWS_AS(builtin_hamiltonian("nope"), std::invalid_argument);
}
