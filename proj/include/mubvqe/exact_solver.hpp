#pragma once

#include <cstdint>
#include <string_view>

#include "mubvqe/pauli.hpp"

namespace mubvqe {

enum class GroundMethod { Dense, Lanczos };

struct GroundSolution {
  double e0 = 0.0;
  GroundMethod method = GroundMethod::Dense;
  /// ||H v - e0 v||, recomputed from the returned eigenpair rather than
  /// taken from solver internals.
  double residual = 0.0;
  int iterations = 0;  // Krylov steps consumed (Lanczos)
  bool converged = true;
};

/// Smallest eigenvalue by dense Hermitian diagonalization. Limited to
/// kDenseQubitLimit qubits.
GroundSolution ground_energy_dense(const QubitHamiltonian& h);

struct LanczosOptions {
  int max_krylov = 250;
  double tol = 1e-10;  // converged when residual <= tol * max(1, |e0|)
  std::uint64_t seed = 1;
  int max_restarts = 3;
};

/// Smallest eigenvalue by matrix-free Lanczos with full reorthogonalization.
/// On breakdown the iteration restarts from a fresh seeded random vector;
/// after max_restarts the best estimate is returned with converged = false.
GroundSolution ground_energy_lanczos(const QubitHamiltonian& h,
                                     const LanczosOptions& options = {});

std::string_view method_name(GroundMethod method);

}  // namespace mubvqe
