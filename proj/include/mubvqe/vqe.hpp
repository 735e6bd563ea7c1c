#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mubvqe/circuit.hpp"
#include "mubvqe/pauli.hpp"
#include "mubvqe/statevector.hpp"

namespace mubvqe {

enum class EstimatorMode { Exact, Shots };

struct EstimatorConfig {
  EstimatorMode mode = EstimatorMode::Exact;
  std::uint64_t shots = 1024;  // per Pauli term, shots mode only
  std::uint64_t seed = 0;
};

enum class OptimizerMethod { Adam, NelderMead };

struct OptimizerConfig {
  OptimizerMethod method = OptimizerMethod::Adam;
  int max_iterations = 1000;
  /// Converged when |energy change| stays below `tolerance` for
  /// `tolerance_window` consecutive iterations.
  double tolerance = 1e-9;
  int tolerance_window = 25;
  double step_size = 0.05;      // Adam learning rate
  double simplex_scale = 0.25;  // Nelder-Mead initial vertex offset
};

struct VqeTrialResult {
  std::string initial_state_label;
  Eigen::VectorXd theta_final;
  std::vector<double> trace;  // energy per iteration, trace[0] = C(theta0)
  double e_final = 0.0;       // min over trace (best-so-far)
  std::optional<double> delta_e;  // e_final - e0 when e0 was supplied
  bool converged = false;
  int iterations = 0;  // optimizer steps taken
  std::uint64_t seed = 0;
};

/// Exact cost C(theta) = <s|H|s> with s = U(theta)|s0>.
double energy_exact(const QubitHamiltonian& h, const Circuit& circuit,
                    const Eigen::VectorXd& theta, const StateVector& s0);

struct ShotEstimate {
  double value = 0.0;
  /// Standard error from per-term sample variances:
  /// sqrt(sum_P c_P^2 var_P / shots).
  double std_error = 0.0;
};

/// Shot-based cost: per Pauli term, run the circuit, rotate X support with
/// H and Y support with Sdg then H, sample the term's shot budget, estimate
/// <P> as the mean parity over the non-identity positions, and combine with
/// the coefficients. Deterministic per seed.
ShotEstimate expectation_shots_detailed(const QubitHamiltonian& h,
                                        const Circuit& circuit,
                                        const Eigen::VectorXd& theta,
                                        const StateVector& s0,
                                        const EstimatorConfig& config);

double expectation_shots(const QubitHamiltonian& h, const Circuit& circuit,
                         const Eigen::VectorXd& theta, const StateVector& s0,
                         const EstimatorConfig& config);

/// Exact gradient via the parameter-shift rule: each parameterized gate
/// occurrence is shifted by +-pi/2 separately and the halved differences
/// accumulate into its slot, which handles shared slots by the product
/// rule. Exact-estimator only.
Eigen::VectorXd gradient_parameter_shift(const QubitHamiltonian& h,
                                         const Circuit& circuit,
                                         const Eigen::VectorXd& theta,
                                         const StateVector& s0);

/// Minimize the cost from theta0, recording the full energy trace. The
/// best-so-far energy and parameters are returned even without convergence;
/// non-convergence is a flag, not an error.
VqeTrialResult run_vqe(const QubitHamiltonian& h, const Circuit& circuit,
                       const StateVector& s0, const Eigen::VectorXd& theta0,
                       const EstimatorConfig& estimator,
                       const OptimizerConfig& optimizer,
                       std::optional<double> e0 = std::nullopt);

std::string_view optimizer_name(OptimizerMethod method);
std::string_view estimator_name(EstimatorMode mode);

}  // namespace mubvqe
