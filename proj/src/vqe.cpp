#include "mubvqe/vqe.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "mubvqe/rng.hpp"

namespace mubvqe {

namespace {

std::vector<double> slot_angles_to_gate_angles(const Circuit& circuit,
                                               const Eigen::VectorXd& theta) {
  std::vector<double> angles(circuit.gates.size(), 0.0);
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    const Gate& g = circuit.gates[i];
    if (g.parameterized()) angles[i] = theta[g.slot];
  }
  return angles;
}

double energy_from_gate_angles(const QubitHamiltonian& h,
                               const Circuit& circuit,
                               std::span<const double> angles,
                               const StateVector& s0) {
  StateVector s = s0;
  apply_circuit_gate_angles(circuit, angles, s);
  return expectation(h, s.amplitudes);
}

// Tracks the best energy seen, the stall window, and the trace shared by
// both optimizers.
struct TraceRecorder {
  explicit TraceRecorder(const OptimizerConfig& cfg) : config(cfg) {}

  void start(double energy, const Eigen::VectorXd& theta) {
    trace.push_back(energy);
    best_energy = energy;
    best_theta = theta;
    previous = energy;
  }

  // Returns true once the sustained-window convergence rule fires.
  bool record(double energy, const Eigen::VectorXd& theta) {
    trace.push_back(energy);
    if (energy < best_energy) {
      best_energy = energy;
      best_theta = theta;
    }
    stall = std::abs(energy - previous) < config.tolerance ? stall + 1 : 0;
    previous = energy;
    return stall >= config.tolerance_window;
  }

  const OptimizerConfig& config;
  std::vector<double> trace;
  double best_energy = 0.0;
  Eigen::VectorXd best_theta;
  double previous = 0.0;
  int stall = 0;
};

using CostFn = std::function<double(const Eigen::VectorXd&)>;

void minimize_adam(const QubitHamiltonian& h, const Circuit& circuit,
                   const StateVector& s0, const CostFn& cost,
                   Eigen::VectorXd theta, TraceRecorder& rec,
                   int& iterations, bool& converged) {
  const int n = circuit.n_params;
  Eigen::VectorXd m = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  const double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;
  for (int t = 1; t <= rec.config.max_iterations; ++t) {
    const Eigen::VectorXd g =
        gradient_parameter_shift(h, circuit, theta, s0);
    m = beta1 * m + (1.0 - beta1) * g;
    v = beta2 * v + (1.0 - beta2) * g.cwiseProduct(g);
    const double mc = 1.0 - std::pow(beta1, t);
    const double vc = 1.0 - std::pow(beta2, t);
    theta -= rec.config.step_size *
             (m / mc).cwiseQuotient(((v / vc).cwiseSqrt().array() + eps)
                                        .matrix());
    iterations = t;
    if (rec.record(cost(theta), theta)) {
      converged = true;
      return;
    }
  }
}

void minimize_nelder_mead(const CostFn& cost, const Eigen::VectorXd& theta0,
                          TraceRecorder& rec, int& iterations,
                          bool& converged) {
  const int n = static_cast<int>(theta0.size());
  // Standard coefficients: reflection 1, expansion 2, contraction 1/2,
  // shrink 1/2.
  std::vector<Eigen::VectorXd> xs;
  std::vector<double> fx;
  xs.push_back(theta0);
  fx.push_back(rec.trace[0]);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd x = theta0;
    x[i] += rec.config.simplex_scale;
    xs.push_back(x);
    fx.push_back(cost(x));
  }

  std::vector<int> order(xs.size());
  for (int t = 1; t <= rec.config.max_iterations; ++t) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return fx[a] < fx[b]; });
    {
      std::vector<Eigen::VectorXd> xs2(xs.size());
      std::vector<double> fx2(fx.size());
      for (std::size_t k = 0; k < order.size(); ++k) {
        xs2[k] = xs[static_cast<std::size_t>(order[k])];
        fx2[k] = fx[static_cast<std::size_t>(order[k])];
      }
      xs.swap(xs2);
      fx.swap(fx2);
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int k = 0; k < n; ++k) centroid += xs[static_cast<std::size_t>(k)];
    centroid /= n;

    const std::size_t worst = xs.size() - 1;
    const Eigen::VectorXd xr = centroid + (centroid - xs[worst]);
    const double fr = cost(xr);
    if (fr < fx[0]) {
      const Eigen::VectorXd xe = centroid + 2.0 * (xr - centroid);
      const double fe = cost(xe);
      if (fe < fr) {
        xs[worst] = xe;
        fx[worst] = fe;
      } else {
        xs[worst] = xr;
        fx[worst] = fr;
      }
    } else if (fr < fx[worst - 1]) {
      xs[worst] = xr;
      fx[worst] = fr;
    } else {
      const bool outside = fr < fx[worst];
      const Eigen::VectorXd xc =
          centroid + 0.5 * ((outside ? xr : xs[worst]) - centroid);
      const double fc = cost(xc);
      if (fc < (outside ? fr : fx[worst])) {
        xs[worst] = xc;
        fx[worst] = fc;
      } else {
        for (std::size_t k = 1; k < xs.size(); ++k) {
          xs[k] = xs[0] + 0.5 * (xs[k] - xs[0]);
          fx[k] = cost(xs[k]);
        }
      }
    }

    const std::size_t best =
        static_cast<std::size_t>(std::distance(
            fx.begin(), std::min_element(fx.begin(), fx.end())));
    iterations = t;
    if (rec.record(fx[best], xs[best])) {
      converged = true;
      return;
    }
  }
}

}  // namespace

double energy_exact(const QubitHamiltonian& h, const Circuit& circuit,
                    const Eigen::VectorXd& theta, const StateVector& s0) {
  const StateVector s = run_circuit(circuit, theta, s0);
  return expectation(h, s.amplitudes);
}

ShotEstimate expectation_shots_detailed(const QubitHamiltonian& h,
                                        const Circuit& circuit,
                                        const Eigen::VectorXd& theta,
                                        const StateVector& s0,
                                        const EstimatorConfig& config) {
  if (config.mode != EstimatorMode::Shots) {
    throw std::invalid_argument("estimator is not in shots mode");
  }
  if (config.shots < 1) {
    throw std::invalid_argument("shots mode needs shots >= 1");
  }
  const StateVector prepared = run_circuit(circuit, theta, s0);

  ShotEstimate out;
  double variance = 0.0;
  std::uint64_t term_index = 0;
  for (const auto& term : h.terms) {
    const std::uint64_t support = term.word.support();
    if (support == 0) {
      out.value += term.coefficient;  // identity term, exact
      ++term_index;
      continue;
    }
    // Rotate the measured word into the computational basis: H for X
    // support, Sdg then H for Y support.
    StateVector rotated = prepared;
    for (int q = 0; q < h.n_qubits; ++q) {
      const bool x = (term.word.x_mask >> q) & 1;
      const bool z = (term.word.z_mask >> q) & 1;
      if (x && z) {
        apply_sdg(rotated, q);
        apply_h(rotated, q);
      } else if (x) {
        apply_h(rotated, q);
      }
    }
    const auto histogram =
        sample(rotated, config.shots, mix_seed(config.seed, term_index));
    std::int64_t sum = 0;
    for (const auto& [index, count] : histogram) {
      const int par = std::popcount(index & support) & 1;
      sum += (par ? -1 : 1) * static_cast<std::int64_t>(count);
    }
    const double mean =
        static_cast<double>(sum) / static_cast<double>(config.shots);
    out.value += term.coefficient * mean;
    if (config.shots > 1) {
      const double sample_var = (1.0 - mean * mean) *
                                static_cast<double>(config.shots) /
                                static_cast<double>(config.shots - 1);
      variance += term.coefficient * term.coefficient * sample_var /
                  static_cast<double>(config.shots);
    }
    ++term_index;
  }
  out.std_error = std::sqrt(variance);
  return out;
}

double expectation_shots(const QubitHamiltonian& h, const Circuit& circuit,
                         const Eigen::VectorXd& theta, const StateVector& s0,
                         const EstimatorConfig& config) {
  return expectation_shots_detailed(h, circuit, theta, s0, config).value;
}

Eigen::VectorXd gradient_parameter_shift(const QubitHamiltonian& h,
                                         const Circuit& circuit,
                                         const Eigen::VectorXd& theta,
                                         const StateVector& s0) {
  if (theta.size() != circuit.n_params) {
    throw std::invalid_argument("parameter vector length mismatch");
  }
  const std::vector<double> base = slot_angles_to_gate_angles(circuit, theta);
  Eigen::VectorXd gradient = Eigen::VectorXd::Zero(circuit.n_params);
  std::vector<double> shifted = base;
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    const Gate& g = circuit.gates[i];
    if (!g.parameterized()) continue;
    shifted[i] = base[i] + std::numbers::pi / 2.0;
    const double plus = energy_from_gate_angles(h, circuit, shifted, s0);
    shifted[i] = base[i] - std::numbers::pi / 2.0;
    const double minus = energy_from_gate_angles(h, circuit, shifted, s0);
    shifted[i] = base[i];
    gradient[g.slot] += (plus - minus) / 2.0;
  }
  return gradient;
}

VqeTrialResult run_vqe(const QubitHamiltonian& h, const Circuit& circuit,
                       const StateVector& s0, const Eigen::VectorXd& theta0,
                       const EstimatorConfig& estimator,
                       const OptimizerConfig& optimizer,
                       std::optional<double> e0) {
  validate(circuit);
  if (theta0.size() != circuit.n_params) {
    throw std::invalid_argument("theta0 length != circuit parameter count");
  }
  if (s0.n_qubits != circuit.n_qubits || h.n_qubits != circuit.n_qubits) {
    throw std::invalid_argument("qubit count mismatch");
  }
  if (optimizer.max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be >= 1");
  }
  if (optimizer.tolerance <= 0.0) {
    throw std::invalid_argument("tolerance must be positive");
  }
  if (estimator.mode == EstimatorMode::Shots &&
      optimizer.method == OptimizerMethod::Adam) {
    throw std::invalid_argument(
        "shot-based gradients are not supported; use nelder-mead with the "
        "shot estimator");
  }

  const CostFn cost = [&](const Eigen::VectorXd& theta) {
    return estimator.mode == EstimatorMode::Exact
               ? energy_exact(h, circuit, theta, s0)
               : expectation_shots(h, circuit, theta, s0, estimator);
  };

  TraceRecorder rec(optimizer);
  rec.start(cost(theta0), theta0);

  VqeTrialResult result;
  result.seed = estimator.seed;
  if (optimizer.method == OptimizerMethod::Adam) {
    minimize_adam(h, circuit, s0, cost, theta0, rec, result.iterations,
                  result.converged);
  } else {
    minimize_nelder_mead(cost, theta0, rec, result.iterations,
                         result.converged);
  }

  result.theta_final = rec.best_theta;
  result.trace = std::move(rec.trace);
  result.e_final = rec.best_energy;
  if (e0) result.delta_e = result.e_final - *e0;
  return result;
}

std::string_view optimizer_name(OptimizerMethod method) {
  return method == OptimizerMethod::Adam ? "adam" : "nelder-mead";
}

std::string_view estimator_name(EstimatorMode mode) {
  return mode == EstimatorMode::Exact ? "exact" : "shots";
}

}  // namespace mubvqe
