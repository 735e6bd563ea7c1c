#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mubvqe/mub.hpp"
#include "mubvqe/vqe.hpp"

namespace mubvqe {

enum class InitStrategy {
  Zero,
  RandomBasis,
  MubPairs,
  MubPairsRandomRest,
  MubFull,
};

InitStrategy parse_strategy(std::string_view name);
std::string_view strategy_name(InitStrategy strategy);

/// Number of trials a `match-mub` random campaign runs: the cardinality of
/// partial_dqes_states(n), i.e. C(n,2)*19 + [n > 2].
int match_mub_trial_count(int n_qubits);

struct CampaignConfig {
  InitStrategy strategy = InitStrategy::MubPairs;
  /// Trial count for random strategies; <= 0 means match-mub.
  int trials = 0;
  std::uint64_t seed = 0;
  EstimatorConfig estimator;
  OptimizerConfig optimizer;
  double mu = 1.4e-3;  // chemical-accuracy threshold, Hartree
  int workers = 0;     // <= 0: MUBVQE_WORKERS env var, else hardware
  bool stop_on_accuracy = false;
};

struct DqesReport {
  std::string strategy;
  double e0 = 0.0;         // exact ground energy used for delta_e
  std::string e0_method;   // dense or lanczos
  std::vector<VqeTrialResult> trials;
  double mean_delta_e = 0.0;
  double min_delta_e = 0.0;
  int accurate_count = 0;  // trials with delta_e < mu
  std::vector<std::string> accurate_labels;
  double mu = 0.0;
  double wall_time_s = 0.0;  // console summary only, never serialized
};

/// One VQE per initial state of the configured strategy. DQES strategies
/// start every trial at theta0 = 0; random strategies draw theta0 uniformly
/// from [-pi, pi) per slot. Trials run on a worker pool and are gathered by
/// index, so reports are deterministic for fixed seeds in exact mode.
DqesReport run_campaign(const QubitHamiltonian& h, const Circuit& circuit,
                        const CampaignConfig& config);

struct StrategyRow {
  std::string strategy;
  int trials = 0;
  double mean_delta_e = 0.0;
  double min_delta_e = 0.0;
  int accurate_count = 0;
};

/// One campaign per config over a shared Hamiltonian and ansatz; rows follow
/// input order.
std::vector<StrategyRow> compare_strategies(
    const QubitHamiltonian& h, const Circuit& circuit,
    const std::vector<CampaignConfig>& configs);

/// Sorted (label, delta_e) spread behind the error-scatter plots. With
/// log_clamp, nonpositive errors are clamped to 1e-16 for display.
std::vector<std::pair<std::string, double>> delta_e_spread(
    const DqesReport& report, bool log_clamp);

/// Worker count resolution: explicit value, else MUBVQE_WORKERS, else
/// hardware concurrency.
int resolve_workers(int requested);

}  // namespace mubvqe
