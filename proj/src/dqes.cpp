#include "mubvqe/dqes.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "mubvqe/exact_solver.hpp"
#include "mubvqe/rng.hpp"

namespace mubvqe {

namespace {

bool is_dqes_strategy(InitStrategy s) {
  return s != InitStrategy::RandomBasis;
}

InitialStateSet enumerate_states(InitStrategy strategy, int n_qubits,
                                 int trials, std::uint64_t seed) {
  switch (strategy) {
    case InitStrategy::Zero: {
      InitialStateSet set;
      set.n_qubits = n_qubits;
      set.entries.push_back({"zero", basis_state(n_qubits, 0)});
      return set;
    }
    case InitStrategy::RandomBasis:
      return random_basis_states(n_qubits, trials, seed);
    case InitStrategy::MubPairs:
      return partial_dqes_states(n_qubits);
    case InitStrategy::MubPairsRandomRest:
      return mub_pairs_random_rest(n_qubits, seed);
    case InitStrategy::MubFull:
      return full_mub_states(n_qubits);
  }
  throw std::invalid_argument("unknown strategy");
}

}  // namespace

InitStrategy parse_strategy(std::string_view name) {
  if (name == "zero") return InitStrategy::Zero;
  if (name == "random-basis") return InitStrategy::RandomBasis;
  if (name == "mub-pairs") return InitStrategy::MubPairs;
  if (name == "mub-pairs-random-rest") return InitStrategy::MubPairsRandomRest;
  if (name == "mub-full") return InitStrategy::MubFull;
  throw std::invalid_argument(
      "unknown init strategy '" + std::string(name) +
      "' (zero, random-basis, mub-pairs, mub-pairs-random-rest, mub-full)");
}

std::string_view strategy_name(InitStrategy strategy) {
  switch (strategy) {
    case InitStrategy::Zero: return "zero";
    case InitStrategy::RandomBasis: return "random-basis";
    case InitStrategy::MubPairs: return "mub-pairs";
    case InitStrategy::MubPairsRandomRest: return "mub-pairs-random-rest";
    case InitStrategy::MubFull: return "mub-full";
  }
  return "?";
}

int match_mub_trial_count(int n_qubits) {
  if (n_qubits < 2) {
    throw std::invalid_argument("match-mub needs at least 2 qubits");
  }
  return n_qubits * (n_qubits - 1) / 2 * 19 + (n_qubits > 2 ? 1 : 0);
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MUBVQE_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

DqesReport run_campaign(const QubitHamiltonian& h, const Circuit& circuit,
                        const CampaignConfig& config) {
  validate(h);
  if (h.n_qubits != circuit.n_qubits) {
    throw std::invalid_argument("Hamiltonian and ansatz widths differ");
  }
  if (config.mu <= 0.0) {
    throw std::invalid_argument("accuracy threshold mu must be positive");
  }
  const auto t_start = std::chrono::steady_clock::now();

  const int trials = config.strategy == InitStrategy::RandomBasis &&
                             config.trials <= 0
                         ? match_mub_trial_count(h.n_qubits)
                         : config.trials;
  const InitialStateSet states =
      enumerate_states(config.strategy, h.n_qubits, trials, config.seed);

  DqesReport report;
  report.strategy = std::string(strategy_name(config.strategy));
  report.mu = config.mu;
  if (h.n_qubits <= kDenseQubitLimit) {
    const GroundSolution g = ground_energy_dense(h);
    report.e0 = g.e0;
    report.e0_method = method_name(g.method);
  } else {
    const GroundSolution g = ground_energy_lanczos(h);
    if (!g.converged) {
      throw std::runtime_error("ground-energy Lanczos did not converge");
    }
    report.e0 = g.e0;
    report.e0_method = method_name(g.method);
  }

  const bool zero_theta = is_dqes_strategy(config.strategy);
  const std::size_t count = states.entries.size();
  report.trials.resize(count);

  auto run_trial = [&](std::size_t index) {
    const std::uint64_t trial_seed = mix_seed(config.seed, index);
    Eigen::VectorXd theta0 = Eigen::VectorXd::Zero(circuit.n_params);
    if (!zero_theta) {
      Rng rng(trial_seed);
      for (int k = 0; k < circuit.n_params; ++k) {
        theta0[k] = rng.uniform(-std::numbers::pi, std::numbers::pi);
      }
    }
    EstimatorConfig estimator = config.estimator;
    estimator.seed = trial_seed;
    VqeTrialResult r =
        run_vqe(h, circuit, states.entries[index].state, theta0, estimator,
                config.optimizer, report.e0);
    r.initial_state_label = states.entries[index].label;
    r.seed = trial_seed;
    report.trials[index] = std::move(r);
  };

  const int workers =
      std::min<int>(resolve_workers(config.workers),
                    static_cast<int>(count) > 0 ? static_cast<int>(count) : 1);
  if (config.stop_on_accuracy) {
    // Evaluate in waves of `workers` so the early stop is deterministic.
    std::size_t next = 0;
    bool hit = false;
    while (next < count && !hit) {
      const std::size_t end =
          std::min(count, next + static_cast<std::size_t>(workers));
      std::vector<std::thread> pool;
      for (std::size_t i = next; i < end; ++i) {
        pool.emplace_back(run_trial, i);
      }
      for (auto& t : pool) t.join();
      for (std::size_t i = next; i < end; ++i) {
        if (report.trials[i].delta_e && *report.trials[i].delta_e < config.mu) {
          hit = true;
        }
      }
      next = end;
    }
    report.trials.resize(next);
  } else if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) run_trial(i);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = cursor.fetch_add(1); i < count;
             i = cursor.fetch_add(1)) {
          run_trial(i);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  // Aggregates in trial-index order so recomputation is bit-exact.
  double sum = 0.0;
  report.min_delta_e = std::numeric_limits<double>::infinity();
  for (const VqeTrialResult& r : report.trials) {
    const double d = *r.delta_e;
    sum += d;
    report.min_delta_e = std::min(report.min_delta_e, d);
    if (d < config.mu) {
      ++report.accurate_count;
      report.accurate_labels.push_back(r.initial_state_label);
    }
  }
  report.mean_delta_e =
      report.trials.empty() ? 0.0 : sum / static_cast<double>(report.trials.size());
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return report;
}

std::vector<StrategyRow> compare_strategies(
    const QubitHamiltonian& h, const Circuit& circuit,
    const std::vector<CampaignConfig>& configs) {
  std::vector<StrategyRow> rows;
  for (const CampaignConfig& config : configs) {
    const DqesReport report = run_campaign(h, circuit, config);
    rows.push_back({report.strategy, static_cast<int>(report.trials.size()),
                    report.mean_delta_e, report.min_delta_e,
                    report.accurate_count});
  }
  return rows;
}

std::vector<std::pair<std::string, double>> delta_e_spread(
    const DqesReport& report, bool log_clamp) {
  std::vector<std::pair<std::string, double>> spread;
  spread.reserve(report.trials.size());
  for (const VqeTrialResult& r : report.trials) {
    double d = *r.delta_e;
    if (log_clamp && d <= 0.0) d = 1e-16;
    spread.emplace_back(r.initial_state_label, d);
  }
  std::stable_sort(spread.begin(), spread.end(),
                   [](const auto& a, const auto& b) {
                     return a.second < b.second;
                   });
  return spread;
}

}  // namespace mubvqe
