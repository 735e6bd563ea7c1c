// Command-line surface: diag, vqe, dqes, scan, mubs.
//
// JSON artifacts embed a run record (tool version plus the fully resolved
// configuration, including the Hamiltonian and ansatz text), so exact-mode
// runs can be replayed byte-for-byte with `dqes --replay <report.json>`.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "mubvqe/ansatz.hpp"
#include "mubvqe/dqes.hpp"
#include "mubvqe/exact_solver.hpp"
#include "mubvqe/mub.hpp"
#include "mubvqe/pes.hpp"
#include "mubvqe/report.hpp"
#include "mubvqe/rng.hpp"
#include "mubvqe/version.hpp"

namespace {

using namespace mubvqe;

constexpr int kExitValidation = 1;
constexpr int kExitNoConvergence = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// `--hamiltonian` accepts a built-in name or a file path; the resolved text
// is what gets archived in the run record.
struct HamiltonianSource {
  std::string selector;
  std::string text;
  QubitHamiltonian hamiltonian;
};

HamiltonianSource load_hamiltonian(const std::string& selector) {
  HamiltonianSource source;
  source.selector = selector;
  for (const std::string& name : builtin_hamiltonian_names()) {
    if (selector == name) {
      source.hamiltonian = builtin_hamiltonian(name);
      source.text = serialize_hamiltonian(source.hamiltonian);
      return source;
    }
  }
  source.text = read_file(selector);
  source.hamiltonian = parse_hamiltonian(source.text);
  return source;
}

struct AnsatzSource {
  std::string selector;
  int reps = 3;
  std::string entanglement = "linear";
  bool skip_final_rotation = false;
  std::string file_text;  // file: ansatz only
  Circuit circuit;
};

AnsatzSource load_ansatz(const std::string& selector, int n_qubits, int reps,
                         const std::string& entanglement,
                         bool skip_final_rotation) {
  AnsatzSource source;
  source.selector = selector;
  source.reps = reps;
  source.entanglement = entanglement;
  source.skip_final_rotation = skip_final_rotation;
  if (selector.starts_with("file:")) {
    source.file_text = read_file(selector.substr(5));
    source.circuit = parse_ansatz_file(source.file_text);
    if (source.circuit.n_qubits != n_qubits) {
      throw std::invalid_argument(
          "ansatz file is " + std::to_string(source.circuit.n_qubits) +
          "-qubit, problem has " + std::to_string(n_qubits));
    }
  } else {
    source.circuit =
        resolve_ansatz(selector, n_qubits, reps,
                       parse_entanglement(entanglement),
                       !skip_final_rotation)
            .circuit;
  }
  return source;
}

OptimizerMethod parse_optimizer(const std::string& name) {
  if (name == "adam") return OptimizerMethod::Adam;
  if (name == "nelder-mead") return OptimizerMethod::NelderMead;
  throw std::invalid_argument("unknown optimizer '" + name +
                              "' (adam, nelder-mead)");
}

GroundSolution ground_energy_auto(const QubitHamiltonian& h) {
  return h.n_qubits <= kDenseQubitLimit ? ground_energy_dense(h)
                                        : ground_energy_lanczos(h);
}

// ---------------------------------------------------------------- diag ---

struct DiagArgs {
  std::string hamiltonian;
  std::string solver = "dense";
  int max_krylov = 250;
  double tol = 1e-10;
  std::uint64_t seed = 1;
  std::string out;
};

int run_diag(const DiagArgs& args) {
  const HamiltonianSource source = load_hamiltonian(args.hamiltonian);
  GroundSolution solution;
  if (parse_solver(args.solver) == SolverChoice::Dense) {
    solution = ground_energy_dense(source.hamiltonian);
  } else {
    LanczosOptions options;
    options.max_krylov = args.max_krylov;
    options.tol = args.tol;
    options.seed = args.seed;
    solution = ground_energy_lanczos(source.hamiltonian, options);
  }

  RunRecord record;
  record.subcommand = "diag";
  record.config = {{"hamiltonian", args.hamiltonian},
                   {"hamiltonian_text", source.text},
                   {"solver", args.solver},
                   {"max_krylov", args.max_krylov},
                   {"tol", args.tol},
                   {"seed", args.seed}};
  if (!args.out.empty()) record.outputs.push_back(args.out);

  Json j;
  j["run_record"] = to_json(record);
  j["result"] = to_json(solution);
  if (!args.out.empty()) write_json_file(args.out, j);

  std::printf("E0 = %.12f (%s, residual %.3e, %d iterations)%s\n",
              solution.e0, std::string(method_name(solution.method)).c_str(),
              solution.residual, solution.iterations,
              solution.converged ? "" : " [NOT CONVERGED]");
  return solution.converged ? 0 : kExitNoConvergence;
}

// ----------------------------------------------------------------- vqe ---

struct VqeArgs {
  std::string hamiltonian;
  std::string ansatz = "efficient-su2";
  int reps = 3;
  std::string entanglement = "linear";
  bool skip_final_rotation = false;
  std::uint64_t state_index = 0;
  std::string theta0 = "zero";
  std::uint64_t seed = 0;
  std::string optimizer = "adam";
  int max_iter = 1000;
  double step = 0.05;
  double nm_scale = 0.25;
  std::uint64_t shots = 0;  // 0 = exact
  std::string out;
  std::string trace;
};

int run_vqe_command(const VqeArgs& args) {
  const HamiltonianSource source = load_hamiltonian(args.hamiltonian);
  const int n = source.hamiltonian.n_qubits;
  const AnsatzSource ansatz =
      load_ansatz(args.ansatz, n, args.reps, args.entanglement,
                  args.skip_final_rotation);

  EstimatorConfig estimator;
  estimator.mode = args.shots > 0 ? EstimatorMode::Shots : EstimatorMode::Exact;
  estimator.shots = args.shots > 0 ? args.shots : 1024;
  estimator.seed = args.seed;

  OptimizerConfig optimizer;
  optimizer.method = parse_optimizer(args.optimizer);
  optimizer.max_iterations = args.max_iter;
  optimizer.step_size = args.step;
  optimizer.simplex_scale = args.nm_scale;

  Eigen::VectorXd theta0 = Eigen::VectorXd::Zero(ansatz.circuit.n_params);
  if (args.theta0 == "random") {
    Rng rng(mix_seed(args.seed, 0));
    for (int k = 0; k < ansatz.circuit.n_params; ++k) {
      theta0[k] = rng.uniform(-std::numbers::pi, std::numbers::pi);
    }
  } else if (args.theta0 != "zero") {
    throw std::invalid_argument("--theta0 must be zero or random");
  }

  const GroundSolution ground = ground_energy_auto(source.hamiltonian);
  const StateVector s0 = basis_state(n, args.state_index);
  VqeTrialResult result =
      run_vqe(source.hamiltonian, ansatz.circuit, s0, theta0, estimator,
              optimizer, ground.e0);
  result.initial_state_label = "basis/" + std::to_string(args.state_index);
  result.seed = args.seed;

  RunRecord record;
  record.subcommand = "vqe";
  record.config = {{"hamiltonian", args.hamiltonian},
                   {"hamiltonian_text", source.text},
                   {"ansatz", args.ansatz},
                   {"reps", args.reps},
                   {"entanglement", args.entanglement},
                   {"skip_final_rotation", args.skip_final_rotation},
                   {"ansatz_text", ansatz.file_text},
                   {"state", args.state_index},
                   {"theta0", args.theta0},
                   {"seed", args.seed},
                   {"optimizer", args.optimizer},
                   {"max_iter", args.max_iter},
                   {"step", args.step},
                   {"nm_scale", args.nm_scale},
                   {"shots", args.shots}};
  if (!args.out.empty()) record.outputs.push_back(args.out);
  if (!args.trace.empty()) record.outputs.push_back(args.trace);

  Json j;
  j["run_record"] = to_json(record);
  j["e0"] = ground.e0;
  j["result"] = to_json(result);
  if (!args.out.empty()) write_json_file(args.out, j);
  if (!args.trace.empty()) write_text_file(args.trace, trace_csv(result));

  std::printf(
      "E_final = %.12f, delta_e = %.3e, %s after %d iterations\n",
      result.e_final, result.delta_e.value_or(0.0),
      result.converged ? "converged" : "not converged", result.iterations);
  return 0;
}

// ---------------------------------------------------------------- dqes ---

struct DqesArgs {
  std::string hamiltonian;
  std::string ansatz = "efficient-su2";
  int reps = 3;
  std::string entanglement = "linear";
  bool skip_final_rotation = false;
  std::string init = "mub-pairs";
  std::string trials = "match-mub";
  std::uint64_t seed = 0;
  int max_iter = 1000;
  std::string optimizer = "adam";
  double step = 0.05;
  double nm_scale = 0.25;
  std::uint64_t shots = 0;
  double mu = 1.4e-3;
  int workers = 0;
  bool stop_on_accuracy = false;
  bool log_clamp = false;
  std::string compare;  // comma-separated strategy list
  std::string out;
  std::string csv;
  std::string replay;
};

CampaignConfig campaign_config_from(const DqesArgs& args,
                                    InitStrategy strategy) {
  CampaignConfig config;
  config.strategy = strategy;
  if (args.trials == "match-mub") {
    config.trials = 0;
  } else {
    config.trials = std::stoi(args.trials);
    if (config.trials < 1) {
      throw std::invalid_argument("--trials must be positive or match-mub");
    }
  }
  config.seed = args.seed;
  config.estimator.mode =
      args.shots > 0 ? EstimatorMode::Shots : EstimatorMode::Exact;
  config.estimator.shots = args.shots > 0 ? args.shots : 1024;
  config.optimizer.method = parse_optimizer(args.optimizer);
  config.optimizer.max_iterations = args.max_iter;
  config.optimizer.step_size = args.step;
  config.optimizer.simplex_scale = args.nm_scale;
  config.mu = args.mu;
  config.workers = args.workers;
  config.stop_on_accuracy = args.stop_on_accuracy;
  return config;
}

DqesArgs dqes_args_from_record(const Json& config) {
  DqesArgs args;
  args.hamiltonian = config.at("hamiltonian").get<std::string>();
  args.ansatz = config.at("ansatz").get<std::string>();
  args.reps = config.at("reps").get<int>();
  args.entanglement = config.at("entanglement").get<std::string>();
  args.skip_final_rotation = config.at("skip_final_rotation").get<bool>();
  args.init = config.at("init").get<std::string>();
  args.trials = config.at("trials").get<std::string>();
  args.seed = config.at("seed").get<std::uint64_t>();
  args.max_iter = config.at("max_iter").get<int>();
  args.optimizer = config.at("optimizer").get<std::string>();
  args.step = config.at("step").get<double>();
  args.nm_scale = config.at("nm_scale").get<double>();
  args.shots = config.at("shots").get<std::uint64_t>();
  args.mu = config.at("mu").get<double>();
  args.workers = config.at("workers").get<int>();
  args.stop_on_accuracy = config.at("stop_on_accuracy").get<bool>();
  args.log_clamp = config.at("log_clamp").get<bool>();
  args.compare = config.at("compare").get<std::string>();
  return args;
}

int run_dqes(DqesArgs args) {
  HamiltonianSource source;
  AnsatzSource ansatz;
  if (!args.replay.empty()) {
    const Json report = Json::parse(read_file(args.replay));
    const Json& config = report.at("run_record").at("config");
    const std::string out_override = args.out;
    const std::string csv_override = args.csv;
    args = dqes_args_from_record(config);
    args.out = out_override;
    args.csv = csv_override;
    // Re-run from the archived text so the replay is self-contained.
    source.selector = args.hamiltonian;
    source.text = config.at("hamiltonian_text").get<std::string>();
    source.hamiltonian = parse_hamiltonian(source.text);
    const std::string ansatz_text =
        config.at("ansatz_text").get<std::string>();
    ansatz.selector = args.ansatz;
    ansatz.reps = args.reps;
    if (!ansatz_text.empty()) {
      ansatz.file_text = ansatz_text;
      ansatz.circuit = parse_ansatz_file(ansatz_text);
    } else {
      ansatz.circuit =
          resolve_ansatz(args.ansatz, source.hamiltonian.n_qubits, args.reps,
                         parse_entanglement(args.entanglement),
                         !args.skip_final_rotation)
              .circuit;
    }
  } else {
    source = load_hamiltonian(args.hamiltonian);
    ansatz = load_ansatz(args.ansatz, source.hamiltonian.n_qubits, args.reps,
                         args.entanglement, args.skip_final_rotation);
  }

  RunRecord record;
  record.subcommand = "dqes";
  record.config = {{"hamiltonian", args.hamiltonian},
                   {"hamiltonian_text", source.text},
                   {"ansatz", args.ansatz},
                   {"reps", args.reps},
                   {"entanglement", args.entanglement},
                   {"skip_final_rotation", args.skip_final_rotation},
                   {"ansatz_text", ansatz.file_text},
                   {"init", args.init},
                   {"trials", args.trials},
                   {"seed", args.seed},
                   {"max_iter", args.max_iter},
                   {"optimizer", args.optimizer},
                   {"step", args.step},
                   {"nm_scale", args.nm_scale},
                   {"shots", args.shots},
                   {"mu", args.mu},
                   {"workers", args.workers},
                   {"stop_on_accuracy", args.stop_on_accuracy},
                   {"log_clamp", args.log_clamp},
                   {"compare", args.compare}};
  if (!args.out.empty()) record.outputs.push_back(args.out);
  if (!args.csv.empty()) record.outputs.push_back(args.csv);

  if (!args.compare.empty()) {
    std::vector<CampaignConfig> configs;
    std::stringstream list(args.compare);
    std::string item;
    while (std::getline(list, item, ',')) {
      configs.push_back(campaign_config_from(args, parse_strategy(item)));
    }
    const auto rows =
        compare_strategies(source.hamiltonian, ansatz.circuit, configs);
    Json j;
    j["run_record"] = to_json(record);
    j["comparison"] = to_json(rows);
    if (!args.out.empty()) write_json_file(args.out, j);
    if (!args.csv.empty()) write_text_file(args.csv, comparison_csv(rows));
    for (const StrategyRow& row : rows) {
      std::printf("%-22s %5d trials, mean dE = %.3e, min dE = %.3e, %d "
                  "within mu\n",
                  row.strategy.c_str(), row.trials, row.mean_delta_e,
                  row.min_delta_e, row.accurate_count);
    }
    return 0;
  }

  const CampaignConfig config =
      campaign_config_from(args, parse_strategy(args.init));
  const DqesReport report =
      run_campaign(source.hamiltonian, ansatz.circuit, config);

  Json j;
  j["run_record"] = to_json(record);
  j["report"] = to_json(report);
  if (!args.out.empty()) write_json_file(args.out, j);
  if (!args.csv.empty()) {
    write_text_file(args.csv,
                    spread_csv(delta_e_spread(report, args.log_clamp)));
  }

  std::printf(
      "%s: %zu trials, min dE = %.3e, mean dE = %.3e, %d within mu = %.2e, "
      "E0 = %.9f, %.1f s\n",
      report.strategy.c_str(), report.trials.size(), report.min_delta_e,
      report.mean_delta_e, report.accurate_count, report.mu, report.e0,
      report.wall_time_s);
  return 0;
}

// ---------------------------------------------------------------- scan ---

struct ScanArgs {
  std::string manifest;
  std::string solver = "dense";
  std::string out;
  std::string json;
  bool extrema = false;
  int workers = 0;
};

int run_scan(const ScanArgs& args) {
  const PesManifest manifest = parse_manifest_csv(
      read_file(args.manifest),
      std::filesystem::path(args.manifest).parent_path());
  if (manifest.rows.empty()) {
    std::printf("warning: empty manifest, nothing to scan\n");
  }
  const PesGrid grid =
      scan(manifest, parse_solver(args.solver), args.workers);

  RunRecord record;
  record.subcommand = "scan";
  record.config = {{"manifest", args.manifest},
                   {"solver", args.solver},
                   {"extrema", args.extrema},
                   {"workers", args.workers}};
  if (!args.out.empty()) record.outputs.push_back(args.out);
  if (!args.json.empty()) record.outputs.push_back(args.json);

  Json j;
  j["run_record"] = to_json(record);
  j["grid"] = to_json(grid);
  if (args.extrema && grid.failures.empty() && !manifest.rows.empty()) {
    j["extrema"] = to_json(grid_extrema(grid));
  }
  if (!args.out.empty()) write_text_file(args.out, grid_csv(grid));
  if (!args.json.empty()) write_json_file(args.json, j);

  for (const auto& failure : grid.failures) {
    std::fprintf(stderr, "row %d failed: %s\n", failure.row,
                 failure.message.c_str());
  }
  std::printf("scanned %zu rows (%zu failed)\n", grid.coordinates.size(),
              grid.failures.size());
  if (args.extrema && grid.failures.empty() && !manifest.rows.empty()) {
    for (const GridExtremum& e : grid_extrema(grid)) {
      std::string coords;
      for (double c : e.coordinates) {
        coords += (coords.empty() ? "" : ", ") + format_double(c);
      }
      std::printf("%s at (%s)\n",
                  std::string(extremum_name(e.kind)).c_str(), coords.c_str());
    }
  }
  return grid.failures.empty() ? 0 : kExitNoConvergence;
}

// ---------------------------------------------------------------- mubs ---

struct MubsArgs {
  int qubits = 1;
  std::string out;
};

int run_mubs(const MubsArgs& args) {
  const auto bases = full_mubs(args.qubits);
  const std::string csv = mub_csv(bases);
  if (args.out.empty()) {
    std::fputs(csv.c_str(), stdout);
  } else {
    write_text_file(args.out, csv);
  }
  std::size_t states = 0;
  for (const auto& b : bases) states += b.states.size();
  std::fprintf(args.out.empty() ? stderr : stdout,
               "%zu bases, %zu states\n", bases.size(), states);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Statevector VQE with MUB-seeded restarts, exact ground-state "
               "oracles, and PES scans"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  DiagArgs diag;
  auto* diag_cmd =
      app.add_subcommand("diag", "Exact ground energy of a Hamiltonian");
  diag_cmd->add_option("--hamiltonian", diag.hamiltonian,
                       "Built-in name (h2o-2q, hcooh-2q) or file path")
      ->required();
  diag_cmd->add_option("--solver", diag.solver, "dense or lanczos");
  diag_cmd->add_option("--max-krylov", diag.max_krylov,
                       "Lanczos subspace cap");
  diag_cmd->add_option("--tol", diag.tol, "Lanczos residual tolerance");
  diag_cmd->add_option("--seed", diag.seed, "Lanczos start-vector seed");
  diag_cmd->add_option("--out", diag.out, "JSON report path");

  VqeArgs vqe;
  auto* vqe_cmd = app.add_subcommand("vqe", "Single VQE trial");
  vqe_cmd->add_option("--hamiltonian", vqe.hamiltonian, "Name or path")
      ->required();
  vqe_cmd->add_option("--ansatz", vqe.ansatz,
                      "efficient-su2, uccsd2, or file:<path>");
  vqe_cmd->add_option("--reps", vqe.reps, "efficient-su2 repetitions");
  vqe_cmd->add_option("--entanglement", vqe.entanglement,
                      "efficient-su2 entangler: linear or full");
  vqe_cmd->add_flag("--skip-final-rotation", vqe.skip_final_rotation,
                    "Drop the trailing efficient-su2 rotation layer");
  vqe_cmd->add_option("--state", vqe.state_index,
                      "Initial computational basis state index");
  vqe_cmd->add_option("--theta0", vqe.theta0, "zero or random");
  vqe_cmd->add_option("--seed", vqe.seed, "Seed for theta0/shots");
  vqe_cmd->add_option("--optimizer", vqe.optimizer, "adam or nelder-mead");
  vqe_cmd->add_option("--max-iter", vqe.max_iter, "Iteration budget");
  vqe_cmd->add_option("--step", vqe.step, "Adam step size");
  vqe_cmd->add_option("--nm-scale", vqe.nm_scale,
                      "Nelder-Mead simplex scale");
  vqe_cmd->add_option("--shots", vqe.shots,
                      "Shots per Pauli term (0 = exact estimator)");
  vqe_cmd->add_option("--out", vqe.out, "JSON report path");
  vqe_cmd->add_option("--trace", vqe.trace, "Energy-trace CSV path");

  DqesArgs dqes;
  auto* dqes_cmd =
      app.add_subcommand("dqes", "Multi-start VQE campaign over a strategy");
  dqes_cmd->add_option("--hamiltonian", dqes.hamiltonian, "Name or path");
  dqes_cmd->add_option("--ansatz", dqes.ansatz,
                       "efficient-su2, uccsd2, or file:<path>");
  dqes_cmd->add_option("--reps", dqes.reps, "efficient-su2 repetitions");
  dqes_cmd->add_option("--entanglement", dqes.entanglement,
                       "efficient-su2 entangler: linear or full");
  dqes_cmd->add_flag("--skip-final-rotation", dqes.skip_final_rotation,
                     "Drop the trailing efficient-su2 rotation layer");
  dqes_cmd->add_option("--init", dqes.init,
                       "zero, random-basis, mub-pairs, mub-pairs-random-rest,"
                       " mub-full");
  dqes_cmd->add_option("--trials", dqes.trials,
                       "Trial count for random strategies, or match-mub");
  dqes_cmd->add_option("--seed", dqes.seed, "Campaign seed");
  dqes_cmd->add_option("--max-iter", dqes.max_iter, "Iteration budget");
  dqes_cmd->add_option("--optimizer", dqes.optimizer, "adam or nelder-mead");
  dqes_cmd->add_option("--step", dqes.step, "Adam step size");
  dqes_cmd->add_option("--nm-scale", dqes.nm_scale,
                       "Nelder-Mead simplex scale");
  dqes_cmd->add_option("--shots", dqes.shots,
                       "Shots per Pauli term (0 = exact estimator)");
  dqes_cmd->add_option("--mu", dqes.mu, "Chemical-accuracy threshold");
  dqes_cmd->add_option("--workers", dqes.workers,
                       "Worker pool width (default MUBVQE_WORKERS or cores)");
  dqes_cmd->add_flag("--stop-on-accuracy", dqes.stop_on_accuracy,
                     "Stop scheduling trials once one reaches mu");
  dqes_cmd->add_flag("--log-clamp", dqes.log_clamp,
                     "Clamp nonpositive delta_e to 1e-16 in the spread CSV");
  dqes_cmd->add_option("--compare", dqes.compare,
                       "Comma-separated strategies; emit a comparison table");
  dqes_cmd->add_option("--out", dqes.out, "JSON report path");
  dqes_cmd->add_option("--csv", dqes.csv, "delta_e spread CSV path");
  dqes_cmd->add_option("--replay", dqes.replay,
                       "Re-run the campaign archived in a JSON report");

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand(
      "scan", "Ground energies over a manifest of Hamiltonians");
  scan_cmd->add_option("--manifest", scan_args.manifest,
                       "CSV manifest (`coord...,path` header)")
      ->required();
  scan_cmd->add_option("--solver", scan_args.solver, "dense or lanczos");
  scan_cmd->add_option("--out", scan_args.out, "Grid CSV path");
  scan_cmd->add_option("--json", scan_args.json, "JSON report path");
  scan_cmd->add_flag("--extrema", scan_args.extrema,
                     "Classify interior grid points");
  scan_cmd->add_option("--workers", scan_args.workers, "Worker pool width");

  MubsArgs mubs;
  auto* mubs_cmd = app.add_subcommand(
      "mubs", "Print mutually unbiased bases as amplitude tables");
  mubs_cmd->add_option("--qubits", mubs.qubits, "Qubit count (1..5)")
      ->required();
  mubs_cmd->add_option("--out", mubs.out, "CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (diag_cmd->parsed()) return run_diag(diag);
    if (vqe_cmd->parsed()) return run_vqe_command(vqe);
    if (dqes_cmd->parsed()) {
      if (dqes.replay.empty() && dqes.hamiltonian.empty()) {
        throw std::invalid_argument("--hamiltonian is required");
      }
      return run_dqes(dqes);
    }
    if (scan_cmd->parsed()) return run_scan(scan_args);
    if (mubs_cmd->parsed()) return run_mubs(mubs);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  }
  return kExitValidation;
}
