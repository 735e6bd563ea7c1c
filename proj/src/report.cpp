#include "mubvqe/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "mubvqe/version.hpp"

namespace mubvqe {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json to_json(const RunRecord& record) {
  Json j;
  j["tool"] = "mubvqe";
  j["version"] = kVersion;
  j["subcommand"] = record.subcommand;
  j["config"] = record.config;
  j["outputs"] = record.outputs;
  return j;
}

Json to_json(const GroundSolution& solution) {
  Json j;
  j["e0"] = solution.e0;
  j["method"] = std::string(method_name(solution.method));
  j["residual"] = solution.residual;
  j["iterations"] = solution.iterations;
  j["converged"] = solution.converged;
  return j;
}

Json to_json(const VqeTrialResult& trial) {
  Json j;
  j["initial_state"] = trial.initial_state_label;
  j["e_final"] = trial.e_final;
  if (trial.delta_e) j["delta_e"] = *trial.delta_e;
  j["converged"] = trial.converged;
  j["iterations"] = trial.iterations;
  j["seed"] = trial.seed;
  j["theta_final"] = std::vector<double>(
      trial.theta_final.begin(), trial.theta_final.end());
  j["trace"] = trial.trace;
  return j;
}

Json to_json(const DqesReport& report) {
  Json j;
  j["strategy"] = report.strategy;
  j["e0"] = report.e0;
  j["e0_method"] = report.e0_method;
  j["mu"] = report.mu;
  j["trial_count"] = report.trials.size();
  j["mean_delta_e"] = report.mean_delta_e;
  j["min_delta_e"] = report.min_delta_e;
  j["accurate_count"] = report.accurate_count;
  j["accurate_labels"] = report.accurate_labels;
  Json trials = Json::array();
  for (const VqeTrialResult& t : report.trials) trials.push_back(to_json(t));
  j["trials"] = std::move(trials);
  return j;
}

Json to_json(const PesGrid& grid) {
  Json j;
  j["coordinates"] = grid.coordinate_names;
  Json rows = Json::array();
  for (std::size_t i = 0; i < grid.coordinates.size(); ++i) {
    Json row;
    row["coords"] = grid.coordinates[i];
    if (std::isfinite(grid.energies[i])) {
      row["e0"] = grid.energies[i];
    } else {
      row["e0"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  Json failures = Json::array();
  for (const auto& f : grid.failures) {
    failures.push_back({{"row", f.row}, {"error", f.message}});
  }
  j["failures"] = std::move(failures);
  return j;
}

Json to_json(const std::vector<StrategyRow>& rows) {
  Json j = Json::array();
  for (const StrategyRow& r : rows) {
    j.push_back({{"strategy", r.strategy},
                 {"trials", r.trials},
                 {"mean_delta_e", r.mean_delta_e},
                 {"min_delta_e", r.min_delta_e},
                 {"accurate_count", r.accurate_count}});
  }
  return j;
}

Json to_json(const std::vector<GridExtremum>& extrema) {
  Json j = Json::array();
  for (const GridExtremum& e : extrema) {
    j.push_back({{"coords", e.coordinates},
                 {"kind", std::string(extremum_name(e.kind))}});
  }
  return j;
}

std::string trace_csv(const VqeTrialResult& trial) {
  if (trial.trace.empty()) {
    throw std::invalid_argument("trial has an empty trace");
  }
  std::string out = "iteration,energy\n";
  for (std::size_t i = 0; i < trial.trace.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += format_double(trial.trace[i]);
    out += '\n';
  }
  out += "best,";
  out += format_double(trial.e_final);
  out += '\n';
  return out;
}

std::string spread_csv(
    const std::vector<std::pair<std::string, double>>& spread) {
  std::string out = "label,delta_e\n";
  for (const auto& [label, delta] : spread) {
    out += label;
    out += ',';
    out += format_double(delta);
    out += '\n';
  }
  return out;
}

std::string comparison_csv(const std::vector<StrategyRow>& rows) {
  std::string out = "strategy,trials,mean_delta_e,min_delta_e,accurate_count\n";
  for (const StrategyRow& r : rows) {
    out += r.strategy;
    out += ',' + std::to_string(r.trials);
    out += ',' + format_double(r.mean_delta_e);
    out += ',' + format_double(r.min_delta_e);
    out += ',' + std::to_string(r.accurate_count);
    out += '\n';
  }
  return out;
}

std::string grid_csv(const PesGrid& grid) {
  std::string out;
  for (const std::string& name : grid.coordinate_names) {
    out += name;
    out += ',';
  }
  out += "E0\n";
  for (std::size_t i = 0; i < grid.coordinates.size(); ++i) {
    for (const double c : grid.coordinates[i]) {
      out += format_double(c);
      out += ',';
    }
    out += std::isfinite(grid.energies[i]) ? format_double(grid.energies[i])
                                           : "nan";
    out += '\n';
  }
  return out;
}

std::string mub_csv(const std::vector<MubBasis>& bases) {
  std::string out = "basis,state,index,re,im\n";
  for (const MubBasis& basis : bases) {
    for (std::size_t s = 0; s < basis.states.size(); ++s) {
      const Vector& amps = basis.states[s].amplitudes;
      for (std::int64_t k = 0; k < amps.size(); ++k) {
        out += std::to_string(basis.label);
        out += ',' + std::to_string(s);
        out += ',' + std::to_string(k);
        out += ',' + format_double(amps[k].real());
        out += ',' + format_double(amps[k].imag());
        out += '\n';
      }
    }
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
  out << body;
}

void write_json_file(const std::string& path, const Json& value) {
  write_text_file(path, value.dump(2) + "\n");
}

}  // namespace mubvqe
