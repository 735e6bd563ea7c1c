#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "mubvqe/dqes.hpp"
#include "mubvqe/exact_solver.hpp"
#include "mubvqe/pes.hpp"

namespace mubvqe {

using Json = nlohmann::ordered_json;

/// Provenance block embedded in every JSON report: subcommand, fully
/// resolved configuration (all defaults materialized), tool version, and the
/// artifact paths produced. Exact-mode runs replay byte-identically from it.
struct RunRecord {
  std::string subcommand;
  Json config;
  std::vector<std::string> outputs;
};

Json to_json(const RunRecord& record);
Json to_json(const GroundSolution& solution);
Json to_json(const VqeTrialResult& trial);
Json to_json(const DqesReport& report);
Json to_json(const PesGrid& grid);
Json to_json(const std::vector<StrategyRow>& rows);
Json to_json(const std::vector<GridExtremum>& extrema);

/// Format a double with 17 significant digits (lossless round-trip).
std::string format_double(double v);

/// CSV bodies, fixed column orders. All doubles use format_double.
std::string trace_csv(const VqeTrialResult& trial);
std::string spread_csv(
    const std::vector<std::pair<std::string, double>>& spread);
std::string comparison_csv(const std::vector<StrategyRow>& rows);
std::string grid_csv(const PesGrid& grid);
std::string mub_csv(const std::vector<MubBasis>& bases);

void write_text_file(const std::string& path, const std::string& body);
void write_json_file(const std::string& path, const Json& value);

}  // namespace mubvqe
