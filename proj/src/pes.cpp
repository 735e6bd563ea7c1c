#include "mubvqe/pes.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mubvqe/dqes.hpp"

namespace mubvqe {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    // Trim surrounding whitespace.
    const auto first = field.find_first_not_of(" \t\r");
    const auto last = field.find_last_not_of(" \t\r");
    fields.push_back(first == std::string::npos
                         ? std::string{}
                         : field.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_double(const std::string& token, std::size_t line_no) {
  double v = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [p, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc{} || p != end || !std::isfinite(v)) {
    throw std::invalid_argument("manifest line " + std::to_string(line_no) +
                                ": bad coordinate '" + token + "'");
  }
  return v;
}

}  // namespace

PesManifest parse_manifest_csv(std::string_view text,
                               const std::filesystem::path& base_dir) {
  PesManifest manifest;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::set<std::vector<double>> seen_coordinates;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split_csv_line(line);
    if (!have_header) {
      if (fields.size() < 2 || fields.back() != "path") {
        throw std::invalid_argument(
            "manifest header must be `coord...,path`");
      }
      manifest.coordinate_names.assign(fields.begin(), fields.end() - 1);
      have_header = true;
      continue;
    }
    if (fields.size() != manifest.coordinate_names.size() + 1) {
      throw std::invalid_argument(
          "manifest line " + std::to_string(line_no) + ": expected " +
          std::to_string(manifest.coordinate_names.size() + 1) + " fields");
    }
    PesManifest::Row row;
    for (std::size_t i = 0; i + 1 < fields.size(); ++i) {
      row.coordinates.push_back(parse_double(fields[i], line_no));
    }
    if (!seen_coordinates.insert(row.coordinates).second) {
      throw std::invalid_argument("manifest line " + std::to_string(line_no) +
                                  ": duplicate coordinates");
    }
    std::filesystem::path p(fields.back());
    row.path = (p.is_absolute() ? p : base_dir / p).string();
    manifest.rows.push_back(std::move(row));
  }
  if (!have_header) {
    throw std::invalid_argument("manifest has no header line");
  }
  return manifest;
}

PesGrid scan(const PesManifest& manifest, SolverChoice solver, int workers) {
  PesGrid grid;
  grid.coordinate_names = manifest.coordinate_names;
  const std::size_t count = manifest.rows.size();
  grid.coordinates.resize(count);
  grid.energies.assign(count, std::numeric_limits<double>::quiet_NaN());
  std::vector<std::string> errors(count);

  auto solve_row = [&](std::size_t i) {
    grid.coordinates[i] = manifest.rows[i].coordinates;
    try {
      std::ifstream in(manifest.rows[i].path);
      if (!in) {
        throw std::runtime_error("cannot open '" + manifest.rows[i].path +
                                 "'");
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      const QubitHamiltonian h = parse_hamiltonian(buffer.str());
      if (solver == SolverChoice::Dense) {
        grid.energies[i] = ground_energy_dense(h).e0;
      } else {
        const GroundSolution g = ground_energy_lanczos(h);
        if (!g.converged) {
          throw std::runtime_error("Lanczos did not converge");
        }
        grid.energies[i] = g.e0;
      }
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  };

  const int pool_size = std::min<int>(
      resolve_workers(workers), count > 0 ? static_cast<int>(count) : 1);
  if (pool_size <= 1) {
    for (std::size_t i = 0; i < count; ++i) solve_row(i);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < pool_size; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = cursor.fetch_add(1); i < count;
             i = cursor.fetch_add(1)) {
          solve_row(i);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  for (std::size_t i = 0; i < count; ++i) {
    if (!errors[i].empty()) {
      grid.failures.push_back({static_cast<int>(i), errors[i]});
    }
  }
  return grid;
}

std::vector<GridExtremum> grid_extrema(const PesGrid& grid) {
  if (grid.coordinate_names.size() != 2) {
    throw std::invalid_argument(
        "extremum classification needs a two-coordinate grid");
  }
  if (!grid.failures.empty()) {
    throw std::invalid_argument("grid has failed rows");
  }
  std::set<double> xs_set, ys_set;
  for (const auto& c : grid.coordinates) {
    xs_set.insert(c[0]);
    ys_set.insert(c[1]);
  }
  const std::vector<double> xs(xs_set.begin(), xs_set.end());
  const std::vector<double> ys(ys_set.begin(), ys_set.end());
  if (xs.size() < 3 || ys.size() < 3) {
    throw std::invalid_argument("grid must be at least 3 x 3");
  }
  if (xs.size() * ys.size() != grid.coordinates.size()) {
    throw std::invalid_argument("grid is not rectangular");
  }
  std::map<std::pair<double, double>, double> value;
  for (std::size_t i = 0; i < grid.coordinates.size(); ++i) {
    value[{grid.coordinates[i][0], grid.coordinates[i][1]}] =
        grid.energies[i];
  }
  if (value.size() != grid.coordinates.size()) {
    throw std::invalid_argument("grid is not rectangular");
  }

  std::vector<GridExtremum> extrema;
  for (std::size_t ix = 1; ix + 1 < xs.size(); ++ix) {
    for (std::size_t iy = 1; iy + 1 < ys.size(); ++iy) {
      const double e = value.at({xs[ix], ys[iy]});
      const double left = value.at({xs[ix - 1], ys[iy]});
      const double right = value.at({xs[ix + 1], ys[iy]});
      const double down = value.at({xs[ix], ys[iy - 1]});
      const double up = value.at({xs[ix], ys[iy + 1]});
      const bool below_x = e < left && e < right;
      const bool above_x = e > left && e > right;
      const bool below_y = e < down && e < up;
      const bool above_y = e > down && e > up;
      if (below_x && below_y) {
        extrema.push_back({{xs[ix], ys[iy]}, ExtremumKind::Minimum});
      } else if (above_x && above_y) {
        extrema.push_back({{xs[ix], ys[iy]}, ExtremumKind::Maximum});
      } else if ((below_x && above_y) || (above_x && below_y)) {
        extrema.push_back({{xs[ix], ys[iy]}, ExtremumKind::Saddle});
      }
    }
  }
  return extrema;
}

std::string_view extremum_name(ExtremumKind kind) {
  switch (kind) {
    case ExtremumKind::Minimum: return "minimum";
    case ExtremumKind::Maximum: return "maximum";
    case ExtremumKind::Saddle: return "saddle";
  }
  return "?";
}

std::string_view solver_name(SolverChoice choice) {
  return choice == SolverChoice::Dense ? "dense" : "lanczos";
}

SolverChoice parse_solver(std::string_view name) {
  if (name == "dense") return SolverChoice::Dense;
  if (name == "lanczos") return SolverChoice::Lanczos;
  throw std::invalid_argument("unknown solver '" + std::string(name) +
                              "' (dense, lanczos)");
}

}  // namespace mubvqe
