#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mubvqe/exact_solver.hpp"

namespace mubvqe {

/// Coordinate-tagged list of Hamiltonian files. The coordinates are pure
/// metadata (labels/units chosen by the user); the Hamiltonian file per row
/// is the input boundary.
struct PesManifest {
  std::vector<std::string> coordinate_names;
  struct Row {
    std::vector<double> coordinates;
    std::string path;
  };
  std::vector<Row> rows;
};

/// Parse the manifest CSV (`coord...,path` header). Relative paths resolve
/// against base_dir. Duplicate coordinate tuples and ragged rows are
/// rejected.
PesManifest parse_manifest_csv(std::string_view text,
                               const std::filesystem::path& base_dir);

struct PesGrid {
  std::vector<std::string> coordinate_names;
  std::vector<std::vector<double>> coordinates;  // one entry per row
  std::vector<double> energies;  // NaN where the row failed
  struct Failure {
    int row = 0;  // 0-based manifest row index
    std::string message;
  };
  std::vector<Failure> failures;
};

enum class SolverChoice { Dense, Lanczos };

/// Ground energy per manifest row. Rows are solved independently (and
/// concurrently); failures are collected with row indices and leave NaN in
/// the energy slot, the rest of the scan continues. Output order follows
/// the manifest.
PesGrid scan(const PesManifest& manifest, SolverChoice solver,
             int workers = 0);

enum class ExtremumKind { Minimum, Maximum, Saddle };

struct GridExtremum {
  std::vector<double> coordinates;
  ExtremumKind kind;
};

/// Classify interior points of a rectangular two-coordinate grid by their
/// 4-neighborhood: minimum strictly below all four neighbors, maximum
/// strictly above, saddle strictly below along one axis and strictly above
/// along the other. Ties are excluded. Requires a complete rectangular grid
/// of at least 3 x 3 distinct coordinate values per axis.
std::vector<GridExtremum> grid_extrema(const PesGrid& grid);

std::string_view extremum_name(ExtremumKind kind);
std::string_view solver_name(SolverChoice choice);
SolverChoice parse_solver(std::string_view name);

}  // namespace mubvqe
