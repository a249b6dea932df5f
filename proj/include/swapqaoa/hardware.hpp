#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace swapqaoa {

/// Undirected coupling graph with a two-qubit gate error per coupling.
struct CouplingMap {
  int num_qubits = 0;
  std::vector<std::pair<int, int>> edges;  // a < b, sorted
  std::map<std::pair<int, int>, double> gate_errors;

  [[nodiscard]] std::vector<std::vector<int>> adjacency() const;
  /// Error of coupling (a, b) in either order; 0 when uncalibrated.
  [[nodiscard]] double error(int a, int b) const;
  /// Throws std::invalid_argument on self-loops, duplicates, bad indices or
  /// errors outside [0, 1).
  void validate() const;
};

CouplingMap make_coupling_map(int num_qubits, std::vector<std::pair<int, int>> edges,
                              std::map<std::pair<int, int>, double> errors = {});

/// Heavy-hex lattice of `rows` rows, each 4 * cells + 3 qubits wide, joined by
/// bridge qubits on every fourth column (offset by two on alternate gaps). The
/// first row drops its last column and the last row the unused end column.
/// heavy_hex(7, 3) reproduces the 127-qubit Eagle numbering.
CouplingMap heavy_hex(int rows, int cells);

/// The bundled 127-qubit fixture with its calibration snapshot.
CouplingMap eagle127();

struct LineOptions {
  bool directed = false;  // count a path and its reverse separately
  unsigned threads = 0;
};

/// Number of simple paths on `length` vertices.
std::uint64_t count_lines(const CouplingMap& map, int length, const LineOptions& options = {});

/// Calls visit(path) for every path, in increasing lexicographic order of the
/// vertex sequence. Undirected mode visits the orientation whose first vertex
/// is smaller than its last.
void enumerate_lines(const CouplingMap& map, int length, const std::function<void(const std::vector<int>&)>& visit,
                     bool directed = false);

/// Product over consecutive pairs of (1 - error).
double path_fidelity(const CouplingMap& map, const std::vector<int>& path);

struct BestLine {
  std::vector<int> path;
  double fidelity = 0.0;
  std::uint64_t lines = 0;  // undirected lines considered
};

/// Highest-fidelity line; ties go to the lexicographically smallest path.
BestLine best_line(const CouplingMap& map, int length, unsigned threads = 0);

nlohmann::json to_json(const CouplingMap& map);
CouplingMap coupling_map_from_json(const nlohmann::json& j);
CouplingMap load_coupling_map(const std::string& path);

}  // namespace swapqaoa
