#pragma once

#include "swapqaoa/graph.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace swapqaoa {

enum class Parity { Even, Odd };

/// Brick-pattern swap network on a line of n positions. An even layer swaps
/// (0,1), (2,3), ...; an odd layer swaps (1,2), (3,4), ....
struct BrickSchedule {
  int n = 0;
  int num_layers = 0;
  Parity first_parity = Parity::Even;
  /// permutations[t][q] is the position, after t layers, of the element that
  /// started at position q. permutations[0] is the identity.
  std::vector<std::vector<int>> permutations;

  [[nodiscard]] Parity layer_parity(int t) const;
  /// Line pairs (q, q+1) swapped by layer t.
  [[nodiscard]] std::vector<std::pair<int, int>> layer_pairs(int t) const;
};

BrickSchedule brick_permutations(int n, int num_layers, Parity first_parity = Parity::Even);

struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;  // DIMACS literals

  [[nodiscard]] std::string to_dimacs() const;
};

enum class AtMostOne { Auto, Pairwise, Sequential };

struct MapperOptions {
  Parity first_parity = Parity::Even;
  AtMostOne at_most_one = AtMostOne::Auto;  // Auto: pairwise for n <= 20
  /// Restrict node 0 to the left half of the line. Sound only when the
  /// network is symmetric under line reversal (n even); ignored otherwise.
  bool break_reversal_symmetry = true;
  /// Per feasibility call; < 0 means unlimited.
  std::int64_t conflict_budget = -1;
};

/// Variable x(v, q) = v * n + q + 1 means node v starts at line position q.
struct FeasibilityEncoding {
  int n = 0;
  int num_layers = 0;
  Cnf cnf;
  [[nodiscard]] int var(int node, int position) const { return node * n + position + 1; }
};

/// One-hot placement (exactly one position per node, at most one node per
/// position) plus, for every edge (u, v) and start position q of u, a clause
/// forcing v onto a position that becomes adjacent to q within num_layers.
FeasibilityEncoding encode_feasibility(const Graph& g, int num_layers, const MapperOptions& options = {});

struct MappingSolution {
  std::vector<int> sigma;       // node -> initial line position
  int num_layers = 0;           // minimal layer count
  Parity first_parity = Parity::Even;
  std::vector<int> edge_times;  // per edge, earliest t with endpoints adjacent
};

enum class Feasibility { Feasible, Infeasible, Unknown };

struct FeasibilityResult {
  Feasibility status = Feasibility::Unknown;
  std::vector<int> sigma;  // valid when Feasible
};

FeasibilityResult check_feasibility(const Graph& g, int num_layers, const MapperOptions& options = {});

/// Earliest time each edge's endpoints are line-adjacent under the network.
/// Throws if some edge never becomes adjacent within the schedule.
std::vector<int> schedule_edges(const Graph& g, const std::vector<int>& sigma, const BrickSchedule& schedule);

/// Binary search over the layer count in [0, max_layers].
MappingSolution solve_min_layers(const Graph& g, int max_layers, const MapperOptions& options = {});

/// Throws std::invalid_argument if the solution is inconsistent with g.
void validate_mapping(const Graph& g, const MappingSolution& m);

nlohmann::json to_json(const MappingSolution& m);
MappingSolution mapping_from_json(const nlohmann::json& j);

}  // namespace swapqaoa
