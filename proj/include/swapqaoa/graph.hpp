#pragma once

#include "swapqaoa/common.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace swapqaoa {

using Edge = std::pair<int, int>;

/// Undirected simple graph. Edges are stored with u < v.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<double> weights;  // one per edge, 1.0 unless given

  [[nodiscard]] std::size_t num_edges() const { return edges.size(); }
  [[nodiscard]] bool unit_weights() const;
  [[nodiscard]] std::vector<std::vector<int>> adjacency() const;
  [[nodiscard]] std::vector<int> degrees() const;
  /// Index of edge (u, v) in `edges`, or -1.
  [[nodiscard]] int edge_index(int u, int v) const;
};

/// Validates and normalizes an edge list: orders each pair, rejects
/// self-loops, duplicates and out-of-range endpoints.
Graph make_graph(int n, std::vector<Edge> edges, std::vector<double> weights = {});

/// Random 3-regular graph by configuration-model pairing with full restart
/// whenever a self-loop or repeated edge appears.
Graph generate_rr3(int n, std::uint64_t seed);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// sum over edges of w_ij * z_i * z_j with z = (-1)^bit.
double energy_of(const Graph& g, std::span<const std::uint8_t> assignment);
int cut_value(const Graph& g, std::span<const std::uint8_t> assignment);

struct CutSolution {
  Bits assignment;
  int cut_value = 0;
  double energy = 0.0;
  bool exact = false;
};

/// Largest n handled by exhaustive search.
inline constexpr int kExhaustiveLimit = 28;

/// Exact (Gray-code scan) for n <= kExhaustiveLimit, otherwise multi-start
/// single-flip local search.
CutSolution maxcut_oracle(const Graph& g, std::uint64_t seed = 0);

/// Minimum and maximum of H_C over all bitstrings.
struct EnergyExtremes {
  double min = 0.0;
  double max = 0.0;
  bool exact = false;
};

EnergyExtremes energy_extremes(const Graph& g, std::uint64_t seed = 0);

/// (mu - max) / (min - max). Throws std::domain_error when min == max.
double approximation_ratio(const EnergyExtremes& extremes, double mu);
double approximation_ratio(const Graph& g, double mu);

/// |E| / (n (n - 1) / 2).
double graph_density(const Graph& g);

nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace swapqaoa
