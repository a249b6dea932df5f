#pragma once

#include "swapqaoa/graph.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

namespace swapqaoa {

/// The part of a graph that can influence <Z_i Z_j> after p QAOA layers.
struct LightCone {
  Edge edge;
  int p = 0;
  std::vector<int> nodes;          // sorted; reduced wire k holds nodes[k]
  std::vector<Edge> sub_edges;     // original labels
  std::vector<double> sub_weights;
  std::map<int, int> relabeling;   // node -> reduced wire

  [[nodiscard]] int width() const { return static_cast<int>(nodes.size()); }
};

/// Largest reduced circuit simulated densely.
inline constexpr int kLightconeWidthLimit = 24;

/// Sum over k = 0..p of 2^(k+1): the cone width bound for 3-regular graphs.
int lightcone_bound(int p);

/// Nodes within distance p of {i, j}; edges with an endpoint within p - 1.
LightCone extract_lightcone(const Graph& g, Edge edge, int p);

/// Exact noiseless <Z_i Z_j> of the depth-p state
/// prod_k exp(i β_k ΣX) exp(-i γ_k H_C) |+>^n, evaluated on the cone.
double correlator(const LightCone& cone, const std::vector<double>& gamma, const std::vector<double>& beta);
double correlator(const Graph& g, Edge edge, int p, const std::vector<double>& gamma,
                  const std::vector<double>& beta);

/// Per-edge correlators in edge order.
std::vector<double> edge_correlators(const Graph& g, int p, const std::vector<double>& gamma,
                                     const std::vector<double>& beta, unsigned threads = 0);

/// <H_C> = Σ w_e <Z_i Z_j>, summed in edge order.
double energy(const Graph& g, int p, const std::vector<double>& gamma, const std::vector<double>& beta,
              unsigned threads = 0);

/// Reference <Z_i Z_j> for every edge from one full-graph statevector.
std::vector<double> full_statevector_correlators(const Graph& g, int p, const std::vector<double>& gamma,
                                                 const std::vector<double>& beta);

/// Depth-one energy grid: energies[i][j] at (gammas[i], betas[j]).
struct Landscape {
  std::vector<double> gammas;
  std::vector<double> betas;
  std::vector<std::vector<double>> energies;

  struct Point {
    std::size_t gamma_index = 0;
    std::size_t beta_index = 0;
    double value = 0.0;
  };
  [[nodiscard]] Point argmin() const;
  [[nodiscard]] double min() const;
  [[nodiscard]] double max() const;
  /// max - min over the grid.
  [[nodiscard]] double contrast() const;
  [[nodiscard]] std::string to_csv() const;
};

std::vector<double> linspace(double lo, double hi, std::size_t count);

Landscape lightcone_landscape(const Graph& g, const std::vector<double>& gammas, const std::vector<double>& betas,
                              unsigned threads = 0);

nlohmann::json to_json(const LightCone& cone);

}  // namespace swapqaoa
