#include "swapqaoa/lightcone.hpp"

#include "swapqaoa/circuit.hpp"
#include "swapqaoa/common.hpp"
#include "swapqaoa/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace swapqaoa {

namespace {

using cd = std::complex<double>;

void check_angles(int p, const std::vector<double>& gamma, const std::vector<double>& beta) {
  if (p < 1) throw std::invalid_argument("depth p must be >= 1");
  if (static_cast<int>(gamma.size()) != p || static_cast<int>(beta.size()) != p) {
    throw std::invalid_argument("need exactly p gamma and p beta values");
  }
}

// Diagonal of H_C restricted to the given edges, over wires 0..m-1.
std::vector<double> cost_diagonal(int m, const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<double>& weights) {
  std::vector<double> diag(std::size_t{1} << m, 0.0);
  for (std::size_t x = 0; x < diag.size(); ++x) {
    double e = 0.0;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const bool differ = (((x >> edges[k].first) ^ (x >> edges[k].second)) & 1U) != 0;
      e += differ ? -weights[k] : weights[k];
    }
    diag[x] = e;
  }
  return diag;
}

// Runs the QAOA state on m wires and returns it.
Statevector qaoa_state(int m, const std::vector<double>& diag, const std::vector<double>& gamma,
                       const std::vector<double>& beta) {
  Statevector sv(m);
  auto& amp = sv.amplitudes();
  const double a0 = 1.0 / std::sqrt(static_cast<double>(amp.size()));
  std::fill(amp.begin(), amp.end(), cd{a0, 0.0});
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    for (std::size_t x = 0; x < amp.size(); ++x) amp[x] *= std::polar(1.0, -gamma[k] * diag[x]);
    // exp(i β X) = RX(-2β)
    const Matrix2 mixer = single_qubit_matrix(GateKind::RX, -2.0 * beta[k]);
    for (int w = 0; w < m; ++w) sv.apply_1q(mixer, w);
  }
  return sv;
}

double zz_expectation(const Statevector& sv, int a, int b) {
  double s = 0.0;
  const auto& amp = sv.amplitudes();
  for (std::size_t x = 0; x < amp.size(); ++x) {
    const bool differ = (((x >> a) ^ (x >> b)) & 1U) != 0;
    s += differ ? -std::norm(amp[x]) : std::norm(amp[x]);
  }
  return s;
}

}  // namespace

int lightcone_bound(int p) {
  if (p < 0) throw std::invalid_argument("depth must be non-negative");
  int total = 0;
  for (int k = 0; k <= p; ++k) total += 1 << (k + 1);
  return total;
}

LightCone extract_lightcone(const Graph& g, Edge edge, int p) {
  if (p < 1) throw std::invalid_argument("depth p must be >= 1");
  if (edge.first > edge.second) std::swap(edge.first, edge.second);
  if (g.edge_index(edge.first, edge.second) < 0) {
    throw std::invalid_argument("(" + std::to_string(edge.first) + ", " + std::to_string(edge.second) +
                                ") is not an edge of the graph");
  }
  const auto adj = g.adjacency();
  std::vector<int> dist(static_cast<std::size_t>(g.n), std::numeric_limits<int>::max());
  std::deque<int> queue{edge.first, edge.second};
  dist[edge.first] = 0;
  dist[edge.second] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (dist[u] == p) continue;
    for (int v : adj[u]) {
      if (dist[v] > dist[u] + 1) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  LightCone cone;
  cone.edge = edge;
  cone.p = p;
  for (int v = 0; v < g.n; ++v) {
    if (dist[v] <= p) {
      cone.relabeling[v] = static_cast<int>(cone.nodes.size());
      cone.nodes.push_back(v);
    }
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [u, v] = g.edges[e];
    if (std::min(dist[u], dist[v]) <= p - 1) {
      cone.sub_edges.push_back(g.edges[e]);
      cone.sub_weights.push_back(g.weights[e]);
    }
  }
  return cone;
}

double correlator(const LightCone& cone, const std::vector<double>& gamma, const std::vector<double>& beta) {
  check_angles(cone.p, gamma, beta);
  const int m = cone.width();
  if (m > kLightconeWidthLimit) {
    throw std::invalid_argument("light cone of width " + std::to_string(m) + " exceeds the limit of " +
                                std::to_string(kLightconeWidthLimit));
  }
  std::vector<std::pair<int, int>> local;
  local.reserve(cone.sub_edges.size());
  for (const auto& [u, v] : cone.sub_edges) local.emplace_back(cone.relabeling.at(u), cone.relabeling.at(v));
  const auto diag = cost_diagonal(m, local, cone.sub_weights);
  const Statevector sv = qaoa_state(m, diag, gamma, beta);
  return zz_expectation(sv, cone.relabeling.at(cone.edge.first), cone.relabeling.at(cone.edge.second));
}

double correlator(const Graph& g, Edge edge, int p, const std::vector<double>& gamma,
                  const std::vector<double>& beta) {
  check_angles(p, gamma, beta);
  return correlator(extract_lightcone(g, edge, p), gamma, beta);
}

std::vector<double> edge_correlators(const Graph& g, int p, const std::vector<double>& gamma,
                                     const std::vector<double>& beta, unsigned threads) {
  check_angles(p, gamma, beta);
  std::vector<double> out(g.edges.size());
  parallel_for(
      g.edges.size(), [&](std::size_t e) { out[e] = correlator(g, g.edges[e], p, gamma, beta); }, threads);
  return out;
}

double energy(const Graph& g, int p, const std::vector<double>& gamma, const std::vector<double>& beta,
              unsigned threads) {
  const auto zz = edge_correlators(g, p, gamma, beta, threads);
  double total = 0.0;
  for (std::size_t e = 0; e < zz.size(); ++e) total += g.weights[e] * zz[e];
  return total;
}

std::vector<double> full_statevector_correlators(const Graph& g, int p, const std::vector<double>& gamma,
                                                 const std::vector<double>& beta) {
  check_angles(p, gamma, beta);
  const auto diag = cost_diagonal(g.n, g.edges, g.weights);
  const Statevector sv = qaoa_state(g.n, diag, gamma, beta);
  std::vector<double> out;
  out.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges) out.push_back(zz_expectation(sv, u, v));
  return out;
}

Landscape::Point Landscape::argmin() const {
  Point best{0, 0, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < energies.size(); ++i) {
    for (std::size_t j = 0; j < energies[i].size(); ++j) {
      if (energies[i][j] < best.value) best = {i, j, energies[i][j]};
    }
  }
  if (!std::isfinite(best.value)) throw std::logic_error("empty landscape");
  return best;
}

double Landscape::min() const { return argmin().value; }

double Landscape::max() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& row : energies) {
    for (double e : row) m = std::max(m, e);
  }
  return m;
}

double Landscape::contrast() const { return max() - min(); }

std::string Landscape::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "gamma,beta,energy\n";
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    for (std::size_t j = 0; j < betas.size(); ++j) os << gammas[i] << ',' << betas[j] << ',' << energies[i][j] << '\n';
  }
  return os.str();
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count == 0) throw std::invalid_argument("linspace needs at least one point");
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < count; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  return out;
}

Landscape lightcone_landscape(const Graph& g, const std::vector<double>& gammas, const std::vector<double>& betas,
                              unsigned threads) {
  Landscape land;
  land.gammas = gammas;
  land.betas = betas;
  land.energies.assign(gammas.size(), std::vector<double>(betas.size(), 0.0));
  // Cones depend only on the graph, so extract them once.
  std::vector<LightCone> cones;
  for (const auto& e : g.edges) cones.push_back(extract_lightcone(g, e, 1));
  parallel_for(
      gammas.size() * betas.size(),
      [&](std::size_t idx) {
        const std::size_t i = idx / betas.size();
        const std::size_t j = idx % betas.size();
        double total = 0.0;
        for (std::size_t e = 0; e < cones.size(); ++e) {
          total += g.weights[e] * correlator(cones[e], {gammas[i]}, {betas[j]});
        }
        land.energies[i][j] = total;
      },
      threads);
  return land;
}

nlohmann::json to_json(const LightCone& cone) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : cone.sub_edges) edges.push_back({u, v});
  return {{"edge", {cone.edge.first, cone.edge.second}},
          {"p", cone.p},
          {"nodes", cone.nodes},
          {"sub_edges", edges},
          {"width", cone.width()}};
}

}  // namespace swapqaoa
