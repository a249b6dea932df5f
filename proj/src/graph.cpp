#include "swapqaoa/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace swapqaoa {

bool Graph::unit_weights() const {
  return std::all_of(weights.begin(), weights.end(), [](double w) { return w == 1.0; });
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k].first == u && edges[k].second == v) return static_cast<int>(k);
  }
  return -1;
}

Graph make_graph(int n, std::vector<Edge> edges, std::vector<double> weights) {
  if (n < 1) throw std::invalid_argument("graph needs at least one node");
  if (weights.empty()) weights.assign(edges.size(), 1.0);
  if (weights.size() != edges.size()) {
    throw std::invalid_argument("weights length " + std::to_string(weights.size()) +
                                " does not match edge count " + std::to_string(edges.size()));
  }
  std::set<Edge> seen;
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop on node " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range for n = " + std::to_string(n));
    }
    if (!seen.insert({u, v}).second) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    }
  }
  return Graph{n, std::move(edges), std::move(weights)};
}

Graph generate_rr3(int n, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("3-regular graphs need n >= 4");
  if ((3 * n) % 2 != 0) throw std::invalid_argument("no 3-regular graph exists for odd n");
  Rng rng(seed);
  std::vector<int> stubs(static_cast<std::size_t>(3 * n));
  for (;;) {
    for (int v = 0; v < n; ++v) {
      for (int k = 0; k < 3; ++k) stubs[3 * v + k] = v;
    }
    // Fisher-Yates with our own index draws so the result only depends on the
    // engine, not on the standard library's distribution implementation.
    for (std::size_t i = stubs.size() - 1; i > 0; --i) {
      const auto j = static_cast<std::size_t>(rng() % (i + 1));
      std::swap(stubs[i], stubs[j]);
    }
    std::set<Edge> seen;
    bool ok = true;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      int u = stubs[i];
      int v = stubs[i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      if (u > v) std::swap(u, v);
      if (!seen.insert({u, v}).second) {
        ok = false;
        break;
      }
    }
    if (ok) return make_graph(n, {seen.begin(), seen.end()});
  }
}

bool is_connected(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == g.n;
}

bool is_bipartite(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<int> color(static_cast<std::size_t>(g.n), -1);
  for (int s = 0; s < g.n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int v : adj[u]) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          frontier.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

void check_length(const Graph& g, std::span<const std::uint8_t> a) {
  if (static_cast<int>(a.size()) != g.n) {
    throw std::invalid_argument("assignment length " + std::to_string(a.size()) +
                                " does not match n = " + std::to_string(g.n));
  }
}

// Weighted adjacency in CSR form for the scan loops.
struct Csr {
  std::vector<int> offset;
  std::vector<int> target;
  std::vector<double> weight;
};

Csr build_csr(const Graph& g) {
  Csr csr;
  csr.offset.assign(static_cast<std::size_t>(g.n) + 1, 0);
  for (const auto& [u, v] : g.edges) {
    ++csr.offset[u + 1];
    ++csr.offset[v + 1];
  }
  std::partial_sum(csr.offset.begin(), csr.offset.end(), csr.offset.begin());
  csr.target.resize(csr.offset.back());
  csr.weight.resize(csr.offset.back());
  std::vector<int> fill(csr.offset.begin(), csr.offset.end() - 1);
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto [u, v] = g.edges[k];
    csr.target[fill[u]] = v;
    csr.weight[fill[u]++] = g.weights[k];
    csr.target[fill[v]] = u;
    csr.weight[fill[v]++] = g.weights[k];
  }
  return csr;
}

struct ScanResult {
  double min = 0.0;
  double max = 0.0;
  Bits argmin;
};

// Gray-code walk over the 2^(n-1) assignments with the last node fixed to 0
// (H_C is invariant under a global flip).
ScanResult exhaustive_scan(const Graph& g) {
  const Csr csr = build_csr(g);
  std::vector<int> spin(static_cast<std::size_t>(g.n), 1);
  double energy = 0.0;
  for (double w : g.weights) energy += w;
  ScanResult res{energy, energy, Bits(static_cast<std::size_t>(g.n), 0)};
  std::uint64_t best_code = 0;
  const int free_bits = g.n - 1;
  const std::uint64_t total = free_bits > 0 ? (std::uint64_t{1} << free_bits) : 1;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int i = std::countr_zero(step);
    double field = 0.0;
    for (int k = csr.offset[i]; k < csr.offset[i + 1]; ++k) field += csr.weight[k] * spin[csr.target[k]];
    energy -= 2.0 * spin[i] * field;
    spin[i] = -spin[i];
    if (energy < res.min) {
      res.min = energy;
      best_code = step ^ (step >> 1);
    }
    res.max = std::max(res.max, energy);
  }
  for (int b = 0; b < free_bits; ++b) res.argmin[b] = static_cast<std::uint8_t>((best_code >> b) & 1U);
  return res;
}

// Multi-start best-improvement single-flip descent on sign * H_C.
std::pair<double, Bits> local_search(const Graph& g, double sign, std::uint64_t seed, int starts) {
  const Csr csr = build_csr(g);
  Rng rng(seed);
  double best = std::numeric_limits<double>::infinity();
  Bits best_bits;
  std::vector<int> spin(static_cast<std::size_t>(g.n));
  for (int s = 0; s < starts; ++s) {
    for (auto& z : spin) z = (rng() & 1U) ? -1 : 1;
    for (;;) {
      double best_delta = -1e-12;
      int best_node = -1;
      for (int i = 0; i < g.n; ++i) {
        double field = 0.0;
        for (int k = csr.offset[i]; k < csr.offset[i + 1]; ++k) field += csr.weight[k] * spin[csr.target[k]];
        const double delta = -2.0 * sign * spin[i] * field;
        if (delta < best_delta) {
          best_delta = delta;
          best_node = i;
        }
      }
      if (best_node < 0) break;
      spin[best_node] = -spin[best_node];
    }
    Bits bits(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) bits[i] = spin[i] < 0 ? 1 : 0;
    const double value = sign * energy_of(g, bits);
    if (value < best) {
      best = value;
      best_bits = std::move(bits);
    }
  }
  return {sign * best, best_bits};
}

constexpr int kLocalSearchStarts = 200;

}  // namespace

double energy_of(const Graph& g, std::span<const std::uint8_t> assignment) {
  check_length(g, assignment);
  double e = 0.0;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto [u, v] = g.edges[k];
    e += (assignment[u] == assignment[v]) ? g.weights[k] : -g.weights[k];
  }
  return e;
}

int cut_value(const Graph& g, std::span<const std::uint8_t> assignment) {
  check_length(g, assignment);
  int cut = 0;
  for (const auto& [u, v] : g.edges) cut += assignment[u] != assignment[v] ? 1 : 0;
  return cut;
}

CutSolution maxcut_oracle(const Graph& g, std::uint64_t seed) {
  CutSolution sol;
  if (g.n <= kExhaustiveLimit) {
    auto scan = exhaustive_scan(g);
    sol.assignment = std::move(scan.argmin);
    sol.exact = true;
  } else {
    sol.assignment = local_search(g, 1.0, seed, kLocalSearchStarts).second;
    sol.exact = false;
  }
  sol.energy = energy_of(g, sol.assignment);
  sol.cut_value = cut_value(g, sol.assignment);
  return sol;
}

EnergyExtremes energy_extremes(const Graph& g, std::uint64_t seed) {
  if (g.n <= kExhaustiveLimit) {
    const auto scan = exhaustive_scan(g);
    return {scan.min, scan.max, true};
  }
  const double lo = local_search(g, 1.0, seed, kLocalSearchStarts).first;
  const double hi = local_search(g, -1.0, derive_seed(seed, 1), kLocalSearchStarts).first;
  return {lo, hi, false};
}

double approximation_ratio(const EnergyExtremes& extremes, double mu) {
  const double span = extremes.min - extremes.max;
  if (span == 0.0) throw std::domain_error("approximation ratio undefined for a constant landscape");
  return (mu - extremes.max) / span;
}

double approximation_ratio(const Graph& g, double mu) {
  return approximation_ratio(energy_extremes(g), mu);
}

double graph_density(const Graph& g) {
  if (g.n < 2) throw std::invalid_argument("density needs n >= 2");
  return static_cast<double>(g.edges.size()) / (0.5 * g.n * (g.n - 1));
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : g.edges) j["edges"].push_back({u, v});
  if (!g.unit_weights()) j["weights"] = g.weights;
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  std::vector<double> weights;
  if (j.contains("weights")) weights = j.at("weights").get<std::vector<double>>();
  return make_graph(j.at("n").get<int>(), std::move(edges), std::move(weights));
}

}  // namespace swapqaoa
