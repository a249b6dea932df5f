#include "swapqaoa/swap_router.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>

namespace swapqaoa {

namespace {

void tag_cost_rotation(std::vector<Gate>& seq, int slot, double weight) {
  for (Gate& g : seq) {
    if (g.kind == GateKind::RZ) g.ref = ParamRef{slot, 2.0 * weight};
  }
}

void append_mixer(Circuit& c, int slot) {
  for (int w = 0; w < c.num_qubits; ++w) {
    Gate g = Gate::make(GateKind::RX, {w}, 0.0, GateRole::Mixer);
    g.ref = ParamRef{slot, -2.0};
    c.append(std::move(g));
  }
}

// Wire arrangement of the line while the network runs.
struct Line {
  std::vector<int> wire_of;  // node -> wire
  std::vector<int> node_at;  // wire -> node

  void swap_wires(int a, int b) {
    std::swap(node_at[a], node_at[b]);
    wire_of[node_at[a]] = a;
    wire_of[node_at[b]] = b;
  }
};

}  // namespace

int RoutedQaoa::expected_two_qubit_count(std::size_t num_edges) const {
  return 3 * swap_count + 2 * p * static_cast<int>(num_edges) - 2 * merged_count;
}

RoutedQaoa route(const Graph& g, const MappingSolution& mapping, int p, const RouteOptions& options) {
  if (p < 1) throw std::invalid_argument("QAOA depth must be >= 1");
  if (g.n < 2) throw std::invalid_argument("routing needs at least two nodes");
  validate_mapping(g, mapping);
  const int layers = mapping.num_layers;
  const BrickSchedule schedule = brick_permutations(g.n, layers, mapping.first_parity);

  RoutedQaoa out;
  out.p = p;
  out.circuit = Circuit(g.n);
  out.initial_wire = mapping.sigma;
  Circuit& c = out.circuit;

  Line line{mapping.sigma, std::vector<int>(static_cast<std::size_t>(g.n))};
  for (int v = 0; v < g.n; ++v) line.node_at[line.wire_of[v]] = v;

  for (int w = 0; w < g.n; ++w) c.append(Gate::make(GateKind::H, {w}, 0.0, GateRole::InitialState));

  std::vector<std::vector<int>> edges_at(static_cast<std::size_t>(layers) + 1);
  for (std::size_t e = 0; e < g.edges.size(); ++e) edges_at[mapping.edge_times[e]].push_back(static_cast<int>(e));

  // Apply one swap layer as pure SWAPs (used to restore the order when the
  // network is not reversed between cost layers).
  auto plain_layer = [&](int layer_index) {
    for (const auto& [a, b] : schedule.layer_pairs(layer_index)) {
      c.append(decompose_swap(a, b));
      line.swap_wires(a, b);
      ++out.swap_count;
    }
  };

  bool at_end = false;  // line currently in order P_L
  for (int k = 1; k <= p; ++k) {
    const bool final_layer = k == p;
    bool reversed = false;
    if (at_end) {
      if (options.reverse_even_layers) {
        reversed = true;
      } else {
        for (int t = layers - 1; t >= 0; --t) plain_layer(t);
        at_end = false;
      }
    }
    auto time_of_step = [&](int s) { return reversed ? layers - s : s; };
    auto layer_after_step = [&](int s) { return reversed ? layers - s - 1 : s; };

    int last_step = layers;
    if (final_layer) {
      last_step = 0;
      for (int s = 0; s <= layers; ++s) {
        if (!edges_at[time_of_step(s)].empty()) last_step = s;
      }
    }

    for (int s = 0; s <= layers; ++s) {
      const bool swap_follows = s < layers && s < last_step;
      std::set<std::pair<int, int>> upcoming;
      if (swap_follows) {
        const auto pairs = schedule.layer_pairs(layer_after_step(s));
        upcoming.insert(pairs.begin(), pairs.end());
      }
      // Plain RZZs go first: a merged block moves its nodes, and a plain RZZ
      // at the same step may share a wire with it.
      std::set<std::pair<int, int>> merged;
      std::vector<Gate> fused;
      for (int e : edges_at[time_of_step(s)]) {
        const auto [u, v] = g.edges[e];
        int a = line.wire_of[u];
        int b = line.wire_of[v];
        if (std::abs(a - b) != 1) {
          throw std::logic_error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                 ") not adjacent at its scheduled step");
        }
        if (a > b) std::swap(a, b);
        const double w = g.weights[e];
        const bool merge = options.merge_swaps && upcoming.count({a, b}) != 0;
        std::vector<Gate> seq = merge ? merge_rzz_swap(0.0, a, b) : decompose_rzz(0.0, a, b);
        tag_cost_rotation(seq, k - 1, w);
        if (merge) {
          merged.insert({a, b});
          fused.insert(fused.end(), seq.begin(), seq.end());
        } else {
          c.append(seq);
        }
      }
      c.append(fused);
      if (!swap_follows) continue;
      for (const auto& [a, b] : schedule.layer_pairs(layer_after_step(s))) {
        if (merged.count({a, b}) == 0) c.append(decompose_swap(a, b));
        line.swap_wires(a, b);
        ++out.swap_count;
      }
      out.merged_count += static_cast<int>(merged.size());
    }
    // Every non-final layer runs all swap layers, so the order flips between
    // P_0 and P_L.
    if (!final_layer || last_step == layers) at_end = !at_end;
    append_mixer(c, p + k - 1);
  }

  out.logical_map = line.wire_of;
  c.final_permutation = line.wire_of;
  c.validate();
  return out;
}

Circuit training_variant(const RoutedQaoa& routed, const Bits& bits, const std::vector<double>& betas) {
  const int n = routed.circuit.num_qubits;
  if (static_cast<int>(bits.size()) != n) {
    throw std::invalid_argument("training bits length " + std::to_string(bits.size()) + " does not match n = " +
                                std::to_string(n));
  }
  if (static_cast<int>(betas.size()) != routed.p) throw std::invalid_argument("need one beta per QAOA layer");
  std::vector<char> flip(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) flip[routed.initial_wire[v]] = bits[v] ? 1 : 0;

  Circuit c(n);
  c.final_permutation = routed.circuit.final_permutation;
  for (const Gate& g : routed.circuit.ops) {
    if (g.role == GateRole::InitialState) {
      if (flip[g.qubits[0]]) c.append(Gate::make(GateKind::X, g.qubits, 0.0, GateRole::InitialState));
      continue;
    }
    c.append(g);
  }
  std::vector<double> theta(static_cast<std::size_t>(2 * routed.p), 0.0);
  std::copy(betas.begin(), betas.end(), theta.begin() + routed.p);
  return barrier_rz(c).bind(theta);
}

Circuit unrouted_qaoa(const Graph& g, int p) {
  if (p < 1) throw std::invalid_argument("QAOA depth must be >= 1");
  Circuit c(g.n);
  for (int w = 0; w < g.n; ++w) c.append(Gate::make(GateKind::H, {w}, 0.0, GateRole::InitialState));
  for (int k = 1; k <= p; ++k) {
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      auto seq = decompose_rzz(0.0, g.edges[e].first, g.edges[e].second);
      tag_cost_rotation(seq, k - 1, g.weights[e]);
      c.append(seq);
    }
    append_mixer(c, p + k - 1);
  }
  return c;
}

nlohmann::json routing_report(const Graph& g, const RoutedQaoa& routed) {
  return {{"p", routed.p},
          {"swaps", routed.swap_count},
          {"merged", routed.merged_count},
          {"two_qubit_gates", two_qubit_count(routed.circuit)},
          {"two_qubit_formula", routed.expected_two_qubit_count(g.edges.size())},
          {"abstract", gate_counts_json(count_gates(routed.circuit))},
          {"native", gate_counts_json(count_gates(to_native(routed.circuit)))}};
}

nlohmann::json to_json(const RoutedQaoa& routed) {
  return {{"p", routed.p},
          {"initial_wire", routed.initial_wire},
          {"logical_map", routed.logical_map},
          {"swaps", routed.swap_count},
          {"merged", routed.merged_count},
          {"circuit", to_json(routed.circuit)}};
}

}  // namespace swapqaoa
