#pragma once

#include "swapqaoa/circuit.hpp"
#include "swapqaoa/graph.hpp"
#include "swapqaoa/sat_mapper.hpp"

#include <nlohmann/json.hpp>

#include <vector>

namespace swapqaoa {

struct RouteOptions {
  /// Run the swap network backwards on even-numbered cost layers (2, 4, ...)
  /// so consecutive layers compose instead of restarting from the initial
  /// order.
  bool reverse_even_layers = true;
  /// Fuse an RZZ with the SWAP that immediately follows it on the same pair.
  bool merge_swaps = true;
};

/// Depth-p QAOA routed onto a line of graph.n wires.
///
/// The circuit is symbolic: parameter slots 0..p-1 hold γ_1..γ_p and slots
/// p..2p-1 hold β_1..β_p. Each cost layer applies exp(-i γ_k w_e Z Z) per
/// edge; each mixer applies exp(-i β_k H_B) with H_B = -Σ X, i.e. RX(-2β_k).
struct RoutedQaoa {
  Circuit circuit;
  int p = 0;
  std::vector<int> initial_wire;  // node -> wire at the start (the mapping)
  std::vector<int> logical_map;   // node -> wire measured at the end
  int swap_count = 0;             // SWAPs executed, merged or not
  int merged_count = 0;           // SWAPs fused with an RZZ

  [[nodiscard]] int num_params() const { return 2 * p; }
  [[nodiscard]] Circuit bind(const std::vector<double>& theta) const { return circuit.bind(theta); }
  /// 3·S + 2·p·|E| − 2·m.
  [[nodiscard]] int expected_two_qubit_count(std::size_t num_edges) const;
};

RoutedQaoa route(const Graph& g, const MappingSolution& mapping, int p, const RouteOptions& options = {});

/// Same gate structure with the cost rotations replaced by barriers, X gates
/// in place of the Hadamard layer on wires whose node bit is 1, and the mixer
/// angles bound to `betas`. `bits` is indexed by node.
Circuit training_variant(const RoutedQaoa& routed, const Bits& bits, const std::vector<double>& betas);

/// Reference QAOA without routing: wire v carries node v.
Circuit unrouted_qaoa(const Graph& g, int p);

/// Gate-count report: S, m, per-kind totals (abstract and native).
nlohmann::json routing_report(const Graph& g, const RoutedQaoa& routed);

nlohmann::json to_json(const RoutedQaoa& routed);

}  // namespace swapqaoa
