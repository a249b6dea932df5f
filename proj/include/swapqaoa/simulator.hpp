#pragma once

#include "swapqaoa/circuit.hpp"
#include "swapqaoa/common.hpp"
#include "swapqaoa/noise.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace swapqaoa {

enum class Backend { Auto, Statevector, DensityMatrix, Trajectories };

std::string_view backend_name(Backend b);

/// Picks the backend for a circuit width. Throws std::invalid_argument naming
/// the limit that was exceeded.
Backend select_backend(int num_qubits, bool noisy);

inline constexpr int kTrajectoryLimit = 20;

struct SimOptions {
  Backend backend = Backend::Auto;
  unsigned threads = 0;
};

/// Counts keyed by wire bitstrings (character k = wire k). logical_map[v] is
/// the wire holding logical index v at measurement time.
struct ShotResult {
  std::map<std::string, long> counts;
  long shots = 0;
  std::vector<int> logical_map;
};

/// singles[i] = <Z_i>, pairs in (0,1), (0,2), ..., (n-2,n-1) order.
struct ObservableVector {
  int n = 0;
  std::vector<double> singles;
  std::vector<double> pairs;

  [[nodiscard]] double pair(int i, int j) const;
  /// singles followed by pairs: the n(n+1)/2 regression input.
  [[nodiscard]] std::vector<double> flat() const;
};

std::size_t pair_index(int n, int i, int j);  // i < j

/// Wire-basis outcome distribution. Noisy runs need the density-matrix
/// backend; trajectories have no exact mode.
std::vector<double> exact_distribution(const Circuit& circuit, const NoiseModel* noise = nullptr,
                                       const SimOptions& options = {});

ShotResult simulate(const Circuit& circuit, const NoiseModel* noise, long shots, std::uint64_t seed,
                    const SimOptions& options = {});

/// Draws `shots` samples from a distribution over wire basis states.
ShotResult sample_counts(const std::vector<double>& probs, int num_qubits, long shots, std::uint64_t seed);

ObservableVector observables_from_counts(const ShotResult& result);
/// Infinite-shot observables; bits are relabeled with logical_map.
ObservableVector observables_from_distribution(const std::vector<double>& probs, int num_qubits,
                                               const std::vector<int>& logical_map);

/// Counts re-keyed by logical bitstrings.
std::map<std::string, long> logical_counts(const ShotResult& result);

nlohmann::json to_json(const ShotResult& r);
ShotResult shot_result_from_json(const nlohmann::json& j);

}  // namespace swapqaoa
