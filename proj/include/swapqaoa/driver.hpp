#pragma once

#include "swapqaoa/graph.hpp"
#include "swapqaoa/lightcone.hpp"
#include "swapqaoa/mitigation.hpp"
#include "swapqaoa/noise.hpp"
#include "swapqaoa/optimizer.hpp"
#include "swapqaoa/simulator.hpp"
#include "swapqaoa/swap_router.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace swapqaoa {

/// Linear ramp: γ_k = (k/p) Δt, β_k = (1 - k/p) Δt for k = 1..p.
/// Returned as (γ_1..γ_p, β_1..β_p).
std::vector<double> tqa_init(int p, double dt = 0.75);

struct TraceEntry {
  std::vector<double> theta;
  std::optional<double> e_m;  // empty when no model is attached
  double e_n = 0.0;
  long shots = 0;
  double timestamp = 0.0;  // seconds since the Unix epoch
};

struct OptimizationTrace {
  std::vector<TraceEntry> iterations;
  std::vector<double> theta0;
  std::vector<double> theta_star;
  std::size_t best_index = 0;  // iteration holding theta_star
  bool converged = false;
  bool mitigated = false;  // objective was E_M

  [[nodiscard]] const TraceEntry& best() const { return iterations.at(best_index); }
};

struct OptimizeOptions {
  long shots = 4096;  // 0 evaluates the exact distribution
  OptimizerOptions optimizer{};
  std::uint64_t seed = 0;
  SimOptions sim{};
};

/// Minimizes E_M when `model` is non-null, otherwise E_N. Evaluation k draws
/// its shots with derive_seed(seed, k); both energies come from those shots.
OptimizationTrace optimize(const Graph& g, const RoutedQaoa& routed, const NoiseModel* noise,
                           const MitigatorModel* model, const std::vector<double>& theta0,
                           const OptimizeOptions& options = {});

struct EnergyDistribution {
  std::map<double, long> histogram;  // energy -> count
  long shots = 0;
  double mean = 0.0;
  double alpha = 0.0;  // approximation ratio of the mean
  int best_cut = 0;
  long best_cut_count = 0;
  std::string best_bits;  // lexicographically first string achieving best_cut
};

EnergyDistribution energy_distribution(const Graph& g, const RoutedQaoa& routed, const std::vector<double>& theta,
                                       const NoiseModel* noise, long shots, std::uint64_t seed,
                                       const SimOptions& sim = {});
/// Same analysis on already logical-labeled counts.
EnergyDistribution energy_distribution(const Graph& g, const std::map<std::string, long>& logical);

/// Depth-one energy grid of the routed circuit under `noise`. shots = 0 uses
/// exact expectations; otherwise grid point k samples with derive_seed(seed, k).
Landscape simulated_landscape(const Graph& g, const RoutedQaoa& routed, const NoiseModel* noise,
                              const std::vector<double>& gammas, const std::vector<double>& betas, long shots,
                              std::uint64_t seed, unsigned threads = 0);

struct RepeatStudyOptions {
  int repeats = 20;
  NoiseSampling noise{};
  TrainingSetOptions training{};
  double split = 0.9;
  FfnnConfig ffnn{};
  OptimizeOptions optimize{};
  double tqa_dt = 0.75;
  long verification_shots = 4096;
  unsigned threads = 1;  // repeats run in parallel on this many workers
};

struct RepeatOutcome {
  std::uint64_t seed = 0;
  OptimizationTrace mitigated;    // minimizes E_M
  OptimizationTrace unmitigated;  // minimizes E_N
  double mitigated_energy = 0.0;    // noiseless sampled mean at the mitigated θ*
  double unmitigated_energy = 0.0;  // same at the unmitigated θ*
  double mitigated_exact = 0.0;     // light-cone energy at the mitigated θ*
  double unmitigated_exact = 0.0;
  double validation_r2 = 0.0;
};

struct RepeatSummary {
  std::vector<RepeatOutcome> repeats;
  double mitigated_mean = 0.0;
  double mitigated_std = 0.0;
  double unmitigated_mean = 0.0;
  double unmitigated_std = 0.0;
  int mitigated_wins = 0;    // mitigated noiseless energy strictly lower
  int unmitigated_wins = 0;  // unmitigated strictly lower
  int em_below_en = 0;       // mitigated arm: E_M < E_N at its θ*
};

/// Repeat r uses seed derive_seed(seed, r) for a fresh noise model, training
/// set, model and both optimizations.
RepeatSummary repeat_study(const Graph& g, const RoutedQaoa& routed, std::uint64_t seed,
                           const RepeatStudyOptions& options = {});

nlohmann::json to_json(const TraceEntry& e);
nlohmann::json to_json(const OptimizationTrace& t);
nlohmann::json to_json(const EnergyDistribution& d);
nlohmann::json to_json(const RepeatSummary& s);

}  // namespace swapqaoa
