#pragma once

#include "swapqaoa/mitigation.hpp"
#include "swapqaoa/noise.hpp"
#include "swapqaoa/optimizer.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

namespace swapqaoa {

// Defaults reproduce the 10-node noisy simulation study.
struct ExperimentConfig {
  // Graph: read graph_file when set, otherwise draw RR3(n, graph_seed).
  std::string graph_file;
  int n = 10;
  std::uint64_t graph_seed = 5;
  int p = 2;
  int max_layers = -1;  // SAT search bound; -1 means n

  bool noisy = true;
  NoiseSampling noise{};
  std::uint64_t noise_seed = 1;

  bool mitigate = true;
  int training_rows = 300;
  long training_shots = 4096;
  double split = 0.9;
  ModelKind model = ModelKind::FFNN;
  int hidden = -1;  // -1 applies round((inputs + outputs) / 2)

  OptimizerMethod method = OptimizerMethod::TrustRegion;
  int max_iter = 50;
  long shots = 4096;
  double tqa_dt = 0.75;
  double rhobeg = 0.1;
  double rhoend = 1e-3;

  // Depth-one grid scan; requires p = 1.
  bool grid_scan = false;
  int grid_points = 25;
  double gamma_lo = 0.0;
  double gamma_hi = 1.5707963267948966;
  double beta_lo = 0.0;
  double beta_hi = 1.5707963267948966;
  long landscape_shots = 0;

  std::uint64_t seed = 0;
  std::string output_dir = "results";
  unsigned threads = 0;
};

nlohmann::json to_json(const ExperimentConfig& c);
/// Missing keys keep their defaults; unknown keys are rejected.
ExperimentConfig experiment_config_from_json(const nlohmann::json& j);
ExperimentConfig load_experiment_config(const std::string& path);

/// Raised for invalid configuration values.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A pipeline stage failed; what() is "<stage>: <cause>".
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& cause)
      : std::runtime_error(stage + ": " + cause), stage_(std::move(stage)) {}
  [[nodiscard]] const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

void validate(const ExperimentConfig& c);

/// graph -> map -> route -> train-mitigator -> optimize -> distributions ->
/// lightcone (and landscape when grid_scan). Writes every artifact into
/// output_dir and returns it.
std::filesystem::path run_experiment(const ExperimentConfig& config);

}  // namespace swapqaoa
