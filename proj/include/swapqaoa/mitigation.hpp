#pragma once

#include "swapqaoa/graph.hpp"
#include "swapqaoa/noise.hpp"
#include "swapqaoa/simulator.hpp"
#include "swapqaoa/swap_router.hpp"

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace swapqaoa {

struct TrainingRow {
  Bits bits;                  // by node
  std::vector<double> betas;  // one per layer
  std::uint64_t seed = 0;     // simulation seed of this row
  long shots = 0;             // 0 means infinite-shot
};

/// X: one row of n(n+1)/2 noisy observables per circuit (singles, then pairs).
/// Y: exact edge correlators for the same circuit, in graph edge order.
struct TrainingSet {
  int n = 0;
  std::vector<Edge> edges;
  Eigen::MatrixXd X;
  Eigen::MatrixXd Y;
  std::vector<TrainingRow> rows;

  [[nodiscard]] int size() const { return static_cast<int>(X.rows()); }
  /// Columns of X holding <Z_i Z_j> for each edge.
  [[nodiscard]] std::vector<int> edge_columns() const;
  /// Rows at the given indices, metadata included.
  [[nodiscard]] TrainingSet subset(const std::vector<int>& indices) const;
};

/// <Z_u Z_v> per edge of the barriered training circuit: every node keeps its
/// initial spin s = (-1)^bit and accumulates an x rotation of 2 Σβ, so the
/// correlator is s_u s_v cos²(2 Σβ).
std::vector<double> classical_targets(const Bits& bits, const std::vector<double>& betas,
                                      const std::vector<Edge>& edges);
/// Single-qubit counterpart: s_v cos(2 Σβ).
std::vector<double> classical_singles(const Bits& bits, const std::vector<double>& betas);

struct TrainingSetOptions {
  int rows = 300;
  long shots = 1024;  // 0 selects infinite-shot observables
  unsigned threads = 0;
  SimOptions sim{};
};

/// Rows draw each node bit with probability 1/2 and β_k uniform in [0, 2π).
/// Row r uses the stream derive_seed(seed, r), so rows are independent of
/// scheduling. noise == nullptr gives noiseless inputs.
TrainingSet generate_training_set(const Graph& g, const RoutedQaoa& routed, const NoiseModel* noise,
                                  std::uint64_t seed, const TrainingSetOptions& options = {});

enum class ModelKind { FFNN, Linear };
std::string_view model_kind_name(ModelKind k);
ModelKind model_kind_from_name(std::string_view name);

struct FfnnConfig {
  int hidden = -1;  // -1: round((inputs + outputs) / 2)
  double learning_rate = 1e-3;
  int batch_size = 32;
  int max_epochs = 2000;
  int patience = 20;
  double early_stopping_fraction = 0.1;
  double l2 = 1e-4;
  double tolerance = 1e-7;
};

int default_hidden_width(int inputs, int outputs);

struct MitigatorModel {
  ModelKind kind = ModelKind::FFNN;
  int n = 0;
  int inputs = 0;
  int outputs = 0;
  int hidden = 0;
  // FFNN: out = W2 relu(W1 x + b1) + b2. Linear: out = W1 x + b1.
  Eigen::MatrixXd W1;
  Eigen::VectorXd b1;
  Eigen::MatrixXd W2;
  Eigen::VectorXd b2;
  std::vector<Edge> edges;
  std::vector<double> training_log;  // per-epoch training loss (FFNN)
  std::vector<double> early_stopping_log;
  double train_mse = 0.0;
  double validation_mse = 0.0;
  double validation_r2 = 0.0;
  bool r2_defined = false;

  /// Raw regression output; rows of X are samples.
  [[nodiscard]] Eigen::MatrixXd predict(const Eigen::MatrixXd& X) const;
  [[nodiscard]] Eigen::VectorXd predict(const Eigen::VectorXd& x) const;
};

/// Shuffled index split: the first round(split * m) indices train.
struct Split {
  std::vector<int> train;
  std::vector<int> holdout;
};
Split split_indices(int m, double split, std::uint64_t seed);

/// Trains on the split's training rows and scores the held-out rows.
/// A constant-target holdout leaves validation_r2 undefined (r2_defined false).
MitigatorModel train(const TrainingSet& ts, ModelKind kind, double split, std::uint64_t seed,
                     const FfnnConfig& config = {});

/// Mean over rows and outputs of the squared error.
double mean_squared_error(const Eigen::MatrixXd& pred, const Eigen::MatrixXd& target);

struct R2Score {
  double value = 0.0;
  bool defined = false;
};
/// Coefficient of determination averaged over output columns with non-zero
/// variance.
R2Score r2_score(const Eigen::MatrixXd& pred, const Eigen::MatrixXd& target);

struct MitigatedEstimate {
  std::vector<double> correlators;  // clamped to [-1, 1]
  double energy = 0.0;
};
MitigatedEstimate mitigate(const MitigatorModel& model, const ObservableVector& obs,
                           const std::vector<double>& weights = {});
/// E_N: the weighted sum of the raw edge correlators.
double unmitigated_energy(const ObservableVector& obs, const std::vector<Edge>& edges,
                          const std::vector<double>& weights = {});

struct ModelComparison {
  std::vector<double> ffnn_mse;
  std::vector<double> linear_mse;
  double ffnn_mean = 0.0;
  double ffnn_sem = 0.0;
  double linear_mean = 0.0;
  double linear_sem = 0.0;
  double difference_mean = 0.0;  // linear - ffnn
  double difference_sem = 0.0;
};
/// Resample r trains both models with train(ts, kind, split, derive_seed(seed, r))
/// and records the holdout MSE of the clamped predictions.
ModelComparison compare_models(const TrainingSet& ts, int resamples, double split, std::uint64_t seed,
                               const FfnnConfig& config = {});

nlohmann::json to_json(const TrainingSet& ts);
TrainingSet training_set_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MitigatorModel& model);
MitigatorModel model_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ModelComparison& c);

}  // namespace swapqaoa
