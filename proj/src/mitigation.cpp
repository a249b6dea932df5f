#include "swapqaoa/mitigation.hpp"

#include "swapqaoa/common.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace swapqaoa {

namespace {

constexpr std::uint64_t kSimStream = 0x5eedf00dULL;
constexpr std::uint64_t kInitStream = 0x1a7e5ULL;

double total_beta(const std::vector<double>& betas) { return std::accumulate(betas.begin(), betas.end(), 0.0); }

Eigen::MatrixXd clamp_unit(Eigen::MatrixXd m) { return m.cwiseMax(-1.0).cwiseMin(1.0); }

Eigen::MatrixXd rows_of(const Eigen::MatrixXd& m, const std::vector<int>& idx) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(idx.size()), m.cols());
  for (std::size_t r = 0; r < idx.size(); ++r) out.row(static_cast<Eigen::Index>(r)) = m.row(idx[r]);
  return out;
}

nlohmann::json matrix_json(const Eigen::MatrixXd& m) {
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(m(r, c));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto data = j.at("data").get<std::vector<double>>();
  if (static_cast<Eigen::Index>(data.size()) != rows * cols) throw std::invalid_argument("matrix data size mismatch");
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = data[static_cast<std::size_t>(r * cols + c)];
  }
  return m;
}

nlohmann::json vector_json(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

Eigen::VectorXd vector_from_json(const nlohmann::json& j) {
  const auto data = j.get<std::vector<double>>();
  return Eigen::Map<const Eigen::VectorXd>(data.data(), static_cast<Eigen::Index>(data.size()));
}

struct Adam {
  Eigen::MatrixXd m, v;
  explicit Adam(const Eigen::MatrixXd& shape)
      : m(Eigen::MatrixXd::Zero(shape.rows(), shape.cols())), v(Eigen::MatrixXd::Zero(shape.rows(), shape.cols())) {}
  void step(Eigen::MatrixXd& param, const Eigen::MatrixXd& grad, double lr, int t) {
    constexpr double b1 = 0.9, b2 = 0.999, eps = 1e-8;
    m = b1 * m + (1.0 - b1) * grad;
    v = b2 * v + (1.0 - b2) * grad.cwiseProduct(grad);
    const double c1 = 1.0 - std::pow(b1, t);
    const double c2 = 1.0 - std::pow(b2, t);
    param.array() -= lr * (m.array() / c1) / ((v.array() / c2).sqrt() + eps);
  }
};

Eigen::MatrixXd glorot(int rows, int cols, Rng& rng) {
  const double bound = std::sqrt(6.0 / static_cast<double>(rows + cols));
  Eigen::MatrixXd w(rows, cols);
  for (Eigen::Index c = 0; c < w.cols(); ++c) {
    for (Eigen::Index r = 0; r < w.rows(); ++r) w(r, c) = (2.0 * uniform01(rng) - 1.0) * bound;
  }
  return w;
}

struct Network {
  Eigen::MatrixXd W1, b1, W2, b2;  // biases kept as column matrices for Adam

  [[nodiscard]] Eigen::MatrixXd forward(const Eigen::MatrixXd& xt, Eigen::MatrixXd* hidden = nullptr) const {
    Eigen::MatrixXd h = ((W1 * xt).colwise() + b1.col(0)).cwiseMax(0.0);
    Eigen::MatrixXd out = (W2 * h).colwise() + b2.col(0);
    if (hidden != nullptr) *hidden = std::move(h);
    return out;
  }
};

// Rows are samples in X/Y; the network works on columns.
void fit_ffnn(MitigatorModel& model, const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y, const FfnnConfig& cfg,
              std::uint64_t seed) {
  Rng rng(derive_seed(seed, kInitStream));
  Network net;
  net.W1 = glorot(model.hidden, model.inputs, rng);
  net.b1 = glorot(model.hidden, 1, rng);
  net.W2 = glorot(model.outputs, model.hidden, rng);
  net.b2 = glorot(model.outputs, 1, rng);

  const int m = static_cast<int>(X.rows());
  int n_stop = 0;
  if (m >= 2 && cfg.early_stopping_fraction > 0.0) {
    n_stop = std::clamp(static_cast<int>(std::lround(cfg.early_stopping_fraction * m)), 1, m - 1);
  }
  const int n_fit = m - n_stop;
  const Eigen::MatrixXd xt_fit = X.topRows(n_fit).transpose();
  const Eigen::MatrixXd yt_fit = Y.topRows(n_fit).transpose();
  const Eigen::MatrixXd xt_stop = X.bottomRows(n_stop).transpose();
  const Eigen::MatrixXd yt_stop = Y.bottomRows(n_stop).transpose();

  Adam aW1(net.W1), ab1(net.b1), aW2(net.W2), ab2(net.b2);
  std::vector<int> order(static_cast<std::size_t>(n_fit));
  std::iota(order.begin(), order.end(), 0);
  Network best = net;
  double best_loss = std::numeric_limits<double>::infinity();
  int since_best = 0;
  int t = 0;
  const int batch = std::max(1, std::min(cfg.batch_size, n_fit));
  for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
    for (int i = n_fit - 1; i > 0; --i) std::swap(order[i], order[rng() % static_cast<std::uint64_t>(i + 1)]);
    for (int start = 0; start < n_fit; start += batch) {
      const int len = std::min(batch, n_fit - start);
      Eigen::MatrixXd xb(model.inputs, len), yb(model.outputs, len);
      for (int k = 0; k < len; ++k) {
        xb.col(k) = xt_fit.col(order[start + k]);
        yb.col(k) = yt_fit.col(order[start + k]);
      }
      Eigen::MatrixXd h;
      const Eigen::MatrixXd out = net.forward(xb, &h);
      // Loss: Σ err² / (2 len) + l2 ||W||² / (2 len).
      const Eigen::MatrixXd d_out = (out - yb) / static_cast<double>(len);
      const Eigen::MatrixXd gW2 = d_out * h.transpose() + (cfg.l2 / len) * net.W2;
      const Eigen::MatrixXd gb2 = d_out.rowwise().sum();
      const Eigen::MatrixXd d_h = (net.W2.transpose() * d_out).cwiseProduct((h.array() > 0.0).cast<double>().matrix());
      const Eigen::MatrixXd gW1 = d_h * xb.transpose() + (cfg.l2 / len) * net.W1;
      const Eigen::MatrixXd gb1 = d_h.rowwise().sum();
      ++t;
      aW1.step(net.W1, gW1, cfg.learning_rate, t);
      ab1.step(net.b1, gb1, cfg.learning_rate, t);
      aW2.step(net.W2, gW2, cfg.learning_rate, t);
      ab2.step(net.b2, gb2, cfg.learning_rate, t);
    }
    const double fit_loss = (net.forward(xt_fit) - yt_fit).squaredNorm() / static_cast<double>(yt_fit.size());
    model.training_log.push_back(fit_loss);
    if (n_stop == 0) {
      best = net;
      continue;
    }
    const double stop_loss = (net.forward(xt_stop) - yt_stop).squaredNorm() / static_cast<double>(yt_stop.size());
    model.early_stopping_log.push_back(stop_loss);
    if (stop_loss < best_loss - cfg.tolerance) {
      best_loss = stop_loss;
      best = net;
      since_best = 0;
    } else if (++since_best >= cfg.patience) {
      break;
    }
  }
  model.W1 = best.W1;
  model.b1 = best.b1.col(0);
  model.W2 = best.W2;
  model.b2 = best.b2.col(0);
}

void fit_linear(MitigatorModel& model, const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y) {
  Eigen::MatrixXd A(X.rows(), X.cols() + 1);
  A.leftCols(X.cols()) = X;
  A.col(X.cols()).setOnes();
  const Eigen::MatrixXd coef = A.completeOrthogonalDecomposition().solve(Y);
  model.W1 = coef.topRows(X.cols()).transpose();
  model.b1 = coef.row(X.cols()).transpose();
}

}  // namespace

std::vector<int> TrainingSet::edge_columns() const {
  std::vector<int> cols;
  for (const auto& [u, v] : edges) cols.push_back(n + static_cast<int>(pair_index(n, u, v)));
  return cols;
}

TrainingSet TrainingSet::subset(const std::vector<int>& indices) const {
  TrainingSet out;
  out.n = n;
  out.edges = edges;
  out.X = rows_of(X, indices);
  out.Y = rows_of(Y, indices);
  if (!rows.empty()) {
    for (int i : indices) out.rows.push_back(rows.at(i));
  }
  return out;
}

std::vector<double> classical_singles(const Bits& bits, const std::vector<double>& betas) {
  const double c = std::cos(2.0 * total_beta(betas));
  std::vector<double> out;
  out.reserve(bits.size());
  for (auto b : bits) out.push_back(b ? -c : c);
  return out;
}

std::vector<double> classical_targets(const Bits& bits, const std::vector<double>& betas,
                                      const std::vector<Edge>& edges) {
  const double c = std::cos(2.0 * total_beta(betas));
  std::vector<double> out;
  out.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(std::max(u, v)) >= bits.size()) {
      throw std::invalid_argument("edge endpoint outside the bit vector");
    }
    const double s = (bits[u] ^ bits[v]) ? -1.0 : 1.0;
    out.push_back(s * c * c);
  }
  return out;
}

TrainingSet generate_training_set(const Graph& g, const RoutedQaoa& routed, const NoiseModel* noise,
                                  std::uint64_t seed, const TrainingSetOptions& options) {
  if (options.rows < 1) throw std::invalid_argument("training set needs at least one row");
  if (routed.circuit.num_qubits != g.n) throw std::invalid_argument("routed circuit does not match the graph");
  if (options.shots < 0) throw std::invalid_argument("shots must be >= 0");
  const int n = g.n;
  const int dim = n * (n + 1) / 2;
  TrainingSet ts;
  ts.n = n;
  ts.edges = g.edges;
  ts.X.resize(options.rows, dim);
  ts.Y.resize(options.rows, static_cast<Eigen::Index>(g.edges.size()));
  ts.rows.resize(static_cast<std::size_t>(options.rows));
  parallel_for(
      static_cast<std::size_t>(options.rows),
      [&](std::size_t r) {
        const std::uint64_t row_seed = derive_seed(seed, r);
        Rng rng(row_seed);
        TrainingRow row;
        row.bits.resize(static_cast<std::size_t>(n));
        for (auto& b : row.bits) b = uniform01(rng) < 0.5 ? 1 : 0;
        for (int k = 0; k < routed.p; ++k) row.betas.push_back(2.0 * std::numbers::pi * uniform01(rng));
        row.seed = derive_seed(row_seed, kSimStream);
        row.shots = options.shots;
        const Circuit c = training_variant(routed, row.bits, row.betas);
        ObservableVector obs;
        if (options.shots == 0) {
          obs = observables_from_distribution(exact_distribution(c, noise, options.sim), n, c.final_permutation);
        } else {
          SimOptions sim = options.sim;
          sim.threads = 1;
          obs = observables_from_counts(simulate(c, noise, options.shots, row.seed, sim));
        }
        const auto x = obs.flat();
        const auto y = classical_targets(row.bits, row.betas, g.edges);
        const auto ri = static_cast<Eigen::Index>(r);
        for (int k = 0; k < dim; ++k) ts.X(ri, k) = x[k];
        for (std::size_t e = 0; e < y.size(); ++e) ts.Y(ri, static_cast<Eigen::Index>(e)) = y[e];
        ts.rows[r] = std::move(row);
      },
      options.threads);
  return ts;
}

std::string_view model_kind_name(ModelKind k) { return k == ModelKind::FFNN ? "ffnn" : "linear"; }

ModelKind model_kind_from_name(std::string_view name) {
  if (name == "ffnn") return ModelKind::FFNN;
  if (name == "linear") return ModelKind::Linear;
  throw std::invalid_argument("unknown model kind '" + std::string(name) + "' (expected ffnn or linear)");
}

int default_hidden_width(int inputs, int outputs) {
  return static_cast<int>(std::lround((inputs + outputs) / 2.0));
}

Eigen::MatrixXd MitigatorModel::predict(const Eigen::MatrixXd& X) const {
  if (X.cols() != inputs) {
    throw std::invalid_argument("model expects " + std::to_string(inputs) + " inputs, got " +
                                std::to_string(X.cols()));
  }
  const Eigen::MatrixXd xt = X.transpose();
  if (kind == ModelKind::Linear) return ((W1 * xt).colwise() + b1).transpose();
  const Eigen::MatrixXd h = ((W1 * xt).colwise() + b1).cwiseMax(0.0);
  return ((W2 * h).colwise() + b2).transpose();
}

Eigen::VectorXd MitigatorModel::predict(const Eigen::VectorXd& x) const {
  return predict(Eigen::MatrixXd(x.transpose())).row(0).transpose();
}

Split split_indices(int m, double split, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("cannot split an empty set");
  if (!(split > 0.0 && split <= 1.0)) throw std::invalid_argument("split fraction must be in (0, 1]");
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), 0);
  Rng rng(seed);
  for (int i = m - 1; i > 0; --i) std::swap(idx[i], idx[rng() % static_cast<std::uint64_t>(i + 1)]);
  const int n_train = static_cast<int>(std::lround(split * m));
  if (n_train < 1) throw std::invalid_argument("split leaves no training rows");
  Split s;
  s.train.assign(idx.begin(), idx.begin() + n_train);
  s.holdout.assign(idx.begin() + n_train, idx.end());
  return s;
}

double mean_squared_error(const Eigen::MatrixXd& pred, const Eigen::MatrixXd& target) {
  if (pred.rows() != target.rows() || pred.cols() != target.cols()) throw std::invalid_argument("shape mismatch");
  if (pred.size() == 0) throw std::invalid_argument("empty prediction");
  return (pred - target).squaredNorm() / static_cast<double>(pred.size());
}

R2Score r2_score(const Eigen::MatrixXd& pred, const Eigen::MatrixXd& target) {
  if (pred.rows() != target.rows() || pred.cols() != target.cols()) throw std::invalid_argument("shape mismatch");
  R2Score s;
  if (target.rows() < 2) return s;
  double total = 0.0;
  int used = 0;
  for (Eigen::Index c = 0; c < target.cols(); ++c) {
    const double mean = target.col(c).mean();
    const double ss_tot = (target.col(c).array() - mean).square().sum();
    if (ss_tot <= 1e-12 * static_cast<double>(target.rows())) continue;
    const double ss_res = (target.col(c) - pred.col(c)).squaredNorm();
    total += 1.0 - ss_res / ss_tot;
    ++used;
  }
  if (used == 0) return s;
  s.value = total / used;
  s.defined = true;
  return s;
}

MitigatorModel train(const TrainingSet& ts, ModelKind kind, double split, std::uint64_t seed,
                     const FfnnConfig& config) {
  if (ts.size() < 1) throw std::invalid_argument("training set is empty");
  if (ts.X.cols() != ts.n * (ts.n + 1) / 2) throw std::invalid_argument("input width does not match n(n+1)/2");
  if (ts.Y.cols() != static_cast<Eigen::Index>(ts.edges.size())) throw std::invalid_argument("target width mismatch");
  const Split s = split_indices(ts.size(), split, seed);
  const Eigen::MatrixXd Xtr = rows_of(ts.X, s.train);
  const Eigen::MatrixXd Ytr = rows_of(ts.Y, s.train);

  MitigatorModel model;
  model.kind = kind;
  model.n = ts.n;
  model.inputs = static_cast<int>(ts.X.cols());
  model.outputs = static_cast<int>(ts.Y.cols());
  model.edges = ts.edges;
  if (kind == ModelKind::FFNN) {
    model.hidden = config.hidden > 0 ? config.hidden : default_hidden_width(model.inputs, model.outputs);
    fit_ffnn(model, Xtr, Ytr, config, seed);
  } else {
    model.hidden = 0;
    fit_linear(model, Xtr, Ytr);
  }
  model.train_mse = mean_squared_error(clamp_unit(model.predict(Xtr)), Ytr);
  if (!s.holdout.empty()) {
    const Eigen::MatrixXd Xho = rows_of(ts.X, s.holdout);
    const Eigen::MatrixXd Yho = rows_of(ts.Y, s.holdout);
    const Eigen::MatrixXd pred = clamp_unit(model.predict(Xho));
    model.validation_mse = mean_squared_error(pred, Yho);
    const R2Score r2 = r2_score(pred, Yho);
    model.validation_r2 = r2.value;
    model.r2_defined = r2.defined;
  }
  return model;
}

MitigatedEstimate mitigate(const MitigatorModel& model, const ObservableVector& obs,
                           const std::vector<double>& weights) {
  if (obs.n != model.n) {
    throw std::invalid_argument("observables for n = " + std::to_string(obs.n) + " but model trained for n = " +
                                std::to_string(model.n));
  }
  if (!weights.empty() && static_cast<int>(weights.size()) != model.outputs) {
    throw std::invalid_argument("one weight per edge required");
  }
  const auto flat = obs.flat();
  const Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(flat.data(), static_cast<Eigen::Index>(flat.size()));
  const Eigen::VectorXd y = model.predict(x);
  MitigatedEstimate est;
  for (Eigen::Index e = 0; e < y.size(); ++e) {
    const double c = std::clamp(y(e), -1.0, 1.0);
    est.correlators.push_back(c);
    est.energy += (weights.empty() ? 1.0 : weights[static_cast<std::size_t>(e)]) * c;
  }
  return est;
}

double unmitigated_energy(const ObservableVector& obs, const std::vector<Edge>& edges,
                          const std::vector<double>& weights) {
  if (!weights.empty() && weights.size() != edges.size()) throw std::invalid_argument("one weight per edge required");
  double total = 0.0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    total += (weights.empty() ? 1.0 : weights[e]) * obs.pair(edges[e].first, edges[e].second);
  }
  return total;
}

ModelComparison compare_models(const TrainingSet& ts, int resamples, double split, std::uint64_t seed,
                               const FfnnConfig& config) {
  if (ts.size() < 10) throw std::invalid_argument("model comparison needs at least 10 rows");
  if (resamples < 1) throw std::invalid_argument("need at least one resample");
  if (!(split < 1.0)) throw std::invalid_argument("comparison needs a non-empty holdout");
  ModelComparison out;
  std::vector<double> diff;
  for (int r = 0; r < resamples; ++r) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(r));
    out.ffnn_mse.push_back(train(ts, ModelKind::FFNN, split, s, config).validation_mse);
    out.linear_mse.push_back(train(ts, ModelKind::Linear, split, s, config).validation_mse);
    diff.push_back(out.linear_mse.back() - out.ffnn_mse.back());
  }
  auto stats = [](const std::vector<double>& v, double& mean, double& sem) {
    mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    if (v.size() < 2) {
      sem = 0.0;
      return;
    }
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    sem = std::sqrt(ss / static_cast<double>(v.size() - 1)) / std::sqrt(static_cast<double>(v.size()));
  };
  stats(out.ffnn_mse, out.ffnn_mean, out.ffnn_sem);
  stats(out.linear_mse, out.linear_mean, out.linear_sem);
  stats(diff, out.difference_mean, out.difference_sem);
  return out;
}

nlohmann::json to_json(const TrainingSet& ts) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : ts.edges) edges.push_back({u, v});
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : ts.rows) {
    rows.push_back({{"bits", bits_to_string(r.bits)}, {"betas", r.betas}, {"seed", r.seed}, {"shots", r.shots}});
  }
  return {{"n", ts.n}, {"M", ts.size()}, {"edges", edges}, {"rows", rows}, {"X", matrix_json(ts.X)},
          {"Y", matrix_json(ts.Y)}};
}

TrainingSet training_set_from_json(const nlohmann::json& j) {
  TrainingSet ts;
  ts.n = j.at("n").get<int>();
  for (const auto& e : j.at("edges")) ts.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  for (const auto& r : j.value("rows", nlohmann::json::array())) {
    TrainingRow row;
    row.bits = bits_from_string(r.at("bits").get<std::string>());
    row.betas = r.at("betas").get<std::vector<double>>();
    row.seed = r.at("seed").get<std::uint64_t>();
    row.shots = r.at("shots").get<long>();
    ts.rows.push_back(std::move(row));
  }
  ts.X = matrix_from_json(j.at("X"));
  ts.Y = matrix_from_json(j.at("Y"));
  if (ts.X.rows() != ts.Y.rows()) throw std::invalid_argument("X and Y row counts differ");
  if (ts.X.cols() != ts.n * (ts.n + 1) / 2) throw std::invalid_argument("X width does not match n(n+1)/2");
  if (ts.Y.cols() != static_cast<Eigen::Index>(ts.edges.size())) throw std::invalid_argument("Y width mismatch");
  return ts;
}

nlohmann::json to_json(const MitigatorModel& model) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : model.edges) edges.push_back({u, v});
  nlohmann::json j{{"kind", model_kind_name(model.kind)},
                   {"n", model.n},
                   {"inputs", model.inputs},
                   {"outputs", model.outputs},
                   {"hidden", model.hidden},
                   {"edges", edges},
                   {"W1", matrix_json(model.W1)},
                   {"b1", vector_json(model.b1)},
                   {"train_mse", model.train_mse},
                   {"validation_mse", model.validation_mse},
                   {"validation_r2", model.r2_defined ? nlohmann::json(model.validation_r2) : nlohmann::json()},
                   {"training_log", model.training_log},
                   {"early_stopping_log", model.early_stopping_log}};
  if (model.kind == ModelKind::FFNN) {
    j["W2"] = matrix_json(model.W2);
    j["b2"] = vector_json(model.b2);
  }
  return j;
}

MitigatorModel model_from_json(const nlohmann::json& j) {
  MitigatorModel m;
  m.kind = model_kind_from_name(j.at("kind").get<std::string>());
  m.n = j.at("n").get<int>();
  m.inputs = j.at("inputs").get<int>();
  m.outputs = j.at("outputs").get<int>();
  m.hidden = j.at("hidden").get<int>();
  for (const auto& e : j.at("edges")) m.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  m.W1 = matrix_from_json(j.at("W1"));
  m.b1 = vector_from_json(j.at("b1"));
  if (m.kind == ModelKind::FFNN) {
    m.W2 = matrix_from_json(j.at("W2"));
    m.b2 = vector_from_json(j.at("b2"));
    if (m.W1.rows() != m.hidden || m.W1.cols() != m.inputs || m.W2.rows() != m.outputs || m.W2.cols() != m.hidden) {
      throw std::invalid_argument("FFNN weight shapes are inconsistent");
    }
  } else if (m.W1.rows() != m.outputs || m.W1.cols() != m.inputs) {
    throw std::invalid_argument("linear weight shapes are inconsistent");
  }
  m.train_mse = j.value("train_mse", 0.0);
  m.validation_mse = j.value("validation_mse", 0.0);
  if (j.contains("validation_r2") && !j["validation_r2"].is_null()) {
    m.validation_r2 = j["validation_r2"].get<double>();
    m.r2_defined = true;
  }
  m.training_log = j.value("training_log", std::vector<double>{});
  m.early_stopping_log = j.value("early_stopping_log", std::vector<double>{});
  return m;
}

nlohmann::json to_json(const ModelComparison& c) {
  return {{"ffnn_mse", c.ffnn_mse},
          {"linear_mse", c.linear_mse},
          {"ffnn_mean", c.ffnn_mean},
          {"ffnn_sem", c.ffnn_sem},
          {"linear_mean", c.linear_mean},
          {"linear_sem", c.linear_sem},
          {"difference_mean", c.difference_mean},
          {"difference_sem", c.difference_sem}};
}

}  // namespace swapqaoa
