#include "swapqaoa/driver.hpp"

#include "swapqaoa/common.hpp"
#include "swapqaoa/density_matrix.hpp"
#include "swapqaoa/lightcone.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace swapqaoa {

std::vector<double> tqa_init(int p, double dt) {
  if (p < 1) throw std::invalid_argument("depth p must be >= 1");
  if (!(dt > 0.0)) throw std::invalid_argument("TQA time step must be positive");
  std::vector<double> theta(2 * static_cast<std::size_t>(p));
  for (int k = 1; k <= p; ++k) {
    const double s = static_cast<double>(k) / p;
    theta[k - 1] = s * dt;
    theta[p + k - 1] = (1.0 - s) * dt;
  }
  return theta;
}

namespace {

double now_seconds() {
  return std::chrono::duration<double>(std::chrono::system_clock::now().time_since_epoch()).count();
}

ObservableVector measure(const RoutedQaoa& routed, const std::vector<double>& theta, const NoiseModel* noise,
                         long shots, std::uint64_t seed, const SimOptions& sim) {
  const Circuit c = routed.bind(theta);
  if (shots == 0) {
    return observables_from_distribution(exact_distribution(c, noise, sim), c.num_qubits, routed.logical_map);
  }
  return observables_from_counts(simulate(c, noise, shots, seed, sim));
}

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

}  // namespace

OptimizationTrace optimize(const Graph& g, const RoutedQaoa& routed, const NoiseModel* noise,
                           const MitigatorModel* model, const std::vector<double>& theta0,
                           const OptimizeOptions& options) {
  if (static_cast<int>(theta0.size()) != routed.num_params()) {
    throw std::invalid_argument("theta0 has " + std::to_string(theta0.size()) + " entries, circuit needs " +
                                std::to_string(routed.num_params()));
  }
  if (model != nullptr && (model->n != g.n || model->edges != g.edges)) {
    throw std::invalid_argument("mitigator was trained on a different graph");
  }
  if (options.shots < 0) throw std::invalid_argument("shots must be >= 0");
  OptimizationTrace trace;
  trace.theta0 = theta0;
  trace.mitigated = model != nullptr;
  std::uint64_t k = 0;
  const Objective objective = [&](const std::vector<double>& theta) {
    const ObservableVector obs = measure(routed, theta, noise, options.shots, derive_seed(options.seed, k++),
                                         options.sim);
    TraceEntry entry;
    entry.theta = theta;
    entry.e_n = unmitigated_energy(obs, g.edges, g.weights);
    if (model != nullptr) entry.e_m = mitigate(*model, obs, g.weights).energy;
    entry.shots = options.shots;
    entry.timestamp = now_seconds();
    trace.iterations.push_back(entry);
    return model != nullptr ? *entry.e_m : entry.e_n;
  };
  const OptimizerResult res = minimize(objective, theta0, options.optimizer);
  trace.converged = res.converged;
  // The first strict minimum matches the optimizer's own best point.
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < trace.iterations.size(); ++i) {
    const auto& it = trace.iterations[i];
    const double v = it.e_m ? *it.e_m : it.e_n;
    if (v < best) {
      best = v;
      trace.best_index = i;
    }
  }
  trace.theta_star = trace.iterations[trace.best_index].theta;
  return trace;
}

EnergyDistribution energy_distribution(const Graph& g, const std::map<std::string, long>& logical) {
  EnergyDistribution d;
  double total = 0.0;
  d.best_cut = -1;
  for (const auto& [key, count] : logical) {
    if (static_cast<int>(key.size()) != g.n) throw std::invalid_argument("bitstring length does not match graph");
    const Bits bits = bits_from_string(key);
    const double e = energy_of(g, bits);
    d.histogram[e] += count;
    d.shots += count;
    total += e * static_cast<double>(count);
    const int cut = cut_value(g, bits);
    if (cut > d.best_cut) {
      d.best_cut = cut;
      d.best_cut_count = count;
      d.best_bits = key;
    } else if (cut == d.best_cut) {
      d.best_cut_count += count;
    }
  }
  if (d.shots == 0) throw std::invalid_argument("no samples");
  d.mean = total / static_cast<double>(d.shots);
  d.alpha = approximation_ratio(g, d.mean);
  return d;
}

EnergyDistribution energy_distribution(const Graph& g, const RoutedQaoa& routed, const std::vector<double>& theta,
                                       const NoiseModel* noise, long shots, std::uint64_t seed,
                                       const SimOptions& sim) {
  if (shots < 1) throw std::invalid_argument("energy distribution needs at least one shot");
  const ShotResult r = simulate(routed.bind(theta), noise, shots, seed, sim);
  return energy_distribution(g, logical_counts(r));
}

Landscape simulated_landscape(const Graph& g, const RoutedQaoa& routed, const NoiseModel* noise,
                              const std::vector<double>& gammas, const std::vector<double>& betas, long shots,
                              std::uint64_t seed, unsigned threads) {
  if (routed.p != 1) throw std::invalid_argument("landscape scans need a depth-one circuit");
  if (shots < 0) throw std::invalid_argument("shots must be >= 0");
  Landscape land;
  land.gammas = gammas;
  land.betas = betas;
  land.energies.assign(gammas.size(), std::vector<double>(betas.size(), 0.0));
  SimOptions sim;
  sim.threads = 1;
  parallel_for(
      gammas.size() * betas.size(),
      [&](std::size_t idx) {
        const std::size_t i = idx / betas.size(), j = idx % betas.size();
        const auto obs = measure(routed, {gammas[i], betas[j]}, noise, shots, derive_seed(seed, idx), sim);
        land.energies[i][j] = unmitigated_energy(obs, g.edges, g.weights);
      },
      threads);
  return land;
}

RepeatSummary repeat_study(const Graph& g, const RoutedQaoa& routed, std::uint64_t seed,
                           const RepeatStudyOptions& options) {
  if (options.repeats < 1) throw std::invalid_argument("repeats must be >= 1");
  if (g.n > kDensityMatrixLimit) {
    throw std::invalid_argument("repeat study needs a noisy-simulable graph (n <= " +
                                std::to_string(kDensityMatrixLimit) + ")");
  }
  RepeatSummary summary;
  summary.repeats.resize(static_cast<std::size_t>(options.repeats));
  const int p = routed.p;
  parallel_for(
      summary.repeats.size(),
      [&](std::size_t r) {
        RepeatOutcome& out = summary.repeats[r];
        out.seed = derive_seed(seed, r);
        const NoiseModel noise = sample_noise_model(g.n, derive_seed(out.seed, 1), options.noise);
        TrainingSetOptions topt = options.training;
        topt.threads = 1;
        const TrainingSet ts = generate_training_set(g, routed, &noise, derive_seed(out.seed, 2), topt);
        const MitigatorModel model = train(ts, ModelKind::FFNN, options.split, derive_seed(out.seed, 3), options.ffnn);
        out.validation_r2 = model.validation_r2;
        OptimizeOptions oopt = options.optimize;
        oopt.seed = derive_seed(out.seed, 4);
        oopt.sim.threads = 1;
        const auto theta0 = tqa_init(p, options.tqa_dt);
        out.mitigated = optimize(g, routed, &noise, &model, theta0, oopt);
        out.unmitigated = optimize(g, routed, &noise, nullptr, theta0, oopt);
        const std::uint64_t vseed = derive_seed(out.seed, 5);
        out.mitigated_energy =
            energy_distribution(g, routed, out.mitigated.theta_star, nullptr, options.verification_shots, vseed).mean;
        out.unmitigated_energy =
            energy_distribution(g, routed, out.unmitigated.theta_star, nullptr, options.verification_shots, vseed).mean;
        auto split_theta = [p](const std::vector<double>& t) {
          return std::pair{std::vector<double>(t.begin(), t.begin() + p), std::vector<double>(t.begin() + p, t.end())};
        };
        const auto [gm, bm] = split_theta(out.mitigated.theta_star);
        const auto [gu, bu] = split_theta(out.unmitigated.theta_star);
        out.mitigated_exact = energy(g, p, gm, bm, 1);
        out.unmitigated_exact = energy(g, p, gu, bu, 1);
      },
      options.threads);
  std::vector<double> em, en;
  for (const auto& r : summary.repeats) {
    em.push_back(r.mitigated_energy);
    en.push_back(r.unmitigated_energy);
    if (r.mitigated_energy < r.unmitigated_energy) ++summary.mitigated_wins;
    if (r.unmitigated_energy < r.mitigated_energy) ++summary.unmitigated_wins;
    const auto& best = r.mitigated.best();
    if (best.e_m && *best.e_m < best.e_n) ++summary.em_below_en;
  }
  summary.mitigated_mean = mean(em);
  summary.mitigated_std = sample_std(em);
  summary.unmitigated_mean = mean(en);
  summary.unmitigated_std = sample_std(en);
  return summary;
}

nlohmann::json to_json(const TraceEntry& e) {
  nlohmann::json j{{"theta", e.theta}, {"E_N", e.e_n}, {"shots", e.shots}, {"timestamp", e.timestamp}};
  j["E_M"] = e.e_m ? nlohmann::json(*e.e_m) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const OptimizationTrace& t) {
  nlohmann::json it = nlohmann::json::array();
  for (const auto& e : t.iterations) it.push_back(to_json(e));
  return {{"iterations", it},         {"theta0", t.theta0},       {"theta_star", t.theta_star},
          {"best_index", t.best_index}, {"converged", t.converged}, {"objective", t.mitigated ? "E_M" : "E_N"}};
}

nlohmann::json to_json(const EnergyDistribution& d) {
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& [e, c] : d.histogram) hist.push_back({{"energy", e}, {"count", c}});
  return {{"histogram", hist},         {"shots", d.shots},
          {"mean", d.mean},            {"alpha", d.alpha},
          {"best_cut", d.best_cut},    {"best_cut_count", d.best_cut_count},
          {"best_bits", d.best_bits}};
}

nlohmann::json to_json(const RepeatSummary& s) {
  nlohmann::json reps = nlohmann::json::array();
  for (const auto& r : s.repeats) {
    reps.push_back({{"seed", r.seed},
                    {"mitigated_energy", r.mitigated_energy},
                    {"unmitigated_energy", r.unmitigated_energy},
                    {"mitigated_exact", r.mitigated_exact},
                    {"unmitigated_exact", r.unmitigated_exact},
                    {"validation_r2", r.validation_r2},
                    {"mitigated_theta_star", r.mitigated.theta_star},
                    {"unmitigated_theta_star", r.unmitigated.theta_star},
                    {"mitigated_final", to_json(r.mitigated.best())},
                    {"unmitigated_final", to_json(r.unmitigated.best())}});
  }
  return {{"repeats", reps},
          {"mitigated_mean", s.mitigated_mean},
          {"mitigated_std", s.mitigated_std},
          {"unmitigated_mean", s.unmitigated_mean},
          {"unmitigated_std", s.unmitigated_std},
          {"mitigated_wins", s.mitigated_wins},
          {"unmitigated_wins", s.unmitigated_wins},
          {"em_below_en", s.em_below_en}};
}

}  // namespace swapqaoa
