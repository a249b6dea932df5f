#include "swapqaoa/experiment.hpp"

#include "swapqaoa/driver.hpp"
#include "swapqaoa/graph.hpp"
#include "swapqaoa/lightcone.hpp"
#include "swapqaoa/sat_mapper.hpp"
#include "swapqaoa/swap_router.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace swapqaoa {

nlohmann::json to_json(const ExperimentConfig& c) {
  return {{"graph_file", c.graph_file},
          {"n", c.n},
          {"graph_seed", c.graph_seed},
          {"p", c.p},
          {"max_layers", c.max_layers},
          {"noisy", c.noisy},
          {"noise_mean_us", c.noise.mean_us},
          {"noise_stddev_ns", c.noise.stddev_ns},
          {"two_qubit_gate_ns", c.noise.two_qubit_ns},
          {"noise_seed", c.noise_seed},
          {"mitigate", c.mitigate},
          {"training_rows", c.training_rows},
          {"training_shots", c.training_shots},
          {"split", c.split},
          {"model", model_kind_name(c.model)},
          {"hidden", c.hidden},
          {"method", optimizer_method_name(c.method)},
          {"max_iter", c.max_iter},
          {"shots", c.shots},
          {"tqa_dt", c.tqa_dt},
          {"rhobeg", c.rhobeg},
          {"rhoend", c.rhoend},
          {"grid_scan", c.grid_scan},
          {"grid_points", c.grid_points},
          {"gamma_range", {c.gamma_lo, c.gamma_hi}},
          {"beta_range", {c.beta_lo, c.beta_hi}},
          {"landscape_shots", c.landscape_shots},
          {"seed", c.seed},
          {"output_dir", c.output_dir},
          {"threads", c.threads}};
}

ExperimentConfig experiment_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  ExperimentConfig c;
  const nlohmann::json defaults = to_json(c);
  for (const auto& [key, value] : j.items()) {
    if (!defaults.contains(key)) throw ConfigError("unknown config key '" + key + "'");
  }
  auto get = [&j](const char* key, auto& field) {
    if (!j.contains(key)) return;
    try {
      j.at(key).get_to(field);
    } catch (const nlohmann::json::exception&) {
      throw ConfigError(std::string("config key '") + key + "' has the wrong type");
    }
  };
  get("graph_file", c.graph_file);
  get("n", c.n);
  get("graph_seed", c.graph_seed);
  get("p", c.p);
  get("max_layers", c.max_layers);
  get("noisy", c.noisy);
  get("noise_mean_us", c.noise.mean_us);
  get("noise_stddev_ns", c.noise.stddev_ns);
  get("two_qubit_gate_ns", c.noise.two_qubit_ns);
  get("noise_seed", c.noise_seed);
  get("mitigate", c.mitigate);
  get("training_rows", c.training_rows);
  get("training_shots", c.training_shots);
  get("split", c.split);
  get("hidden", c.hidden);
  get("max_iter", c.max_iter);
  get("shots", c.shots);
  get("tqa_dt", c.tqa_dt);
  get("rhobeg", c.rhobeg);
  get("rhoend", c.rhoend);
  get("grid_scan", c.grid_scan);
  get("grid_points", c.grid_points);
  get("landscape_shots", c.landscape_shots);
  get("seed", c.seed);
  get("output_dir", c.output_dir);
  get("threads", c.threads);
  try {
    if (j.contains("model")) c.model = model_kind_from_name(j.at("model").get<std::string>());
    if (j.contains("method")) c.method = optimizer_method_from_name(j.at("method").get<std::string>());
    for (const char* key : {"gamma_range", "beta_range"}) {
      if (!j.contains(key)) continue;
      const auto& r = j.at(key);
      if (!r.is_array() || r.size() != 2) throw ConfigError(std::string(key) + " must be [lo, hi]");
      double& lo = std::string(key) == "gamma_range" ? c.gamma_lo : c.beta_lo;
      double& hi = std::string(key) == "gamma_range" ? c.gamma_hi : c.beta_hi;
      lo = r.at(0).get<double>();
      hi = r.at(1).get<double>();
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  validate(c);
  return c;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return experiment_config_from_json(j);
}

void validate(const ExperimentConfig& c) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw ConfigError(what);
  };
  require(c.graph_file.empty() ? c.n >= 4 && c.n % 2 == 0 : true, "generated graphs need an even n >= 4");
  require(c.p >= 1, "p must be >= 1");
  require(c.training_rows >= 1, "training_rows must be >= 1");
  require(c.training_shots >= 0 && c.shots >= 0 && c.landscape_shots >= 0, "shot counts must be >= 0");
  require(c.split > 0.0 && c.split < 1.0, "split must lie in (0, 1)");
  require(c.max_iter >= 1, "max_iter must be >= 1");
  require(c.tqa_dt > 0.0, "tqa_dt must be positive");
  require(c.rhoend > 0.0 && c.rhobeg >= c.rhoend, "need 0 < rhoend <= rhobeg");
  require(c.noise.mean_us > 0.0 && c.noise.stddev_ns >= 0.0 && c.noise.two_qubit_ns >= 0.0,
          "noise parameters out of range");
  require(!c.grid_scan || (c.p == 1 && c.grid_points >= 2), "grid_scan needs p = 1 and grid_points >= 2");
  require(!c.output_dir.empty(), "output_dir must be set");
}

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) { write_text(path, j.dump(2) + "\n"); }

template <typename F>
auto stage(const char* name, F&& body) {
  try {
    return body();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

std::string distribution_rows(const std::string& label, const EnergyDistribution& d) {
  std::ostringstream os;
  os.precision(17);
  for (const auto& [e, count] : d.histogram) os << label << ',' << e << ',' << count << '\n';
  return os.str();
}

}  // namespace

std::filesystem::path run_experiment(const ExperimentConfig& config) {
  validate(config);
  const std::filesystem::path dir(config.output_dir);
  stage("output", [&] {
    std::filesystem::create_directories(dir);
    write_json(dir / "config.json", to_json(config));
    return 0;
  });

  const Graph g = stage("graph", [&] {
    if (config.graph_file.empty()) return generate_rr3(config.n, config.graph_seed);
    std::ifstream in(config.graph_file);
    if (!in) throw std::runtime_error("cannot open graph file '" + config.graph_file + "'");
    return graph_from_json(nlohmann::json::parse(in));
  });
  write_json(dir / "graph.json", to_json(g));

  const MappingSolution mapping = stage("map", [&] {
    return solve_min_layers(g, config.max_layers < 0 ? g.n : config.max_layers);
  });
  write_json(dir / "mapping.json", to_json(mapping));

  const RoutedQaoa routed = stage("route", [&] { return route(g, mapping, config.p); });
  {
    nlohmann::json j = to_json(routed);
    j["report"] = routing_report(g, routed);
    write_json(dir / "circuit.json", j);
  }

  std::optional<NoiseModel> noise;
  if (config.noisy) {
    noise = stage("noise", [&] { return sample_noise_model(g.n, config.noise_seed, config.noise); });
    write_json(dir / "noise.json", to_json(*noise));
  }
  const NoiseModel* noise_ptr = noise ? &*noise : nullptr;

  std::optional<MitigatorModel> model;
  if (config.mitigate) {
    model = stage("train-mitigator", [&] {
      TrainingSetOptions topt;
      topt.rows = config.training_rows;
      topt.shots = config.training_shots;
      topt.threads = config.threads;
      const TrainingSet ts = generate_training_set(g, routed, noise_ptr, derive_seed(config.seed, 1), topt);
      write_json(dir / "trainset.json", to_json(ts));
      FfnnConfig ffnn;
      ffnn.hidden = config.hidden;
      return train(ts, config.model, config.split, derive_seed(config.seed, 2), ffnn);
    });
    write_json(dir / "model.json", to_json(*model));
  }

  const auto theta0 = tqa_init(config.p, config.tqa_dt);
  const OptimizationTrace trace = stage("optimize", [&] {
    OptimizeOptions oopt;
    oopt.shots = config.shots;
    oopt.seed = derive_seed(config.seed, 3);
    oopt.optimizer = {config.method, config.rhobeg, config.rhoend, config.max_iter};
    return optimize(g, routed, noise_ptr, model ? &*model : nullptr, theta0, oopt);
  });
  {
    std::string lines;
    for (const auto& it : trace.iterations) lines += to_json(it).dump() + "\n";
    write_text(dir / "trace.jsonl", lines);
  }

  const long dist_shots = config.shots > 0 ? config.shots : 4096;
  struct Distributions {
    EnergyDistribution initial_noisy, final_noisy, initial_ideal, final_ideal;
  };
  const Distributions dists = stage("distributions", [&] {
    const std::uint64_t s = derive_seed(config.seed, 4);
    return Distributions{energy_distribution(g, routed, theta0, noise_ptr, dist_shots, derive_seed(s, 0)),
                         energy_distribution(g, routed, trace.theta_star, noise_ptr, dist_shots, derive_seed(s, 1)),
                         energy_distribution(g, routed, theta0, nullptr, dist_shots, derive_seed(s, 2)),
                         energy_distribution(g, routed, trace.theta_star, nullptr, dist_shots, derive_seed(s, 3))};
  });
  write_text(dir / "distributions.csv",
             "label,energy,count\n" + distribution_rows("theta0_noisy", dists.initial_noisy) +
                 distribution_rows("theta_star_noisy", dists.final_noisy) +
                 distribution_rows("theta0_noiseless", dists.initial_ideal) +
                 distribution_rows("theta_star_noiseless", dists.final_ideal));

  const int p = config.p;
  const double exact_star = stage("lightcone", [&] {
    const std::vector<double> gam(trace.theta_star.begin(), trace.theta_star.begin() + p);
    const std::vector<double> bet(trace.theta_star.begin() + p, trace.theta_star.end());
    return energy(g, p, gam, bet, config.threads);
  });

  nlohmann::json summary;
  if (config.grid_scan) {
    summary["landscape"] = stage("landscape", [&] {
      const auto gammas = linspace(config.gamma_lo, config.gamma_hi, static_cast<std::size_t>(config.grid_points));
      const auto betas = linspace(config.beta_lo, config.beta_hi, static_cast<std::size_t>(config.grid_points));
      const Landscape ideal = lightcone_landscape(g, gammas, betas, config.threads);
      write_text(dir / "landscape.csv", ideal.to_csv());
      nlohmann::json j{{"noiseless_min", ideal.min()}, {"noiseless_contrast", ideal.contrast()}};
      if (noise_ptr != nullptr) {
        const Landscape noisy = simulated_landscape(g, routed, noise_ptr, gammas, betas, config.landscape_shots,
                                                    derive_seed(config.seed, 5), config.threads);
        write_text(dir / "landscape_noisy.csv", noisy.to_csv());
        j["noisy_min"] = noisy.min();
        j["noisy_contrast"] = noisy.contrast();
        j["contrast_ratio"] = noisy.contrast() / ideal.contrast();
      }
      return j;
    });
  }

  nlohmann::json em = nlohmann::json::array(), en = nlohmann::json::array();
  for (const auto& it : trace.iterations) {
    en.push_back(it.e_n);
    if (it.e_m) em.push_back(*it.e_m);
  }
  const EnergyExtremes ext = energy_extremes(g);
  summary["n"] = g.n;
  summary["p"] = p;
  summary["num_layers"] = mapping.num_layers;
  summary["two_qubit_gates"] = routed.expected_two_qubit_count(g.num_edges());
  summary["E_M"] = em;
  summary["E_N"] = en;
  summary["theta0"] = trace.theta0;
  summary["theta_star"] = trace.theta_star;
  summary["converged"] = trace.converged;
  summary["energy_min"] = ext.min;
  summary["energy_max"] = ext.max;
  summary["noiseless_theta_star_energy"] = exact_star;
  summary["alpha"] = {{"theta0_noisy", dists.initial_noisy.alpha},
                      {"theta_star_noisy", dists.final_noisy.alpha},
                      {"theta0_noiseless", dists.initial_ideal.alpha},
                      {"theta_star_noiseless", dists.final_ideal.alpha},
                      {"theta_star_exact", approximation_ratio(ext, exact_star)}};
  summary["best_cut"] = {{"value", dists.final_noisy.best_cut}, {"count", dists.final_noisy.best_cut_count}};
  if (model) {
    summary["model"] = {{"kind", model_kind_name(model->kind)},
                        {"train_mse", model->train_mse},
                        {"validation_mse", model->validation_mse},
                        {"validation_r2", model->r2_defined ? nlohmann::json(model->validation_r2) : nlohmann::json()}};
  }
  write_json(dir / "summary.json", summary);
  return dir;
}

}  // namespace swapqaoa
