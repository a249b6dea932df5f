// Command-line front end. Exit codes: 0 success, 2 configuration or usage
// error, 3 stage failure.

#include "swapqaoa/driver.hpp"
#include "swapqaoa/experiment.hpp"
#include "swapqaoa/graph.hpp"
#include "swapqaoa/hardware.hpp"
#include "swapqaoa/lightcone.hpp"
#include "swapqaoa/mitigation.hpp"
#include "swapqaoa/noise.hpp"
#include "swapqaoa/sat_mapper.hpp"
#include "swapqaoa/simulator.hpp"
#include "swapqaoa/swap_router.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace swapqaoa;
using nlohmann::json;

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return json::parse(in);
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

void emit_json(const std::string& path, const json& j) { emit(path, j.dump(2) + "\n"); }

// Shared inputs for the commands that act on a routed circuit.
struct CircuitArgs {
  std::string graph;
  std::string mapping;
  int p = 1;
  std::string noise;

  void add(CLI::App* cmd, bool with_noise = true, bool graph_required = true) {
    auto* opt = cmd->add_option("--graph", graph, "graph JSON");
    if (graph_required) opt->required();
    cmd->add_option("--mapping", mapping, "mapping JSON (solved on the fly when omitted)");
    cmd->add_option("--p", p, "QAOA depth")->check(CLI::PositiveNumber);
    if (with_noise) cmd->add_option("--noise", noise, "noise-model JSON (noiseless when omitted)");
  }
  [[nodiscard]] Graph load_graph() const { return graph_from_json(read_json(graph)); }
  [[nodiscard]] RoutedQaoa load_routed(const Graph& g) const {
    const MappingSolution m = mapping.empty() ? solve_min_layers(g, g.n) : mapping_from_json(read_json(mapping));
    validate_mapping(g, m);
    return route(g, m, p);
  }
  [[nodiscard]] std::optional<NoiseModel> load_noise() const {
    if (noise.empty()) return std::nullopt;
    return noise_from_json(read_json(noise));
  }
};


}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SAT-mapped swap-network QAOA with learned error mitigation"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<std::uint64_t> seed_override;
  app.add_option("--seed", seed_override, "seed used by every stage of the chosen command");
  std::string out;
  std::string stage_name;
  std::function<void()> action;
  auto seed_or = [&](std::uint64_t fallback) { return seed_override.value_or(fallback); };

  // graph gen
  auto* graph_cmd = app.add_subcommand("graph", "random 3-regular graphs");
  graph_cmd->require_subcommand(1);
  graph_cmd->fallthrough();
  auto* gen_cmd = graph_cmd->add_subcommand("gen", "write --count graphs with seeds S, S+1, ...");
  int n = 10;
  int count = 1;
  std::uint64_t graph_seed = 5;
  gen_cmd->add_option("--n", n, "number of nodes (even)");
  gen_cmd->add_option("--count", count, "number of graphs")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--graph-seed", graph_seed, "first generator seed (same as --seed)");
  gen_cmd->add_option("--out", out, "output directory (stdout when omitted and --count is 1)");
  gen_cmd->callback([&] {
    stage_name = "graph";
    action = [&] {
      const std::uint64_t first = seed_or(graph_seed);
      if (out.empty()) {
        if (count != 1) throw ConfigError("--out DIR is required when --count > 1");
        emit_json("", to_json(generate_rr3(n, first)));
        return;
      }
      std::filesystem::create_directories(out);
      for (int i = 0; i < count; ++i) {
        const std::uint64_t s = first + static_cast<std::uint64_t>(i);
        const auto path = std::filesystem::path(out) / ("rr3_n" + std::to_string(n) + "_s" + std::to_string(s) + ".json");
        emit_json(path.string(), to_json(generate_rr3(n, s)));
        std::cout << path.string() << "\n";
      }
    };
  });

  // map
  auto* map_cmd = app.add_subcommand("map", "SAT search for the minimal swap-layer count");
  std::string graph_path;
  int max_layers = -1;
  map_cmd->add_option("--graph", graph_path, "graph JSON")->required();
  map_cmd->add_option("--lmax,--max-layers", max_layers, "search bound (default n)");
  map_cmd->add_option("--out", out, "output JSON");
  map_cmd->callback([&] {
    stage_name = "map";
    action = [&] {
      const Graph g = graph_from_json(read_json(graph_path));
      emit_json(out, to_json(solve_min_layers(g, max_layers < 0 ? g.n : max_layers)));
    };
  });

  // transpile
  auto* tr_cmd = app.add_subcommand("transpile", "route QAOA through the swap network");
  CircuitArgs ca;
  ca.add(tr_cmd, false);
  tr_cmd->add_option("--out", out, "output JSON");
  tr_cmd->callback([&] {
    stage_name = "transpile";
    action = [&] {
      const Graph g = ca.load_graph();
      const RoutedQaoa r = ca.load_routed(g);
      json j = to_json(r);
      j["report"] = routing_report(g, r);
      emit_json(out, j);
    };
  });

  // noise
  auto* noise_cmd = app.add_subcommand("noise", "sample a thermal-relaxation noise model");
  NoiseSampling ns;
  std::uint64_t noise_seed = 1;
  noise_cmd->add_option("--n", n, "number of qubits");
  noise_cmd->add_option("--gate-ns", ns.two_qubit_ns, "two-qubit gate duration in ns");
  noise_cmd->add_option("--mean-us", ns.mean_us, "mean T1 and T2 in microseconds");
  noise_cmd->add_option("--stddev-ns", ns.stddev_ns, "T1/T2 spread in ns");
  noise_cmd->add_option("--noise-seed", noise_seed, "sampling seed");
  noise_cmd->add_option("--out", out, "output JSON");
  noise_cmd->callback([&] {
    stage_name = "noise";
    action = [&] { emit_json(out, to_json(sample_noise_model(n, seed_or(noise_seed), ns))); };
  });

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "sample a circuit (or the bound routed QAOA circuit)");
  std::vector<double> theta;
  long shots = 4096;
  std::string circuit_path;
  sim_cmd->add_option("--circuit", circuit_path, "circuit or transpile JSON");
  sim_cmd->add_option("--theta", theta, "gamma_1..gamma_p beta_1..beta_p for symbolic circuits");
  sim_cmd->add_option("--shots", shots, "shot count")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--out", out, "output JSON");
  ca.add(sim_cmd, true, false);
  sim_cmd->callback([&] {
    stage_name = "simulate";
    action = [&] {
      if (circuit_path.empty() == ca.graph.empty() && circuit_path.empty()) {
        throw ConfigError("simulate needs --circuit or --graph");
      }
      const auto noise = ca.load_noise();
      std::optional<Graph> g;
      if (!ca.graph.empty()) g = ca.load_graph();
      Circuit c;
      if (!circuit_path.empty()) {
        const json j = read_json(circuit_path);
        c = circuit_from_json(j.contains("circuit") ? j.at("circuit") : j);
      } else {
        c = ca.load_routed(*g).circuit;
      }
      if (c.has_free_parameters()) {
        if (theta.empty()) throw ConfigError("circuit has free angles; pass --theta");
        c = c.bind(theta);
      }
      const ShotResult res = simulate(c, noise ? &*noise : nullptr, shots, seed_or(0));
      json j = to_json(res);
      if (g) j["energy"] = to_json(energy_distribution(*g, logical_counts(res)));
      emit_json(out, j);
    };
  });

  // train-mitigator
  auto* train_cmd = app.add_subcommand("train-mitigator", "generate training data and fit a mitigator");
  TrainingSetOptions topt;
  topt.shots = 4096;
  double split = 0.9;
  std::string kind = "ffnn";
  std::string trainset_out;
  std::string trainset_in;
  ca.add(train_cmd, true, false);
  train_cmd->add_option("--trainset", trainset_in, "train on an existing training set instead of generating one");
  train_cmd->add_option("--rows", topt.rows, "training rows")->check(CLI::PositiveNumber);
  train_cmd->add_option("--shots", topt.shots, "shots per row (0 = exact)");
  train_cmd->add_option("--split", split, "training fraction")->check(CLI::Range(0.0, 1.0));
  train_cmd->add_option("--kind,--model", kind, "ffnn or linear");
  train_cmd->add_option("--trainset-out", trainset_out, "also write the training set");
  train_cmd->add_option("--out", out, "model JSON");
  train_cmd->callback([&] {
    stage_name = "train-mitigator";
    action = [&] {
      const std::uint64_t s = seed_or(0);
      TrainingSet ts;
      if (!trainset_in.empty()) {
        ts = training_set_from_json(read_json(trainset_in));
      } else {
        if (ca.graph.empty()) throw ConfigError("train-mitigator needs --trainset or --graph");
        const Graph g = ca.load_graph();
        const RoutedQaoa r = ca.load_routed(g);
        const auto noise = ca.load_noise();
        ts = generate_training_set(g, r, noise ? &*noise : nullptr, derive_seed(s, 1), topt);
      }
      if (!trainset_out.empty()) emit_json(trainset_out, to_json(ts));
      emit_json(out, to_json(train(ts, model_kind_from_name(kind), split, derive_seed(s, 2))));
    };
  });

  // optimize
  auto* opt_cmd = app.add_subcommand("optimize", "closed-loop angle optimization");
  std::string model_path;
  OptimizeOptions oopt;
  std::string method = "trust-region";
  double dt = 0.75;
  ca.add(opt_cmd);
  opt_cmd->add_option("--model", model_path, "mitigator JSON (optimizes E_N when omitted)");
  opt_cmd->add_option("--shots", oopt.shots, "shots per evaluation (0 = exact)");
  opt_cmd->add_option("--max-iter", oopt.optimizer.max_evals, "evaluation budget");
  opt_cmd->add_option("--method", method, "trust-region or nelder-mead");
  opt_cmd->add_option("--rhobeg", oopt.optimizer.rhobeg, "initial trust radius");
  opt_cmd->add_option("--rhoend", oopt.optimizer.rhoend, "final trust radius");
  opt_cmd->add_option("--dt", dt, "TQA time step for the starting angles");
  opt_cmd->add_option("--out", out, "trace JSON-lines");
  opt_cmd->callback([&] {
    stage_name = "optimize";
    action = [&] {
      const Graph g = ca.load_graph();
      const RoutedQaoa r = ca.load_routed(g);
      const auto noise = ca.load_noise();
      std::optional<MitigatorModel> model;
      if (!model_path.empty()) model = model_from_json(read_json(model_path));
      oopt.seed = seed_or(0);
      oopt.optimizer.method = optimizer_method_from_name(method);
      const auto trace =
          optimize(g, r, noise ? &*noise : nullptr, model ? &*model : nullptr, tqa_init(ca.p, dt), oopt);
      std::string lines;
      for (const auto& it : trace.iterations) lines += to_json(it).dump() + "\n";
      emit(out, lines);
      std::cerr << "theta* = " << json(trace.theta_star).dump() << (trace.converged ? " (converged)\n" : "\n");
    };
  });

  // landscape
  auto* land_cmd = app.add_subcommand("landscape", "depth-one energy grid");
  int grid = 25;
  std::vector<double> range{0.0, 1.5707963267948966};
  std::vector<double> beta_range;
  long land_shots = 0;
  ca.add(land_cmd);
  land_cmd->add_option("--grid", grid, "points per axis")->check(CLI::Range(2, 10000));
  land_cmd->add_option("--range", range, "gamma range lo hi")->expected(2);
  land_cmd->add_option("--beta-range", beta_range, "beta range lo hi (defaults to --range)")->expected(2);
  land_cmd->add_option("--shots", land_shots, "shots per point for noisy scans (0 = exact)");
  land_cmd->add_option("--out", out, "CSV output");
  land_cmd->callback([&] {
    stage_name = "landscape";
    action = [&] {
      const Graph g = ca.load_graph();
      const auto br = beta_range.empty() ? range : beta_range;
      const auto gammas = linspace(range[0], range[1], static_cast<std::size_t>(grid));
      const auto betas = linspace(br[0], br[1], static_cast<std::size_t>(grid));
      const auto noise = ca.load_noise();
      if (noise) {
        CircuitArgs one = ca;
        one.p = 1;
        emit(out, simulated_landscape(g, one.load_routed(g), &*noise, gammas, betas, land_shots, seed_or(0)).to_csv());
      } else {
        emit(out, lightcone_landscape(g, gammas, betas).to_csv());
      }
    };
  });

  // lightcone
  auto* lc_cmd = app.add_subcommand("lightcone", "exact noiseless energy from light cones");
  std::vector<double> gammas_in, betas_in;
  int lc_p = 1;
  lc_cmd->add_option("--graph", graph_path, "graph JSON")->required();
  lc_cmd->add_option("--p", lc_p, "depth")->check(CLI::PositiveNumber);
  lc_cmd->add_option("--gamma", gammas_in, "gamma values")->required();
  lc_cmd->add_option("--beta", betas_in, "beta values")->required();
  lc_cmd->add_option("--out", out, "output JSON");
  lc_cmd->callback([&] {
    stage_name = "lightcone";
    action = [&] {
      const Graph g = graph_from_json(read_json(graph_path));
      const auto zz = edge_correlators(g, lc_p, gammas_in, betas_in);
      double e = 0.0;
      for (std::size_t k = 0; k < zz.size(); ++k) e += g.weights[k] * zz[k];
      int width = 0;
      for (const auto& edge : g.edges) width = std::max(width, extract_lightcone(g, edge, lc_p).width());
      emit_json(out, {{"energy", e},
                      {"correlators", zz},
                      {"max_width", width},
                      {"alpha", approximation_ratio(g, e)}});
    };
  });

  // select-line
  auto* line_cmd = app.add_subcommand("select-line", "best qubit line on a coupling map");
  std::string map_path;
  int length = 10;
  bool directed = false;
  line_cmd->add_option("--map", map_path, "coupling-map JSON (bundled 127-qubit fixture when omitted)");
  line_cmd->add_option("--length", length, "line length in qubits")->required();
  line_cmd->add_flag("--directed", directed, "count a path and its reverse separately");
  line_cmd->add_option("--out", out, "output JSON");
  line_cmd->callback([&] {
    stage_name = "select-line";
    action = [&] {
      const CouplingMap m = map_path.empty() ? eagle127() : load_coupling_map(map_path);
      const BestLine best = best_line(m, length);
      emit_json(out, {{"length", length},
                      {"lines", count_lines(m, length, {directed, 0})},
                      {"directed", directed},
                      {"path", best.path},
                      {"fidelity", best.fidelity}});
    };
  });

  // compare-models
  auto* cmp_cmd = app.add_subcommand("compare-models", "FFNN versus linear holdout MSE");
  std::string trainset_path;
  int resamples = 10;
  double cmp_split = 0.8;
  cmp_cmd->add_option("--trainset", trainset_path, "training-set JSON")->required();
  cmp_cmd->add_option("--resamples", resamples, "resample count")->check(CLI::PositiveNumber);
  cmp_cmd->add_option("--split", cmp_split, "training fraction")->check(CLI::Range(0.0, 1.0));
  cmp_cmd->add_option("--out", out, "output JSON");
  cmp_cmd->callback([&] {
    stage_name = "compare-models";
    action = [&] {
      const TrainingSet ts = training_set_from_json(read_json(trainset_path));
      emit_json(out, to_json(compare_models(ts, resamples, cmp_split, seed_or(0))));
    };
  });

  // repeat-study
  auto* rep_cmd = app.add_subcommand("repeat-study", "mitigated versus unmitigated optimization repeats");
  RepeatStudyOptions ropt;
  ropt.training.shots = 4096;
  ca.add(rep_cmd, false);
  rep_cmd->add_option("--repeats", ropt.repeats, "repeat count")->check(CLI::PositiveNumber);
  rep_cmd->add_option("--rows", ropt.training.rows, "training rows per repeat");
  rep_cmd->add_option("--gate-ns", ropt.noise.two_qubit_ns, "two-qubit gate duration in ns");
  rep_cmd->add_option("--max-iter", ropt.optimize.optimizer.max_evals, "evaluation budget per arm");
  rep_cmd->add_option("--threads", ropt.threads, "repeats in flight");
  rep_cmd->add_option("--out", out, "summary JSON");
  rep_cmd->callback([&] {
    stage_name = "repeat-study";
    action = [&] {
      const Graph g = ca.load_graph();
      emit_json(out, to_json(repeat_study(g, ca.load_routed(g), seed_or(0), ropt)));
    };
  });

  // report
  auto* rep2_cmd = app.add_subcommand("report", "CSV views of a trace or an experiment directory");
  std::string trace_path;
  rep2_cmd->add_option("--trace", trace_path, "trace JSON-lines")->required();
  rep2_cmd->add_option("--out", out, "CSV output");
  rep2_cmd->callback([&] {
    stage_name = "report";
    action = [&] {
      std::ifstream in(trace_path);
      if (!in) throw std::runtime_error("cannot open '" + trace_path + "'");
      std::ostringstream os;
      os.precision(17);
      os << "iteration,E_M,E_N\n";
      std::string line;
      for (int k = 0; std::getline(in, line); ++k) {
        if (line.empty()) continue;
        const json j = json::parse(line);
        os << k << ',' << (j.at("E_M").is_null() ? std::string() : std::to_string(j.at("E_M").get<double>())) << ','
           << j.at("E_N").get<double>() << '\n';
      }
      emit(out, os.str());
    };
  });

  // run
  auto* run_cmd = app.add_subcommand("run", "full experiment from a config file");
  std::string config_path;
  std::string out_dir;
  run_cmd->add_option("--config", config_path, "config JSON (defaults when omitted)");
  run_cmd->add_option("--out", out_dir, "output directory override");
  run_cmd->callback([&] {
    stage_name = "run";
    action = [&] {
      ExperimentConfig cfg = config_path.empty() ? ExperimentConfig{} : load_experiment_config(config_path);
      if (seed_override) cfg.seed = *seed_override;
      if (!out_dir.empty()) cfg.output_dir = out_dir;
      std::cout << run_experiment(cfg).string() << "\n";
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    action();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const StageError& e) {
    std::cerr << "stage " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "stage " << stage_name << ": " << e.what() << "\n";
    return 3;
  }
  return 0;
}
