#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swapqaoa/experiment.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace swapqaoa;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ExperimentConfig tiny(const fs::path& dir) {
  ExperimentConfig c;
  c.n = 6;
  c.graph_seed = 3;
  c.p = 1;
  c.training_rows = 24;
  c.training_shots = 256;
  c.max_iter = 6;
  c.shots = 256;
  c.grid_scan = true;
  c.grid_points = 4;
  c.seed = 42;
  c.output_dir = dir.string();
  c.threads = 1;
  return c;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("swapqaoa_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("config defaults and json") {
  const ExperimentConfig d;
  CHECK(d.n == 10);
  CHECK(d.p == 2);
  CHECK(d.training_rows == 300);
  CHECK(d.split == 0.9);
  CHECK(d.max_iter == 50);
  CHECK(d.shots == 4096);
  CHECK(d.grid_points == 25);
  const ExperimentConfig back = experiment_config_from_json(to_json(d));
  CHECK(to_json(back) == to_json(d));
  const ExperimentConfig partial = experiment_config_from_json({{"n", 12}, {"model", "linear"}});
  CHECK(partial.n == 12);
  CHECK(partial.model == ModelKind::Linear);
  CHECK(partial.p == 2);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(experiment_config_from_json({{"no_such_key", 1}}), ConfigError);
  CHECK_THROWS_AS(experiment_config_from_json({{"n", "ten"}}), ConfigError);
  CHECK_THROWS_AS(experiment_config_from_json(nlohmann::json::array()), ConfigError);
  CHECK_THROWS_AS(load_experiment_config("/nonexistent/config.json"), ConfigError);
  ExperimentConfig c;
  c.p = 0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = ExperimentConfig{};
  c.n = 7;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = ExperimentConfig{};
  c.grid_scan = true;  // p = 2
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = ExperimentConfig{};
  c.split = 1.5;
  CHECK_THROWS_AS(validate(c), ConfigError);
}

TEST_CASE("pipeline writes every artifact and is reproducible") {
  const fs::path a = scratch("run_a");
  const fs::path b = scratch("run_b");
  CHECK(run_experiment(tiny(a)) == a);
  run_experiment(tiny(b));
  for (const char* name : {"config.json", "graph.json", "mapping.json", "circuit.json", "noise.json", "trainset.json",
                           "model.json", "trace.jsonl", "distributions.csv", "landscape.csv", "summary.json"}) {
    CAPTURE(name);
    CHECK(fs::exists(a / name));
  }
  for (const char* name : {"graph.json", "mapping.json", "noise.json", "trainset.json", "model.json",
                           "distributions.csv", "landscape.csv"}) {
    CAPTURE(name);
    CHECK(slurp(a / name) == slurp(b / name));
  }
  const auto summary = nlohmann::json::parse(slurp(a / "summary.json"));
  CHECK(summary.is_object());
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("stage failures name the stage") {
  ExperimentConfig c = tiny(scratch("run_bad"));
  c.graph_file = "/nonexistent/graph.json";
  try {
    run_experiment(c);
    FAIL("expected a stage error");
  } catch (const StageError& e) {
    CHECK(e.stage() == "graph");
  }
  fs::remove_all(c.output_dir);
}
