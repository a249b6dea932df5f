#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swapqaoa/optimizer.hpp"

#include <cmath>

using namespace swapqaoa;

namespace {

double bowl(const std::vector<double>& x) {
  return (x[0] - 1.0) * (x[0] - 1.0) + 2.0 * (x[1] + 0.5) * (x[1] + 0.5) + 0.5 * (x[2] - 0.25) * (x[2] - 0.25);
}

}  // namespace

TEST_CASE("both methods find the minimum of a quadratic bowl") {
  for (OptimizerMethod method : {OptimizerMethod::TrustRegion, OptimizerMethod::NelderMead}) {
    OptimizerOptions opt;
    opt.method = method;
    opt.rhobeg = 0.5;
    opt.rhoend = 1e-4;
    opt.max_evals = 2000;
    const OptimizerResult r = minimize(bowl, {0.0, 0.0, 0.0}, opt);
    CAPTURE(optimizer_method_name(method));
    CHECK(std::abs(r.x[0] - 1.0) < 1e-3);
    CHECK(std::abs(r.x[1] + 0.5) < 1e-3);
    CHECK(std::abs(r.x[2] - 0.25) < 1e-3);
    CHECK(r.fx == doctest::Approx(bowl(r.x)));
    CHECK(r.converged);
    CHECK(r.evals <= 2000);
  }
}

TEST_CASE("one dimensional parabola") {
  const Objective f = [](const std::vector<double>& x) { return (x[0] - 1.0) * (x[0] - 1.0); };
  OptimizerOptions opt;
  opt.max_evals = 200;
  const OptimizerResult r = minimize(f, {0.0}, opt);
  CHECK(std::abs(r.x[0] - 1.0) < 1e-3);
  CHECK(r.converged);
}

TEST_CASE("evaluation budget") {
  int calls = 0;
  const Objective f = [&](const std::vector<double>& x) {
    ++calls;
    return bowl(x);
  };
  OptimizerOptions opt;
  opt.max_evals = 7;
  const OptimizerResult r = minimize(f, {5.0, 5.0, 5.0}, opt);
  CHECK(calls == r.evals);
  CHECK(r.evals <= 7);
  CHECK_FALSE(r.converged);
  // The reported point is the best evaluated one.
  CHECK(r.fx <= bowl({5.0, 5.0, 5.0}));
}

TEST_CASE("default radii and names") {
  const OptimizerOptions opt;
  CHECK(opt.rhobeg == 0.1);
  CHECK(opt.rhoend == 1e-3);
  CHECK(opt.max_evals == 50);
  CHECK(optimizer_method_from_name("cobyla") == OptimizerMethod::TrustRegion);
  CHECK(optimizer_method_from_name("simplex") == OptimizerMethod::NelderMead);
  CHECK(optimizer_method_from_name(optimizer_method_name(OptimizerMethod::NelderMead)) == OptimizerMethod::NelderMead);
  CHECK_THROWS(optimizer_method_from_name("bfgs"));
}

TEST_CASE("noisy objective still improves") {
  std::uint64_t state = 1;
  const Objective f = [&](const std::vector<double>& x) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    const double jitter = (static_cast<double>(state >> 11) / 9007199254740992.0 - 0.5) * 0.01;
    return bowl(x) + jitter;
  };
  OptimizerOptions opt;
  opt.rhobeg = 0.3;
  opt.max_evals = 300;
  const OptimizerResult r = minimize(f, {0.0, 0.0, 0.0}, opt);
  CHECK(bowl(r.x) < 0.05);
}
