#pragma once

#include <functional>
#include <string_view>
#include <vector>

namespace swapqaoa {

enum class OptimizerMethod { TrustRegion, NelderMead };

std::string_view optimizer_method_name(OptimizerMethod m);
OptimizerMethod optimizer_method_from_name(std::string_view name);

struct OptimizerOptions {
  OptimizerMethod method = OptimizerMethod::TrustRegion;
  double rhobeg = 0.1;   // initial trust radius (simplex edge for Nelder-Mead)
  double rhoend = 1e-3;  // final trust radius
  int max_evals = 50;
};

using Objective = std::function<double(const std::vector<double>&)>;

struct OptimizerResult {
  std::vector<double> x;  // best point seen
  double fx = 0.0;
  int evals = 0;
  bool converged = false;  // radius collapsed before the evaluation budget ran out
};

/// Derivative-free local minimization. TrustRegion keeps a simplex of n + 1
/// interpolation points, steps along the negative gradient of the linear
/// interpolant to the trust-region boundary, and halves the radius when the
/// step fails to deliver a tenth of the predicted decrease.
OptimizerResult minimize(const Objective& f, std::vector<double> x0, const OptimizerOptions& options = {});

}  // namespace swapqaoa
