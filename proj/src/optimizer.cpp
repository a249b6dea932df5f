#include "swapqaoa/optimizer.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace swapqaoa {

std::string_view optimizer_method_name(OptimizerMethod m) {
  return m == OptimizerMethod::TrustRegion ? "trust-region" : "nelder-mead";
}

OptimizerMethod optimizer_method_from_name(std::string_view name) {
  if (name == "trust-region" || name == "cobyla") return OptimizerMethod::TrustRegion;
  if (name == "nelder-mead" || name == "simplex") return OptimizerMethod::NelderMead;
  throw std::invalid_argument("unknown optimizer method '" + std::string(name) + "'");
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Counts evaluations and remembers the best point.
class Counter {
 public:
  Counter(const Objective& f, int budget) : f_(f), budget_(budget) {}

  [[nodiscard]] bool exhausted() const { return evals_ >= budget_; }
  double operator()(const VectorXd& x) {
    std::vector<double> v(x.data(), x.data() + x.size());
    const double fx = f_(v);
    ++evals_;
    if (!std::isfinite(fx)) throw std::runtime_error("objective returned a non-finite value");
    if (fx < best_f_) {
      best_f_ = fx;
      best_x_ = v;
    }
    return fx;
  }
  [[nodiscard]] OptimizerResult result(bool converged) const { return {best_x_, best_f_, evals_, converged}; }

 private:
  const Objective& f_;
  int budget_;
  int evals_ = 0;
  double best_f_ = std::numeric_limits<double>::infinity();
  std::vector<double> best_x_;
};

OptimizerResult trust_region(Counter& eval, const VectorXd& x0, const OptimizerOptions& opt) {
  const int n = static_cast<int>(x0.size());
  double rho = opt.rhobeg;
  std::vector<VectorXd> y(n + 1, x0);
  std::vector<double> f(n + 1);
  f[0] = eval(x0);
  for (int i = 1; i <= n; ++i) {
    if (eval.exhausted()) return eval.result(false);
    y[i][i - 1] += rho;
    f[i] = eval(y[i]);
  }
  while (!eval.exhausted()) {
    const int best = static_cast<int>(std::min_element(f.begin(), f.end()) - f.begin());
    std::swap(y[0], y[best]);
    std::swap(f[0], f[best]);

    MatrixXd a(n, n);
    VectorXd df(n);
    for (int i = 0; i < n; ++i) {
      a.row(i) = (y[i + 1] - y[0]).transpose();
      df[i] = f[i + 1] - f[0];
    }
    Eigen::FullPivLU<MatrixXd> lu(a);
    // Geometry: every vertex within 2.1 rho of the best and at least rho / 4
    // away from the face spanned by the others.
    int fix = -1;
    double worst = 0.0;
    MatrixXd inv;
    if (lu.isInvertible()) {
      inv = lu.inverse();
      for (int i = 0; i < n; ++i) {
        const double dist = a.row(i).norm();
        const double face = 1.0 / inv.col(i).norm();
        const double badness = std::max(dist / (2.1 * rho), 0.25 * rho / face);
        if (badness > 1.0 && badness > worst) {
          worst = badness;
          fix = i;
        }
      }
    } else {
      fix = 0;
    }
    if (fix >= 0) {
      VectorXd dir;
      if (lu.isInvertible()) {
        dir = inv.col(fix).normalized();
      } else {
        // Rebuild the simplex around the best point.
        for (int i = 1; i <= n && !eval.exhausted(); ++i) {
          y[i] = y[0];
          y[i][i - 1] += rho;
          f[i] = eval(y[i]);
        }
        continue;
      }
      const VectorXd g = lu.solve(df);
      if (g.dot(dir) > 0.0) dir = -dir;
      y[fix + 1] = y[0] + rho * dir;
      f[fix + 1] = eval(y[fix + 1]);
      continue;
    }

    const VectorXd g = lu.solve(df);
    const double gnorm = g.norm();
    bool success = false;
    if (gnorm > 0.0 && std::isfinite(gnorm)) {
      const VectorXd step = -rho * g / gnorm;
      const VectorXd trial = y[0] + step;
      const double ft = eval(trial);
      const double predicted = rho * gnorm;
      success = f[0] - ft >= 0.1 * predicted;
      // Replace the vertex whose swap keeps the simplex fattest.
      const VectorXd ratios = (inv.transpose() * step).cwiseAbs();
      int j = 0;
      double best_ratio = -1.0;
      for (int i = 0; i < n; ++i) {
        const double score = ratios[i] * std::max(1.0, (y[i + 1] - trial).norm() / rho);
        if (score > best_ratio) {
          best_ratio = score;
          j = i;
        }
      }
      y[j + 1] = trial;
      f[j + 1] = ft;
    }
    if (!success) {
      if (rho <= opt.rhoend) return eval.result(true);
      rho = rho * 0.5 <= 1.5 * opt.rhoend ? opt.rhoend : rho * 0.5;
    }
  }
  return eval.result(false);
}

OptimizerResult nelder_mead(Counter& eval, const VectorXd& x0, const OptimizerOptions& opt) {
  const int n = static_cast<int>(x0.size());
  std::vector<VectorXd> s(n + 1, x0);
  std::vector<double> f(n + 1);
  f[0] = eval(x0);
  for (int i = 1; i <= n; ++i) {
    if (eval.exhausted()) return eval.result(false);
    s[i][i - 1] += opt.rhobeg;
    f[i] = eval(s[i]);
  }
  std::vector<int> order(n + 1);
  while (!eval.exhausted()) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int l, int r) { return f[l] < f[r]; });
    const int lo = order.front(), hi = order.back(), second = order[n - 1];
    double size = 0.0;
    for (int i = 0; i <= n; ++i) size = std::max(size, (s[i] - s[lo]).norm());
    if (size <= opt.rhoend) return eval.result(true);

    VectorXd centroid = VectorXd::Zero(n);
    for (int i = 0; i <= n; ++i) {
      if (i != hi) centroid += s[i];
    }
    centroid /= n;
    const VectorXd xr = centroid + (centroid - s[hi]);
    const double fr = eval(xr);
    if (fr < f[lo]) {
      if (eval.exhausted()) {
        s[hi] = xr;
        f[hi] = fr;
        break;
      }
      const VectorXd xe = centroid + 2.0 * (centroid - s[hi]);
      const double fe = eval(xe);
      if (fe < fr) {
        s[hi] = xe;
        f[hi] = fe;
      } else {
        s[hi] = xr;
        f[hi] = fr;
      }
      continue;
    }
    if (fr < f[second]) {
      s[hi] = xr;
      f[hi] = fr;
      continue;
    }
    if (eval.exhausted()) break;
    const bool outside = fr < f[hi];
    const VectorXd xc = outside ? VectorXd(centroid + 0.5 * (xr - centroid)) : VectorXd(centroid + 0.5 * (s[hi] - centroid));
    const double fc = eval(xc);
    if (fc < (outside ? fr : f[hi])) {
      s[hi] = xc;
      f[hi] = fc;
      continue;
    }
    for (int i = 0; i <= n && !eval.exhausted(); ++i) {
      if (i == lo) continue;
      s[i] = s[lo] + 0.5 * (s[i] - s[lo]);
      f[i] = eval(s[i]);
    }
  }
  return eval.result(false);
}

}  // namespace

OptimizerResult minimize(const Objective& f, std::vector<double> x0, const OptimizerOptions& options) {
  if (x0.empty()) throw std::invalid_argument("optimizer needs at least one parameter");
  if (!(options.rhobeg > 0.0) || !(options.rhoend > 0.0) || options.rhoend > options.rhobeg) {
    throw std::invalid_argument("need 0 < rhoend <= rhobeg");
  }
  if (options.max_evals < 1) throw std::invalid_argument("max_evals must be positive");
  Counter eval(f, options.max_evals);
  const VectorXd start = Eigen::Map<const VectorXd>(x0.data(), static_cast<Eigen::Index>(x0.size()));
  return options.method == OptimizerMethod::TrustRegion ? trust_region(eval, start, options)
                                                        : nelder_mead(eval, start, options);
}

}  // namespace swapqaoa
