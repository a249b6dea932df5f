#pragma once

// Independent reference implementations used only by the tests. They favor
// directness over speed: full Kronecker-product operators, brute-force
// enumeration and explicit Kraus sums.

#include "swapqaoa/circuit.hpp"
#include "swapqaoa/graph.hpp"
#include "swapqaoa/noise.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat from2(const swapqaoa::Matrix2& m) {
  Mat r(2, 2);
  r << m[0], m[1], m[2], m[3];
  return r;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return r;
}

// Operator on n qubits where qubit q is bit q of the basis index. The
// Kronecker order therefore runs from qubit n-1 (leftmost) down to qubit 0.
inline Mat embed1(const Mat& u, int q, int n) {
  Mat r = Mat::Identity(1, 1);
  for (int k = n - 1; k >= 0; --k) r = kron(r, k == q ? u : Mat(Mat::Identity(2, 2)));
  return r;
}

// Two-qubit matrix with basis index 2 bit_a + bit_b, built element by element.
inline Mat embed2(const swapqaoa::Matrix4& u, int a, int b, int n) {
  const std::size_t dim = std::size_t{1} << n;
  Mat r = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    const int in = 2 * static_cast<int>((col >> a) & 1U) + static_cast<int>((col >> b) & 1U);
    for (int out = 0; out < 4; ++out) {
      std::size_t row = col & ~((std::size_t{1} << a) | (std::size_t{1} << b));
      if (out & 2) row |= std::size_t{1} << a;
      if (out & 1) row |= std::size_t{1} << b;
      r(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += u[4 * out + in];
    }
  }
  return r;
}

inline Mat gate_operator(const swapqaoa::Gate& g, int n) {
  using swapqaoa::GateKind;
  if (g.kind == GateKind::Barrier || g.kind == GateKind::Measure) {
    return Mat::Identity(std::int64_t{1} << n, std::int64_t{1} << n);
  }
  if (swapqaoa::gate_arity(g.kind) == 1) return embed1(from2(swapqaoa::single_qubit_matrix(g.kind, g.param)), g.qubits[0], n);
  return embed2(swapqaoa::two_qubit_matrix(g.kind, g.param), g.qubits[0], g.qubits[1], n);
}

inline Mat circuit_unitary(const swapqaoa::Circuit& c) {
  Mat u = Mat::Identity(std::int64_t{1} << c.num_qubits, std::int64_t{1} << c.num_qubits);
  for (const auto& g : c.ops) u = gate_operator(g, c.num_qubits) * u;
  return u;
}

inline Vec basis0(int n) {
  Vec v = Vec::Zero(std::int64_t{1} << n);
  v[0] = 1.0;
  return v;
}

// Explicit Kraus sum for thermal relaxation on one qubit of a density matrix.
inline Mat relax(const Mat& rho, int q, int n, const swapqaoa::RelaxationChannel& ch) {
  const double pz = ch.dephasing_probability();
  Mat a0(2, 2), a1(2, 2), z(2, 2);
  a0 << 1.0, 0.0, 0.0, std::sqrt(1.0 - ch.gamma);
  a1 << 0.0, std::sqrt(ch.gamma), 0.0, 0.0;
  z << 1.0, 0.0, 0.0, -1.0;
  const Mat k0 = embed1(std::sqrt(1.0 - pz) * a0, q, n);
  const Mat k1 = embed1(std::sqrt(pz) * z * a0, q, n);
  const Mat k2 = embed1(a1, q, n);
  return k0 * rho * k0.adjoint() + k1 * rho * k1.adjoint() + k2 * rho * k2.adjoint();
}

// Density-matrix reference: each noisy gate relaxes all its wires afterwards.
inline std::vector<double> noisy_distribution(const swapqaoa::Circuit& c, const swapqaoa::NoiseModel& noise) {
  const int n = c.num_qubits;
  const Vec psi = basis0(n);
  Mat rho = psi * psi.adjoint();
  for (const auto& g : c.ops) {
    const Mat u = gate_operator(g, n);
    rho = u * rho * u.adjoint();
    if (noise.is_noisy(g.kind)) {
      const double t_us = noise.duration_ns(g.kind) * 1e-3;
      for (int q : g.qubits) {
        rho = relax(rho, q, n, swapqaoa::RelaxationChannel::make(noise.t1_us[q], noise.t2_us[q], t_us));
      }
    }
  }
  std::vector<double> p(static_cast<std::size_t>(rho.rows()));
  for (Eigen::Index i = 0; i < rho.rows(); ++i) p[static_cast<std::size_t>(i)] = rho(i, i).real();
  return p;
}

// Brute-force extremes of sum_e w_e z_u z_v.
inline std::pair<double, double> energy_range(const swapqaoa::Graph& g) {
  double lo = 1e300, hi = -1e300;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << g.n); ++x) {
    double e = 0.0;
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      const auto [u, v] = g.edges[k];
      e += (((x >> u) ^ (x >> v)) & 1U) ? -g.weights[k] : g.weights[k];
    }
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  return {lo, hi};
}

// Simple paths on `length` vertices by bitmask dynamic programming over
// (visited set, endpoint). Directed count; feasible for small graphs only.
inline std::uint64_t count_paths_dp(int n, const std::vector<std::pair<int, int>>& edges, int length) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::vector<std::uint64_t>> dp(states, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
  for (int v = 0; v < n; ++v) dp[std::size_t{1} << v][v] = 1;
  std::uint64_t total = 0;
  for (std::size_t mask = 1; mask < states; ++mask) {
    const int size = __builtin_popcountll(mask);
    for (int v = 0; v < n; ++v) {
      const auto c = dp[mask][v];
      if (c == 0) continue;
      if (size == length) {
        total += c;
        continue;
      }
      for (int w : adj[v]) {
        if (!((mask >> w) & 1U)) dp[mask | (std::size_t{1} << w)][w] += c;
      }
    }
  }
  return total;
}

}  // namespace oracle

namespace oracle {

// max |a - e^{iφ} b| with φ chosen from the largest entry of b.
inline double phase_distance(const Mat& a, const Mat& b) {
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) == 0.0) return a.cwiseAbs().maxCoeff();
  const cd phase = a(r, c) / b(r, c);
  const cd unit = phase / std::abs(phase);
  return (a - unit * b).cwiseAbs().maxCoeff();
}

inline Mat gates_unitary(const std::vector<swapqaoa::Gate>& gates, int n) {
  swapqaoa::Circuit c(n);
  c.append(gates);
  return circuit_unitary(c);
}

// exp(-i θ Z_i Z_j) as a diagonal on n qubits.
inline Mat zz_exponential(double theta, int i, int j, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Mat m = Mat::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    const bool differ = (((x >> i) ^ (x >> j)) & 1) != 0;
    m(x, x) = std::polar(1.0, differ ? theta : -theta);
  }
  return m;
}

// Permutation operator that exchanges qubits a and b.
inline Mat swap_operator(int a, int b, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Mat m = Mat::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    const Eigen::Index ba = (x >> a) & 1, bb = (x >> b) & 1;
    Eigen::Index y = x & ~((Eigen::Index{1} << a) | (Eigen::Index{1} << b));
    y |= (bb << a) | (ba << b);
    m(y, x) = 1.0;
  }
  return m;
}

// Gate-by-gate statevector run that touches only the affected amplitudes.
inline Vec run_statevector(const swapqaoa::Circuit& c) {
  using swapqaoa::GateKind;
  const int n = c.num_qubits;
  Vec psi = basis0(n);
  const Eigen::Index dim = psi.size();
  for (const auto& g : c.ops) {
    if (g.kind == GateKind::Barrier || g.kind == GateKind::Measure) continue;
    if (swapqaoa::gate_arity(g.kind) == 1) {
      const auto m = swapqaoa::single_qubit_matrix(g.kind, g.param);
      const Eigen::Index bit = Eigen::Index{1} << g.qubits[0];
      for (Eigen::Index x = 0; x < dim; ++x) {
        if (x & bit) continue;
        const cd a0 = psi[x], a1 = psi[x | bit];
        psi[x] = m[0] * a0 + m[1] * a1;
        psi[x | bit] = m[2] * a0 + m[3] * a1;
      }
    } else {
      const auto m = swapqaoa::two_qubit_matrix(g.kind, g.param);
      const Eigen::Index ba = Eigen::Index{1} << g.qubits[0], bb = Eigen::Index{1} << g.qubits[1];
      for (Eigen::Index x = 0; x < dim; ++x) {
        if (x & (ba | bb)) continue;
        const Eigen::Index idx[4] = {x, x | bb, x | ba, x | ba | bb};
        cd in[4], out[4] = {};
        for (int k = 0; k < 4; ++k) in[k] = psi[idx[k]];
        for (int r = 0; r < 4; ++r) {
          for (int k = 0; k < 4; ++k) out[r] += m[4 * r + k] * in[k];
        }
        for (int k = 0; k < 4; ++k) psi[idx[k]] = out[k];
      }
    }
  }
  return psi;
}

// prod_k exp(i beta_k sum X) exp(-i gamma_k sum_e w_e Z Z) |+>^n, qubit v = node v.
inline Vec qaoa_state(const swapqaoa::Graph& g, const std::vector<double>& gamma, const std::vector<double>& beta) {
  const int n = g.n;
  const Eigen::Index dim = Eigen::Index{1} << n;
  Vec psi = Vec::Constant(dim, cd(std::pow(2.0, -0.5 * n), 0.0));
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    for (Eigen::Index x = 0; x < dim; ++x) {
      double c = 0.0;
      for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto [u, v] = g.edges[e];
        c += g.weights[e] * ((((x >> u) ^ (x >> v)) & 1) ? -1.0 : 1.0);
      }
      psi[x] *= std::polar(1.0, -gamma[k] * c);
    }
    const cd cs(std::cos(beta[k]), 0.0), is(0.0, std::sin(beta[k]));
    for (int q = 0; q < n; ++q) {
      const Eigen::Index bit = Eigen::Index{1} << q;
      for (Eigen::Index x = 0; x < dim; ++x) {
        if (x & bit) continue;
        const cd a0 = psi[x], a1 = psi[x | bit];
        psi[x] = cs * a0 + is * a1;
        psi[x | bit] = is * a0 + cs * a1;
      }
    }
  }
  return psi;
}

}  // namespace oracle
