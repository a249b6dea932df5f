#include "swapqaoa/simulator.hpp"

#include "swapqaoa/density_matrix.hpp"
#include "swapqaoa/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace swapqaoa {

namespace {

using cd = std::complex<double>;

Matrix2 mul2(const Matrix2& a, const Matrix2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

Matrix4 mul4(const Matrix4& a, const Matrix4& b) {
  Matrix4 out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      cd s = 0.0;
      for (int k = 0; k < 4; ++k) s += a[4 * i + k] * b[4 * k + j];
      out[4 * i + j] = s;
    }
  }
  return out;
}

Matrix4 kron(const Matrix2& hi, const Matrix2& lo) {
  Matrix4 out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out[4 * i + j] = hi[2 * (i >> 1) + (j >> 1)] * lo[2 * (i & 1) + (j & 1)];
  }
  return out;
}

constexpr Matrix2 kIdentity2{cd{1.0}, cd{0.0}, cd{0.0}, cd{1.0}};

std::vector<int> measurement_map(const Circuit& c) {
  if (!c.final_permutation.empty()) return c.final_permutation;
  std::vector<int> id(static_cast<std::size_t>(c.num_qubits));
  std::iota(id.begin(), id.end(), 0);
  return id;
}

// Relaxation channels per (wire, gate kind), built once per run.
class ChannelTable {
 public:
  ChannelTable(const NoiseModel& noise, int num_qubits) : noise_(noise) {
    if (noise.num_qubits() < num_qubits) {
      throw std::invalid_argument("noise model covers " + std::to_string(noise.num_qubits()) +
                                  " qubits but the circuit uses " + std::to_string(num_qubits));
    }
  }
  const RelaxationChannel* get(GateKind kind, int wire) {
    if (!noise_.is_noisy(kind)) return nullptr;
    auto key = std::make_pair(kind, wire);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      const double t_us = noise_.duration_ns(kind) * 1e-3;
      it = cache_.emplace(key, RelaxationChannel::make(noise_.t1_us[wire], noise_.t2_us[wire], t_us)).first;
    }
    return &it->second;
  }

 private:
  const NoiseModel& noise_;
  std::map<std::pair<GateKind, int>, RelaxationChannel> cache_;
};

void require_bound(const Circuit& c) {
  if (c.has_free_parameters()) throw std::invalid_argument("circuit has unbound parameters");
  c.validate();
}

// Single-qubit gates are held per wire and folded into the next two-qubit
// gate on that wire, so the density-matrix backend sees only two-qubit
// channels.
std::vector<ChannelOp> fuse_channels(const Circuit& c, const NoiseModel* noise) {
  std::optional<ChannelTable> channels;
  if (noise != nullptr) channels.emplace(*noise, c.num_qubits);
  std::vector<std::optional<Matrix2>> pending(static_cast<std::size_t>(c.num_qubits));
  std::vector<ChannelOp> ops;
  for (const Gate& g : c.ops) {
    if (g.kind == GateKind::Barrier || g.kind == GateKind::Measure) continue;
    if (!is_two_qubit(g.kind)) {
      auto& slot = pending[g.qubits[0]];
      const Matrix2 u = single_qubit_matrix(g.kind, g.param);
      slot = slot ? mul2(u, *slot) : u;
      continue;
    }
    ChannelOp op;
    op.a = g.qubits[0];
    op.b = g.qubits[1];
    op.v = two_qubit_matrix(g.kind, g.param);
    if (pending[op.a] || pending[op.b]) {
      op.v = mul4(op.v, kron(pending[op.a].value_or(kIdentity2), pending[op.b].value_or(kIdentity2)));
      pending[op.a].reset();
      pending[op.b].reset();
    }
    if (channels) {
      if (const auto* r = channels->get(g.kind, op.a)) op.relax_a = *r;
      if (const auto* r = channels->get(g.kind, op.b)) op.relax_b = *r;
    }
    ops.push_back(std::move(op));
  }
  std::vector<int> left;
  for (int w = 0; w < c.num_qubits; ++w) {
    if (pending[w]) left.push_back(w);
  }
  for (std::size_t i = 0; i < left.size(); i += 2) {
    ChannelOp op;
    op.a = left[i];
    if (i + 1 < left.size()) {
      op.b = left[i + 1];
      op.v = kron(*pending[op.a], *pending[op.b]);
    } else {
      op.b = op.a == 0 ? 1 : 0;
      op.v = kron(*pending[op.a], kIdentity2);
    }
    ops.push_back(std::move(op));
  }
  return ops;
}

std::vector<double> run_density_matrix(const Circuit& c, const NoiseModel* noise) {
  if (c.num_qubits == 1) {
    // Too narrow for two-qubit channels; only single-qubit gates can occur.
    DensityMatrix rho(1);
    for (const Gate& g : c.ops) {
      if (g.kind != GateKind::Barrier && g.kind != GateKind::Measure) {
        rho.apply_1q(single_qubit_matrix(g.kind, g.param), g.qubits[0]);
      }
    }
    return rho.diagonal();
  }
  return evolve_distribution(c.num_qubits, fuse_channels(c, noise));
}

Statevector run_statevector(const Circuit& c) {
  Statevector sv(c.num_qubits);
  sv.apply_circuit(c);
  return sv;
}

// Samples one Kraus branch of the relaxation channel on wire q.
void relax_trajectory(Statevector& sv, int q, const RelaxationChannel& ch, Rng& rng) {
  auto& amp = sv.amplitudes();
  const std::size_t bit = std::size_t{1} << q;
  double p1 = 0.0;
  for (std::size_t i = 0; i < amp.size(); ++i) {
    if (i & bit) p1 += std::norm(amp[i]);
  }
  const double r = uniform01(rng);
  const double p_decay = ch.gamma * p1;
  if (r < p_decay) {
    for (std::size_t i = 0; i < amp.size(); ++i) {
      if (i & bit) continue;
      amp[i] = amp[i | bit];
      amp[i | bit] = 0.0;
    }
  } else {
    const double pz = ch.dephasing_probability();
    const double p_keep = (1.0 - pz) * (1.0 - p_decay);
    const double damp = std::sqrt(1.0 - ch.gamma);
    const double sign = (r < p_decay + p_keep) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < amp.size(); ++i) {
      if (i & bit) amp[i] *= sign * damp;
    }
  }
  sv.normalize();
}

std::size_t sample_index(const std::vector<double>& cdf, double u) {
  const double target = u * cdf.back();
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
  return std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
}

std::string index_to_bits(std::size_t idx, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int k = 0; k < n; ++k) {
    if ((idx >> k) & 1U) s[k] = '1';
  }
  return s;
}

ShotResult run_trajectories(const Circuit& c, const NoiseModel& noise, long shots, std::uint64_t seed,
                            unsigned threads) {
  ChannelTable probe(noise, c.num_qubits);
  // Precompute the channel for every noisy gate so workers share read-only data.
  std::vector<std::pair<const RelaxationChannel*, const RelaxationChannel*>> gate_channels(c.ops.size());
  for (std::size_t k = 0; k < c.ops.size(); ++k) {
    const Gate& g = c.ops[k];
    if (is_two_qubit(g.kind)) gate_channels[k] = {probe.get(g.kind, g.qubits[0]), probe.get(g.kind, g.qubits[1])};
  }
  std::vector<std::size_t> outcome(static_cast<std::size_t>(shots));
  parallel_for(
      outcome.size(),
      [&](std::size_t s) {
        Rng rng(derive_seed(seed, s));
        Statevector sv(c.num_qubits);
        for (std::size_t k = 0; k < c.ops.size(); ++k) {
          const Gate& g = c.ops[k];
          sv.apply_gate(g);
          if (gate_channels[k].first) relax_trajectory(sv, g.qubits[0], *gate_channels[k].first, rng);
          if (gate_channels[k].second) relax_trajectory(sv, g.qubits[1], *gate_channels[k].second, rng);
        }
        const auto probs = sv.probabilities();
        std::vector<double> cdf(probs.size());
        std::partial_sum(probs.begin(), probs.end(), cdf.begin());
        outcome[s] = sample_index(cdf, uniform01(rng));
      },
      threads);
  ShotResult r;
  r.shots = shots;
  r.logical_map = measurement_map(c);
  for (std::size_t idx : outcome) ++r.counts[index_to_bits(idx, c.num_qubits)];
  return r;
}

Backend resolve(const Circuit& c, const NoiseModel* noise, Backend requested) {
  const bool noisy = noise != nullptr;
  if (requested == Backend::Auto) return select_backend(c.num_qubits, noisy);
  if (noisy && requested == Backend::Statevector) {
    throw std::invalid_argument("statevector backend cannot run a noisy circuit");
  }
  const int limit = requested == Backend::Statevector     ? kStatevectorLimit
                    : requested == Backend::DensityMatrix ? kDensityMatrixLimit
                                                          : kTrajectoryLimit;
  if (c.num_qubits > limit) {
    throw std::invalid_argument(std::string(backend_name(requested)) + " backend is limited to " +
                                std::to_string(limit) + " qubits");
  }
  return requested;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Auto:
      return "auto";
    case Backend::Statevector:
      return "statevector";
    case Backend::DensityMatrix:
      return "density_matrix";
    case Backend::Trajectories:
      return "trajectories";
  }
  return "?";
}

Backend select_backend(int num_qubits, bool noisy) {
  if (num_qubits < 1) throw std::invalid_argument("circuit has no qubits");
  if (!noisy) {
    if (num_qubits <= kStatevectorLimit) return Backend::Statevector;
    throw std::invalid_argument("noiseless simulation of " + std::to_string(num_qubits) +
                                " qubits exceeds the statevector limit of " + std::to_string(kStatevectorLimit));
  }
  if (num_qubits <= kDensityMatrixLimit) return Backend::DensityMatrix;
  if (num_qubits <= kTrajectoryLimit) return Backend::Trajectories;
  throw std::invalid_argument("noisy simulation of " + std::to_string(num_qubits) +
                              " qubits exceeds the trajectory limit of " + std::to_string(kTrajectoryLimit));
}

double ObservableVector::pair(int i, int j) const {
  if (i == j) return 1.0;
  if (i > j) std::swap(i, j);
  return pairs.at(pair_index(n, i, j));
}

std::vector<double> ObservableVector::flat() const {
  std::vector<double> out(singles);
  out.insert(out.end(), pairs.begin(), pairs.end());
  return out;
}

std::size_t pair_index(int n, int i, int j) {
  if (!(0 <= i && i < j && j < n)) throw std::out_of_range("pair index requires 0 <= i < j < n");
  return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

std::vector<double> exact_distribution(const Circuit& circuit, const NoiseModel* noise, const SimOptions& options) {
  require_bound(circuit);
  switch (resolve(circuit, noise, options.backend)) {
    case Backend::Statevector:
      return run_statevector(circuit).probabilities();
    case Backend::DensityMatrix:
      return run_density_matrix(circuit, noise);
    default:
      throw std::invalid_argument("the trajectory backend has no infinite-shot mode (n = " +
                                  std::to_string(circuit.num_qubits) + ")");
  }
}

ShotResult sample_counts(const std::vector<double>& probs, int num_qubits, long shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  if (probs.size() != (std::size_t{1} << num_qubits)) throw std::invalid_argument("distribution size mismatch");
  std::vector<double> cdf(probs.size());
  std::partial_sum(probs.begin(), probs.end(), cdf.begin());
  if (!(cdf.back() > 0.0)) throw std::invalid_argument("distribution has zero mass");
  Rng rng(seed);
  std::vector<long> hits(probs.size(), 0);
  for (long s = 0; s < shots; ++s) ++hits[sample_index(cdf, uniform01(rng))];
  ShotResult r;
  r.shots = shots;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i] > 0) r.counts[index_to_bits(i, num_qubits)] = hits[i];
  }
  return r;
}

ShotResult simulate(const Circuit& circuit, const NoiseModel* noise, long shots, std::uint64_t seed,
                    const SimOptions& options) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  require_bound(circuit);
  const Backend backend = resolve(circuit, noise, options.backend);
  if (backend == Backend::Trajectories) {
    if (noise == nullptr) {
      // A trajectory without channels is a single statevector run.
      return simulate(circuit, nullptr, shots, seed, SimOptions{Backend::Statevector, options.threads});
    }
    return run_trajectories(circuit, *noise, shots, seed, options.threads);
  }
  const auto probs = backend == Backend::Statevector ? run_statevector(circuit).probabilities()
                                                     : run_density_matrix(circuit, noise);
  ShotResult r = sample_counts(probs, circuit.num_qubits, shots, seed);
  r.logical_map = measurement_map(circuit);
  return r;
}

ObservableVector observables_from_distribution(const std::vector<double>& probs, int num_qubits,
                                               const std::vector<int>& logical_map) {
  const int n = num_qubits;
  if (static_cast<int>(logical_map.size()) != n) throw std::invalid_argument("logical map size mismatch");
  ObservableVector o;
  o.n = n;
  o.singles.assign(static_cast<std::size_t>(n), 0.0);
  o.pairs.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0.0);
  // Accumulate wire-level moments, then relabel.
  std::vector<double> zw(static_cast<std::size_t>(n), 0.0);
  std::vector<double> zz(static_cast<std::size_t>(n) * n, 0.0);
  double total = 0.0;
  for (std::size_t idx = 0; idx < probs.size(); ++idx) {
    const double p = probs[idx];
    if (p == 0.0) continue;
    total += p;
    for (int a = 0; a < n; ++a) {
      const double sa = ((idx >> a) & 1U) ? -1.0 : 1.0;
      zw[a] += p * sa;
      for (int b = a + 1; b < n; ++b) {
        const double sb = ((idx >> b) & 1U) ? -1.0 : 1.0;
        zz[a * n + b] += p * sa * sb;
      }
    }
  }
  if (!(total > 0.0)) throw std::invalid_argument("distribution has zero mass");
  for (int i = 0; i < n; ++i) {
    o.singles[i] = zw[logical_map[i]] / total;
    for (int j = i + 1; j < n; ++j) {
      int a = logical_map[i];
      int b = logical_map[j];
      if (a > b) std::swap(a, b);
      o.pairs[pair_index(n, i, j)] = zz[a * n + b] / total;
    }
  }
  return o;
}

ObservableVector observables_from_counts(const ShotResult& result) {
  if (result.counts.empty() || result.shots < 1) throw std::invalid_argument("no shots to estimate from");
  const int n = static_cast<int>(result.counts.begin()->first.size());
  std::vector<int> map = result.logical_map;
  if (map.empty()) {
    map.resize(static_cast<std::size_t>(n));
    std::iota(map.begin(), map.end(), 0);
  }
  if (static_cast<int>(map.size()) != n) throw std::invalid_argument("logical map size mismatch");
  ObservableVector o;
  o.n = n;
  o.singles.assign(static_cast<std::size_t>(n), 0.0);
  o.pairs.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0.0);
  long total = 0;
  std::vector<double> s(static_cast<std::size_t>(n));
  for (const auto& [bits, count] : result.counts) {
    if (static_cast<int>(bits.size()) != n) throw std::invalid_argument("inconsistent bitstring lengths");
    total += count;
    const double w = static_cast<double>(count);
    for (int v = 0; v < n; ++v) s[v] = bits[map[v]] == '1' ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) {
      o.singles[i] += w * s[i];
      for (int j = i + 1; j < n; ++j) o.pairs[pair_index(n, i, j)] += w * s[i] * s[j];
    }
  }
  if (total != result.shots) throw std::invalid_argument("counts do not sum to the shot total");
  for (auto& x : o.singles) x /= static_cast<double>(total);
  for (auto& x : o.pairs) x /= static_cast<double>(total);
  return o;
}

std::map<std::string, long> logical_counts(const ShotResult& result) {
  std::map<std::string, long> out;
  for (const auto& [bits, count] : result.counts) {
    std::string logical(bits.size(), '0');
    for (std::size_t v = 0; v < bits.size(); ++v) {
      logical[v] = result.logical_map.empty() ? bits[v] : bits[result.logical_map[v]];
    }
    out[logical] += count;
  }
  return out;
}

nlohmann::json to_json(const ShotResult& r) {
  return {{"shots", r.shots}, {"logical_map", r.logical_map}, {"counts", r.counts}};
}

ShotResult shot_result_from_json(const nlohmann::json& j) {
  ShotResult r;
  r.shots = j.at("shots").get<long>();
  r.logical_map = j.value("logical_map", std::vector<int>{});
  r.counts = j.at("counts").get<std::map<std::string, long>>();
  return r;
}

}  // namespace swapqaoa
