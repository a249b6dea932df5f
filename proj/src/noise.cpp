#include "swapqaoa/noise.hpp"

#include "swapqaoa/common.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace swapqaoa {

double NoiseModel::duration_ns(GateKind kind) const {
  const auto it = gate_durations_ns.find(kind);
  return it == gate_durations_ns.end() ? 0.0 : it->second;
}

void NoiseModel::validate() const {
  if (t1_us.size() != t2_us.size()) throw std::invalid_argument("T1 and T2 lists differ in length");
  for (std::size_t q = 0; q < t1_us.size(); ++q) {
    if (!(t1_us[q] > 0.0) || !(t2_us[q] > 0.0)) {
      throw std::invalid_argument("qubit " + std::to_string(q) + " has a non-positive T1 or T2");
    }
    if (t2_us[q] > 2.0 * t1_us[q]) {
      throw std::invalid_argument("qubit " + std::to_string(q) + " violates T2 <= 2 T1");
    }
  }
  for (const auto& [kind, d] : gate_durations_ns) {
    if (d < 0.0) throw std::invalid_argument("negative duration for " + std::string(gate_name(kind)));
  }
}

NoiseModel sample_noise_model(int n, std::uint64_t seed, const NoiseSampling& params) {
  if (n < 1) throw std::invalid_argument("noise model needs at least one qubit");
  Rng rng(seed);
  std::normal_distribution<double> normal(params.mean_us, params.stddev_ns * 1e-3);
  NoiseModel m;
  for (int q = 0; q < n; ++q) {
    const double t1 = params.stddev_ns > 0.0 ? normal(rng) : params.mean_us;
    const double t2 = params.stddev_ns > 0.0 ? normal(rng) : params.mean_us;
    m.t1_us.push_back(t1);
    m.t2_us.push_back(std::min(t2, 2.0 * t1));
  }
  m.gate_durations_ns = {{GateKind::CX, params.two_qubit_ns},
                         {GateKind::ECR, params.two_qubit_ns},
                         {GateKind::SWAP, 3.0 * params.two_qubit_ns},
                         {GateKind::RZZ, 2.0 * params.two_qubit_ns}};
  m.noisy_kinds = {GateKind::CX, GateKind::ECR, GateKind::SWAP, GateKind::RZZ};
  m.validate();
  return m;
}

RelaxationChannel RelaxationChannel::make(double t1, double t2, double t) {
  if (!(t1 > 0.0) || !(t2 > 0.0)) throw std::invalid_argument("relaxation times must be positive");
  if (t2 > 2.0 * t1) throw std::invalid_argument("thermal relaxation requires T2 <= 2 T1");
  if (t < 0.0) throw std::invalid_argument("relaxation duration must be non-negative");
  return {1.0 - std::exp(-t / t1), std::exp(-t / t2)};
}

double RelaxationChannel::dephasing_probability() const {
  // Amplitude damping alone leaves coherence sqrt(1 - gamma); a Z flip with
  // probability pz scales it by (1 - 2 pz).
  const double damped = std::sqrt(1.0 - gamma);
  if (damped <= 0.0) return 0.0;
  return std::clamp(0.5 * (1.0 - coherence / damped), 0.0, 0.5);
}

std::array<Matrix2, 3> RelaxationChannel::kraus() const {
  const double pz = dephasing_probability();
  const double keep = std::sqrt(1.0 - gamma);
  const double a = std::sqrt(1.0 - pz);
  const double b = std::sqrt(pz);
  return {Matrix2{a, 0.0, 0.0, a * keep}, Matrix2{b, 0.0, 0.0, -b * keep},
          Matrix2{0.0, std::sqrt(gamma), 0.0, 0.0}};
}

nlohmann::json to_json(const NoiseModel& noise) {
  nlohmann::json durations = nlohmann::json::object();
  for (const auto& [kind, d] : noise.gate_durations_ns) durations[std::string(gate_name(kind))] = d;
  std::vector<std::string> kinds;
  for (GateKind k : noise.noisy_kinds) kinds.emplace_back(gate_name(k));
  return {{"t1_us", noise.t1_us}, {"t2_us", noise.t2_us}, {"gate_durations_ns", durations}, {"noisy_kinds", kinds}};
}

NoiseModel noise_from_json(const nlohmann::json& j) {
  NoiseModel m;
  m.t1_us = j.at("t1_us").get<std::vector<double>>();
  m.t2_us = j.at("t2_us").get<std::vector<double>>();
  for (const auto& [name, d] : j.at("gate_durations_ns").items()) {
    m.gate_durations_ns[gate_kind_from_name(name)] = d.get<double>();
  }
  for (const auto& name : j.at("noisy_kinds")) m.noisy_kinds.insert(gate_kind_from_name(name.get<std::string>()));
  m.validate();
  return m;
}

}  // namespace swapqaoa
